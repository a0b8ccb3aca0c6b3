#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sheafloc {

/// Largest partition weight accepted anywhere in the library.
inline constexpr unsigned kMaxWeight = 64;

/// Integer partition stored by multiplicities: multiplicity(i) is the number
/// of parts of size i. The multiplicity vector never carries trailing zeros,
/// so structural equality is partition equality.
class Partition {
public:
    Partition() = default;

    /// `mult[k]` is the number of parts of size k+1. Trailing zeros are
    /// trimmed. Throws std::invalid_argument if the weight exceeds kMaxWeight.
    explicit Partition(std::vector<unsigned> mult);

    /// Builds from a list of positive parts in any order.
    static Partition from_parts(const std::vector<unsigned>& parts);

    /// Number of parts of size `size` (size >= 1); zero past the largest part.
    unsigned multiplicity(unsigned size) const noexcept;

    /// Raw multiplicity vector; index k holds parts of size k+1.
    const std::vector<unsigned>& multiplicities() const noexcept { return mult_; }

    unsigned max_part() const noexcept { return static_cast<unsigned>(mult_.size()); }
    bool empty() const noexcept { return mult_.empty(); }

    /// Parts in non-increasing order.
    std::vector<unsigned> parts() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> mult_;
};

/// |p| = sum of i * multiplicity(i).
unsigned weight(const Partition& p) noexcept;

/// l(p) = sum of multiplicity(i).
unsigned length(const Partition& p) noexcept;

/// All partitions of n, each once, in decreasing-lexicographic order of their
/// non-increasing part lists (for n = 4: 4, 31, 22, 211, 1111).
/// Throws std::invalid_argument for n > kMaxWeight.
std::vector<Partition> enumerate_partitions(unsigned n);

/// All ordered pairs (alpha, beta) with |alpha| + |beta| = n. Pairs are grouped
/// by |alpha| descending from n to 0; within a group alpha then beta follow the
/// enumerate_partitions order.
std::vector<std::pair<Partition, Partition>> enumerate_pairs(unsigned n);

/// Exponent form "1^2 3^1"; the empty partition prints as "[]".
std::string to_exponent_string(const Partition& p);

/// Part-list form "[3,1,1]"; the empty partition prints as "[]".
std::string to_part_list_string(const Partition& p);

/// Accepts exponent form ("1^2 3^1", a bare "2" means 2^1), part-list form
/// ("[3,1,1]"), and the empty string or "[]" for the empty partition.
/// Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace sheafloc
