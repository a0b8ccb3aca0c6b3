#pragma once

#include "sheafloc/partition.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sheafloc {

/// Weights (w1, w2, w3) of the three-torus one-parameter subgroup. The
/// condition w3 > w2 - w1 > 0 is all the separation the sign analysis needs,
/// so any valid triple gives the same negative-weight dimension.
class WeightTriple {
public:
    /// (1, 2, 10)
    WeightTriple();
    /// Throws std::invalid_argument unless all positive and w3 > w2 - w1 > 0.
    WeightTriple(std::int64_t w1, std::int64_t w2, std::int64_t w3);

    std::int64_t w1() const noexcept { return w1_; }
    std::int64_t w2() const noexcept { return w2_; }
    std::int64_t w3() const noexcept { return w3_; }

    friend bool operator==(const WeightTriple&, const WeightTriple&) = default;

private:
    std::int64_t w1_, w2_, w3_;
};

/// Torus representation as weight -> multiplicity. Only positive
/// multiplicities are stored.
class WeightMultiset {
public:
    void add(std::int64_t weight, std::uint64_t multiplicity);
    const std::map<std::int64_t, std::uint64_t>& entries() const noexcept { return entries_; }
    std::uint64_t total_multiplicity() const noexcept;
    bool empty() const noexcept { return entries_.empty(); }

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    std::map<std::int64_t, std::uint64_t> entries_;
};

struct TwistWeight {
    std::int64_t twist;   // exponent e of the summand L^e
    std::int64_t weight;
    friend bool operator==(const TwistWeight&, const TwistWeight&) = default;
};

/// pi_* O(k sigma) = sum_{j=0}^{k} L^{k-j}, and under the inverse action the
/// summand L^{k-j} has weight k-j. Entries are listed for j = 0..k.
std::vector<TwistWeight> pushforward_weights(unsigned k);

/// Weight of I_D^k / I_D^{k+1} = L^k under the inverse action.
std::int64_t conormal_weight(unsigned k);

/// The four weight families of the normal directions at a fixed point,
/// labelled by which group they come from.
enum class WeightFamily {
    QuotientBeta,   // H^0(O/I2) twist:  w2 - w1 - w3 (m + i),     mult b_j
    ExtBeta,        // Ext^2(O/I2, O):   w1 - w2 + w3 (m + i + 1), mult b_j
    ExtAlpha,       // Ext^2(O/I1, O):   w2 - w1 + w3 (i + 1 - m), mult a_j
    QuotientAlpha,  // H^0(O/I1) twist:  w1 - w2 + w3 (m - i),     mult a_j
};

/// One (j, i) term of a family; m = l' + 2l.
struct WeightTerm {
    WeightFamily family;
    unsigned part;  // j
    unsigned index; // i, 0 <= i < j
    std::int64_t weight;
    std::uint64_t multiplicity;
};

/// Every term of the four families, for each part size j present and each
/// 0 <= i < j. Throws std::overflow_error if a weight leaves int64 range.
std::vector<WeightTerm> ext_weight_terms(const Partition& alpha, const Partition& beta, std::int64_t l,
                                         std::int64_t lprime, const WeightTriple& w);

/// The terms of ext_weight_terms merged by weight.
WeightMultiset ext_weight_families(const Partition& alpha, const Partition& beta, std::int64_t l,
                                   std::int64_t lprime, const WeightTriple& w);

/// Total multiplicity of strictly negative weights.
std::uint64_t negative_count(const WeightMultiset& ms);

}  // namespace sheafloc
