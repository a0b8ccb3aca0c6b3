#pragma once

#include "sheafloc/graded_dims.hpp"
#include "sheafloc/partition.hpp"
#include "sheafloc/shift_index.hpp"

#include <cstdint>
#include <vector>

namespace sheafloc {

/// c1 = -l' sigma and c2 of the framed rank-two sheaves.
struct ChernInvariants {
    std::int64_t lprime = 0;
    unsigned c2 = 0;
};

/// Closed interval [min, max] of the splitting degree l. The full homology is
/// a sum over all integers l and has infinite total rank, so every query names
/// a finite window.
struct LWindow {
    std::int64_t min = 0;
    std::int64_t max = 0;

    /// Throws std::invalid_argument if min > max.
    LWindow(std::int64_t lo, std::int64_t hi);

    std::uint64_t size() const noexcept { return static_cast<std::uint64_t>(max - min) + 1; }  // max - min fits int64
};

struct FixedComponent {
    std::int64_t l = 0;
    Partition alpha;
    Partition beta;

    friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

struct ComponentContribution {
    FixedComponent component;
    unsigned shift = 0;     // complex codimension of the attracting stratum
    GradedDims homology;    // of Sym^alpha C x Sym^beta C

    /// homology moved up by 2 * shift
    GradedDims shifted() const { return sheafloc::shift(homology, shift); }
};

/// Smallest l with l >= -l'/2. The formula is evaluated below it as well; this
/// is only used to warn.
std::int64_t stratum_lower_bound(std::int64_t lprime);

/// For each l in the window (ascending), every pair from enumerate_pairs(c2).
std::vector<FixedComponent> enumerate_components(const ChernInvariants& chern, const LWindow& window);

ComponentContribution component_contribution(const FixedComponent& comp, std::int64_t lprime);

/// Per-component data in enumerate_components order.
std::vector<ComponentContribution> betti_contributions(const ChernInvariants& chern, const LWindow& window);

/// Poincare polynomial of the moduli space restricted to the l-window:
/// the direct sum over components of their homology shifted by 2 * shift.
GradedDims betti_table(const ChernInvariants& chern, const LWindow& window);

/// Generic splitting O(d) + O(d') on fibers, d > d', with the Chern data of
/// the canonical extension 0 -> I1(d sigma) B1 -> E -> I2(d' sigma) B2 -> 0.
struct SplittingType {
    std::int64_t d = 0;
    std::int64_t dprime = 0;
    std::int64_t degB1 = 0;
    std::uint64_t c2I1 = 0;
    std::uint64_t c2I2 = 0;
    int degE = 0;
    std::int64_t F = 0;   // d + d'

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
};

/// Every splitting type with
///   c2 = d degE + (F - 2d) degB1 + c2I1 + c2I2,
/// d > d' = F - d, degB1 < 0 (degE = 0) or degB1 <= 0 (degE = 1), c2I1, c2I2 >= 0.
/// Ordered by d, then degB1, then c2I1, all ascending.
/// Throws std::invalid_argument unless degE is 0 or 1 and F <= 0.
std::vector<SplittingType> splitting_types(int degE, std::int64_t F, unsigned c2);

}  // namespace sheafloc
