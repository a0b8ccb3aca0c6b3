#pragma once

#include "sheafloc/partition.hpp"
#include "sheafloc/weights.hpp"

#include <cstdint>
#include <string>

namespace sheafloc {

/// Labels a fixed component (l, alpha, beta) of the moduli space with
/// c1 = -l' sigma.
struct ShiftInput {
    Partition alpha;
    Partition beta;
    std::int64_t l = 0;
    std::int64_t lprime = 0;

    friend bool operator==(const ShiftInput&, const ShiftInput&) = default;
};

std::string to_string(const ShiftInput& in);

/// |p| - l(p): negative-normal rank of the Hilbert scheme fixed point.
unsigned hilbert_part(const Partition& p);

/// Complex codimension of the attracting stratum of the component, in closed form:
///
///   [|a| - l(a) + sum_{j>i>=0} a_j (1 - delta(l'+2l-i-1, 0))]
/// + [|b| - l(b) + sum_{j>i>=0} b_j (1 - delta(l'+2l+i, 0))]
///
/// with j running over part sizes and i over 0..j-1.
unsigned shift_closed(const ShiftInput& in);

/// Value of shift_closed once every delta vanishes:
/// 2|alpha| - l(alpha) + 2|beta| - l(beta). Reached exactly when
/// m = l' + 2l avoids [1, max part of alpha] and [1 - max part of beta, 0].
unsigned stable_shift(const Partition& alpha, const Partition& beta);

/// True when (l, l') lies in the stable tail described above.
bool in_stable_tail(const ShiftInput& in);

/// The same quantity obtained by literally counting negative weights of the
/// four normal-direction families for the triple `w`, plus the two Hilbert
/// scheme parts. Shares no code with shift_closed.
unsigned shift_oracle(const ShiftInput& in, const WeightTriple& w);

}  // namespace sheafloc
