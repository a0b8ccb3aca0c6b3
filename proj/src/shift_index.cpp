#include "sheafloc/shift_index.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace sheafloc {

namespace {

unsigned delta(std::int64_t x) { return x == 0 ? 1u : 0u; }

std::int64_t twist_degree(const ShiftInput& in) {
    std::int64_t twice_l, m;
    // Keep a margin so m +- (part index) cannot wrap.
    if (__builtin_mul_overflow(in.l, 2, &twice_l) || __builtin_add_overflow(in.lprime, twice_l, &m) ||
        m > INT64_MAX / 2 || m < INT64_MIN / 2) {
        throw std::overflow_error("l' + 2l out of range");
    }
    return m;
}

}  // namespace

std::string to_string(const ShiftInput& in) {
    std::ostringstream os;
    os << "alpha=" << to_exponent_string(in.alpha) << " beta=" << to_exponent_string(in.beta) << " l=" << in.l
       << " lprime=" << in.lprime;
    return os.str();
}

unsigned hilbert_part(const Partition& p) { return weight(p) - length(p); }

unsigned shift_closed(const ShiftInput& in) {
    const std::int64_t m = twist_degree(in);

    unsigned alpha_sum = 0;
    for (unsigned j = 1; j <= in.alpha.max_part(); ++j) {
        const unsigned aj = in.alpha.multiplicity(j);
        for (unsigned i = 0; i < j; ++i) alpha_sum += aj * (1 - delta(m - i - 1));
    }
    unsigned beta_sum = 0;
    for (unsigned j = 1; j <= in.beta.max_part(); ++j) {
        const unsigned bj = in.beta.multiplicity(j);
        for (unsigned i = 0; i < j; ++i) beta_sum += bj * (1 - delta(m + i));
    }
    return hilbert_part(in.alpha) + alpha_sum + hilbert_part(in.beta) + beta_sum;
}

unsigned stable_shift(const Partition& alpha, const Partition& beta) {
    return 2 * weight(alpha) - length(alpha) + 2 * weight(beta) - length(beta);
}

bool in_stable_tail(const ShiftInput& in) {
    const std::int64_t m = twist_degree(in);
    const std::int64_t pa = in.alpha.max_part();
    const std::int64_t pb = in.beta.max_part();
    const bool alpha_stable = pa == 0 || m < 1 || m > pa;
    const bool beta_stable = pb == 0 || m < 1 - pb || m > 0;
    return alpha_stable && beta_stable;
}

unsigned shift_oracle(const ShiftInput& in, const WeightTriple& w) {
    const auto normal = ext_weight_families(in.alpha, in.beta, in.l, in.lprime, w);
    return hilbert_part(in.alpha) + hilbert_part(in.beta) + static_cast<unsigned>(negative_count(normal));
}

}  // namespace sheafloc
