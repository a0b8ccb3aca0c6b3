#include "sheafloc/weights.hpp"

#include <stdexcept>
#include <string>

namespace sheafloc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("weight overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("weight overflow");
    return r;
}

}  // namespace

WeightTriple::WeightTriple() : WeightTriple(1, 2, 10) {}

WeightTriple::WeightTriple(std::int64_t w1, std::int64_t w2, std::int64_t w3) : w1_(w1), w2_(w2), w3_(w3) {
    if (w1 <= 0 || w2 <= 0 || w3 <= 0 || !(w2 - w1 > 0) || !(w3 > w2 - w1)) {
        throw std::invalid_argument("invalid weight triple (" + std::to_string(w1) + "," + std::to_string(w2) +
                                    "," + std::to_string(w3) + "): need positive w and w3 > w2 - w1 > 0");
    }
}

void WeightMultiset::add(std::int64_t weight, std::uint64_t multiplicity) {
    if (multiplicity == 0) return;
    entries_[weight] += multiplicity;
}

std::uint64_t WeightMultiset::total_multiplicity() const noexcept {
    std::uint64_t n = 0;
    for (const auto& [w, m] : entries_) n += m;
    return n;
}

std::vector<TwistWeight> pushforward_weights(unsigned k) {
    std::vector<TwistWeight> out;
    out.reserve(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        const auto e = static_cast<std::int64_t>(k - j);
        out.push_back({e, e});
    }
    return out;
}

std::int64_t conormal_weight(unsigned k) { return static_cast<std::int64_t>(k); }

std::vector<WeightTerm> ext_weight_terms(const Partition& alpha, const Partition& beta, std::int64_t l,
                                         std::int64_t lprime, const WeightTriple& w) {
    const std::int64_t m = checked_add(lprime, checked_mul(2, l));
    const std::int64_t gap = w.w2() - w.w1();
    auto at = [&](std::int64_t base, std::int64_t coeff) { return checked_add(base, checked_mul(w.w3(), coeff)); };

    std::vector<WeightTerm> out;
    for (unsigned j = 1; j <= beta.max_part(); ++j) {
        const std::uint64_t bj = beta.multiplicity(j);
        if (bj == 0) continue;
        for (unsigned i = 0; i < j; ++i) {
            out.push_back({WeightFamily::QuotientBeta, j, i, at(gap, checked_mul(-1, checked_add(m, i))), bj});
            out.push_back({WeightFamily::ExtBeta, j, i, at(-gap, checked_add(m, i + 1)), bj});
        }
    }
    for (unsigned j = 1; j <= alpha.max_part(); ++j) {
        const std::uint64_t aj = alpha.multiplicity(j);
        if (aj == 0) continue;
        for (unsigned i = 0; i < j; ++i) {
            out.push_back({WeightFamily::ExtAlpha, j, i, at(gap, checked_add(std::int64_t{i} + 1, checked_mul(-1, m))), aj});
            out.push_back({WeightFamily::QuotientAlpha, j, i, at(-gap, checked_add(m, -std::int64_t{i})), aj});
        }
    }
    return out;
}

WeightMultiset ext_weight_families(const Partition& alpha, const Partition& beta, std::int64_t l,
                                   std::int64_t lprime, const WeightTriple& w) {
    WeightMultiset ms;
    for (const auto& term : ext_weight_terms(alpha, beta, l, lprime, w)) ms.add(term.weight, term.multiplicity);
    return ms;
}

std::uint64_t negative_count(const WeightMultiset& ms) {
    std::uint64_t n = 0;
    for (const auto& [weight, mult] : ms.entries()) {
        if (weight < 0) n += mult;
    }
    return n;
}

}  // namespace sheafloc
