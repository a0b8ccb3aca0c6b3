#include "sheafloc/moduli.hpp"

#include "sheafloc/space_homology.hpp"

#include <stdexcept>
#include <string>

namespace sheafloc {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

LWindow::LWindow(std::int64_t lo, std::int64_t hi) : min(lo), max(hi) {
    if (lo > hi) {
        throw std::invalid_argument("empty l-window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    std::int64_t span;
    if (__builtin_sub_overflow(hi, lo, &span)) {
        throw std::invalid_argument("l-window too large");
    }
}

std::int64_t stratum_lower_bound(std::int64_t lprime) { return -floor_div(lprime, 2); }

std::vector<FixedComponent> enumerate_components(const ChernInvariants& chern, const LWindow& window) {
    const auto pairs = enumerate_pairs(chern.c2);
    std::vector<FixedComponent> out;
    out.reserve(pairs.size() * window.size());
    for (std::int64_t l = window.min;; ++l) {
        for (const auto& [alpha, beta] : pairs) out.push_back({l, alpha, beta});
        if (l == window.max) break;
    }
    return out;
}

ComponentContribution component_contribution(const FixedComponent& comp, std::int64_t lprime) {
    ComponentContribution c;
    c.component = comp;
    c.shift = shift_closed({comp.alpha, comp.beta, comp.l, lprime});
    c.homology = betti_sym_component(comp.alpha, comp.beta);
    return c;
}

std::vector<ComponentContribution> betti_contributions(const ChernInvariants& chern, const LWindow& window) {
    std::vector<ComponentContribution> out;
    for (const auto& comp : enumerate_components(chern, window)) {
        out.push_back(component_contribution(comp, chern.lprime));
    }
    return out;
}

GradedDims betti_table(const ChernInvariants& chern, const LWindow& window) {
    const auto pairs = enumerate_pairs(chern.c2);
    // The homology factor does not depend on l; compute it once per pair.
    std::vector<GradedDims> homology;
    homology.reserve(pairs.size());
    for (const auto& [alpha, beta] : pairs) homology.push_back(betti_sym_component(alpha, beta));

    GradedDims total;
    for (std::int64_t l = window.min;; ++l) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const unsigned d = shift_closed({pairs[k].first, pairs[k].second, l, chern.lprime});
            total = direct_sum(total, shift(homology[k], d));
        }
        if (l == window.max) break;
    }
    return total;
}

std::vector<SplittingType> splitting_types(int degE, std::int64_t F, unsigned c2) {
    if (degE != 0 && degE != 1) {
        throw std::invalid_argument("deg E must be 0 or 1, got " + std::to_string(degE));
    }
    if (F > 0) throw std::invalid_argument("fiber degree F must be <= 0, got " + std::to_string(F));
    if (F < -(std::int64_t{1} << 40)) throw std::invalid_argument("fiber degree F out of range");

    const std::int64_t c2s = c2;
    // d > d' = F - d  <=>  2d - F > 0.
    const std::int64_t d_min = floor_div(F, 2) + 1;
    // In c2 = d degE + (2d - F)|degB1| + c2I1 + c2I2 every term past the first
    // is non-negative. degE = 0 forces |degB1| >= 1, so 2d - F <= c2; degE = 1
    // gives d <= c2 directly. Either way d is bounded and the list is finite.
    const std::int64_t d_max = degE == 0 ? floor_div(c2s + F, 2) : c2s;

    std::vector<SplittingType> out;
    for (std::int64_t d = d_min; d <= d_max; ++d) {
        const std::int64_t slope = 2 * d - F;  // = -(F - 2d) > 0
        const std::int64_t rest = c2s - d * degE;
        if (rest < 0) continue;
        const std::int64_t b_top = degE == 0 ? -1 : 0;
        const std::int64_t b_bottom = -(rest / slope);
        for (std::int64_t b = b_bottom; b <= b_top; ++b) {
            const std::int64_t remainder = rest + slope * b;
            if (remainder < 0) continue;
            for (std::int64_t c2I1 = 0; c2I1 <= remainder; ++c2I1) {
                SplittingType s;
                s.d = d;
                s.dprime = F - d;
                s.degB1 = b;
                s.c2I1 = static_cast<std::uint64_t>(c2I1);
                s.c2I2 = static_cast<std::uint64_t>(remainder - c2I1);
                s.degE = degE;
                s.F = F;
                out.push_back(s);
            }
        }
    }
    return out;
}

}  // namespace sheafloc
