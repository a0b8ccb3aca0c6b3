#include "sheafloc/space_homology.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sheafloc {

GradedDims betti_projective(unsigned n) {
    GradedDims out;
    for (unsigned k = 0; k <= n; ++k) out.add(2 * k, 1);
    return out;
}

GradedDims betti_curve(CurveGenus genus) {
    GradedDims out;
    out.add(0, 1);
    out.add(1, BigInt(2) * genus.g);
    out.add(2, 1);
    return out;
}

namespace {

// Power series in q truncated after q^order, coefficients dense polynomials in t.
using TPoly = std::vector<BigInt>;
using QSeries = std::vector<TPoly>;

TPoly poly_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void poly_add_into(TPoly& acc, const TPoly& x) {
    if (acc.size() < x.size()) acc.resize(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) acc[i] += x[i];
}

QSeries series_mul(const QSeries& a, const QSeries& b, unsigned order) {
    QSeries out(order + 1);
    for (unsigned i = 0; i <= order && i < a.size(); ++i) {
        for (unsigned j = 0; i + j <= order && j < b.size(); ++j) {
            poly_add_into(out[i + j], poly_mul(a[i], b[j]));
        }
    }
    return out;
}

}  // namespace

GradedDims macdonald_sym(unsigned n, CurveGenus genus) {
    if (n > kMaxWeight) {
        throw std::invalid_argument("symmetric power " + std::to_string(n) + " exceeds supported maximum " +
                                    std::to_string(kMaxWeight));
    }
    const unsigned order = n;

    // (1 + q t)^{2g}: coefficient of q^k is binom(2g, k) t^k.
    QSeries numerator(order + 1);
    BigInt binom = 1;
    for (unsigned k = 0; k <= order && k <= 2 * genus.g; ++k) {
        numerator[k].assign(k + 1, 0);
        numerator[k][k] = binom;
        binom = binom * (2 * genus.g - k) / (k + 1);
    }

    // 1 / (1 - q) = sum_k q^k
    QSeries geometric(order + 1, TPoly{1});

    // 1 / (1 - q t^2) = sum_k q^k t^{2k}
    QSeries geometric_t2(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
        geometric_t2[k].assign(2 * k + 1, 0);
        geometric_t2[k][2 * k] = 1;
    }

    const QSeries product = series_mul(series_mul(numerator, geometric, order), geometric_t2, order);

    GradedDims out;
    const TPoly& coeff = product[n];
    for (std::size_t k = 0; k < coeff.size(); ++k) out.add(static_cast<unsigned>(k), coeff[k]);
    return out;
}

GradedDims betti_sym_component(const Partition& alpha, const Partition& beta) {
    const GradedDims curve = betti_curve(kEllipticCurve);
    GradedDims out = GradedDims::unit();
    for (const Partition* p : {&alpha, &beta}) {
        for (unsigned m : p->multiplicities()) {
            if (m == 0) continue;
            out = tensor(out, tensor(betti_projective(m - 1), curve));
        }
    }
    return out;
}

}  // namespace sheafloc
