#include "sheafloc/graded_dims.hpp"

#include <limits>
#include <stdexcept>

namespace sheafloc {

GradedDims::GradedDims(std::initializer_list<unsigned long long> dense) {
    unsigned degree = 0;
    for (auto d : dense) add(degree++, BigInt(d));
}

GradedDims GradedDims::unit() {
    GradedDims g;
    g.add(0, 1);
    return g;
}

void GradedDims::add(unsigned degree, const BigInt& dim) {
    if (dim < 0) throw std::invalid_argument("graded dimension must be non-negative");
    if (dim == 0) return;
    dims_[degree] += dim;
}

BigInt GradedDims::operator[](unsigned degree) const {
    const auto it = dims_.find(degree);
    return it == dims_.end() ? BigInt(0) : it->second;
}

std::optional<unsigned> GradedDims::top_degree() const {
    if (dims_.empty()) return std::nullopt;
    return dims_.rbegin()->first;
}

GradedDims direct_sum(const GradedDims& x, const GradedDims& y) {
    GradedDims out = x;
    for (const auto& [k, d] : y.entries()) out.add(k, d);
    return out;
}

GradedDims tensor(const GradedDims& x, const GradedDims& y) {
    GradedDims out;
    for (const auto& [i, a] : x.entries()) {
        for (const auto& [j, b] : y.entries()) out.add(i + j, a * b);
    }
    return out;
}

GradedDims shift(const GradedDims& x, unsigned codim) {
    if (codim > std::numeric_limits<unsigned>::max() / 4) {
        throw std::overflow_error("degree shift out of range");
    }
    GradedDims out;
    for (const auto& [k, d] : x.entries()) out.add(k + 2 * codim, d);
    return out;
}

BigInt euler_char(const GradedDims& x) {
    BigInt chi = 0;
    for (const auto& [k, d] : x.entries()) {
        if (k % 2 == 0) chi += d;
        else chi -= d;
    }
    return chi;
}

BigInt total_rank(const GradedDims& x) {
    BigInt r = 0;
    for (const auto& [k, d] : x.entries()) r += d;
    return r;
}

}  // namespace sheafloc
