#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <optional>

namespace sheafloc {

using BigInt = boost::multiprecision::cpp_int;

/// Finitely supported graded dimension vector, i.e. a Poincare polynomial
/// sum_k dim_k t^k with exact non-negative coefficients. Zero entries are never
/// stored, so the default value is the zero space.
class GradedDims {
public:
    using Storage = std::map<unsigned, BigInt>;

    GradedDims() = default;

    /// Dense coefficients starting at degree 0: {1, 2, 1} is 1 + 2t + t^2.
    GradedDims(std::initializer_list<unsigned long long> dense);

    /// One-dimensional space concentrated in degree 0.
    static GradedDims unit();

    /// Adds `dim` to degree `degree`. Throws std::invalid_argument if dim < 0.
    void add(unsigned degree, const BigInt& dim);

    /// Dimension in `degree`; zero outside the support.
    BigInt operator[](unsigned degree) const;

    const Storage& entries() const noexcept { return dims_; }
    bool is_zero() const noexcept { return dims_.empty(); }

    /// Highest degree with nonzero dimension; nullopt for the zero space.
    std::optional<unsigned> top_degree() const;

    friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
    Storage dims_;
};

GradedDims direct_sum(const GradedDims& x, const GradedDims& y);

/// Kunneth product: result[k] = sum_j x[j] * y[k - j].
GradedDims tensor(const GradedDims& x, const GradedDims& y);

/// Moves every class up by 2 * codim degrees (complex codimension to real
/// homological degree).
GradedDims shift(const GradedDims& x, unsigned codim);

/// sum_k (-1)^k dim_k
BigInt euler_char(const GradedDims& x);

/// sum_k dim_k
BigInt total_rank(const GradedDims& x);

inline GradedDims operator+(const GradedDims& x, const GradedDims& y) { return direct_sum(x, y); }
inline GradedDims operator*(const GradedDims& x, const GradedDims& y) { return tensor(x, y); }

}  // namespace sheafloc
