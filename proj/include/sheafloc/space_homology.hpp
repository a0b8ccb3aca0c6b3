#pragma once

#include "sheafloc/graded_dims.hpp"
#include "sheafloc/partition.hpp"

namespace sheafloc {

struct CurveGenus {
    unsigned g = 1;
    friend bool operator==(CurveGenus, CurveGenus) = default;
};

inline constexpr CurveGenus kEllipticCurve{1};

/// H_*(P^n; Q): one class in each even degree 0..2n.
GradedDims betti_projective(unsigned n);

/// H_*(C; Q) for a smooth projective curve: (1, 2g, 1).
GradedDims betti_curve(CurveGenus genus);

/// Betti numbers of Sym^n C, read off as the q^n coefficient of
///   (1 + q t)^{2g} / ((1 - q)(1 - q t^2))
/// by truncated power-series expansion. Used as an independent check on the
/// fibration decomposition below. Throws std::invalid_argument for n > kMaxWeight.
GradedDims macdonald_sym(unsigned n, CurveGenus genus);

/// H_*(Sym^alpha C x Sym^beta C; Q) for the elliptic curve, as the product of
/// H_*(P^{m-1}) (x) H_*(C) over every nonzero multiplicity m of alpha and of
/// beta. Sym^m C of an elliptic curve is a P^{m-1}-bundle over C via Abel-Jacobi.
GradedDims betti_sym_component(const Partition& alpha, const Partition& beta);

}  // namespace sheafloc
