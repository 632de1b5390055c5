#pragma once

#include "cdoalg/numeric.hpp"

#include <optional>

namespace cdoalg {

// Smith decomposition L*A*R = D with L,R unimodular and D diagonal with
// nonnegative entries d1 | d2 | ... .
struct SmithForm {
    IMat d, l, r;
};
SmithForm smith_form(const IMat& a);

// Diagonal invariant factors of a (zeros included up to min(rows, cols)).
IVec elementary_divisors(const IMat& a);

// Row-style Hermite normal form of the lattice spanned by the rows of a:
// canonical basis, one row per lattice dimension.
IMat hnf_rows(const IMat& a);

// Basis of the integer kernel {x : a x = 0} (saturated sublattice), one basis
// vector per row of the result.
IMat integer_kernel(const IMat& a);

// Basis (rows) of {x in Z^n : K x in Z^m} for a rational matrix K with n
// columns. Requires n > 0; full-rank result (the set always spans Q^n).
IMat rational_preimage_lattice(const QMat& k);

// Solve a x = b over Q (a square nonsingular); nullopt if singular.
std::optional<QVec> solve_rational(const QMat& a, const QVec& b);

QMat rational_inverse(const QMat& a); // throws precondition_error if singular
Rat rational_det(const QMat& a);

// |coker| of the square full-rank integer matrix whose rows span a finite
// index sublattice: product of elementary divisors.
Int lattice_index(const IMat& sublattice_basis_rows);

} // namespace cdoalg
