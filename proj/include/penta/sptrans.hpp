#pragma once

// Symbolic rescue of the transformation solvers.
//
// The recurrences run over rational functions of an indeterminate p. A pivot
// that comes out identically zero is replaced by p, which amounts to solving
// with d_i + p in that row; the solution and determinant are then evaluated
// at p = 0. For a nonsingular matrix both are continuous at 0, so the
// result is the exact answer of the original system.

#include <span>

#include "penta/core.hpp"
#include "penta/ratfun.hpp"

namespace penta {

struct SymbolicReport : SolveReport<BigRational, RationalFunction> {
    /// Solution components as functions of p, before p = 0 is substituted.
    Vec<RationalFunction> expressions;
    /// Product of the pivots as a function of p.
    RationalFunction determinant_function;
};

/// Symbolic PTRANS-I. Throws SingularMatrix when the determinant vanishes or
/// a solution component has a pole at p = 0.
[[nodiscard]] SymbolicReport sptrans1(const PentaMatrix<BigRational>& P, std::span<const BigRational> y);

/// Symbolic PTRANS-II, same contract as sptrans1.
[[nodiscard]] SymbolicReport sptrans2(const PentaMatrix<BigRational>& P, std::span<const BigRational> y);

/// Doubles are taken at their exact binary value.
[[nodiscard]] PentaMatrix<BigRational> to_exact(const PentaMatrix<double>& P);
[[nodiscard]] Vec<BigRational> to_exact(std::span<const double> v);
[[nodiscard]] PentaMatrix<double> to_double(const PentaMatrix<BigRational>& P);
[[nodiscard]] Vec<double> to_double(std::span<const BigRational> v);

/// det(P) as the product of the PTRANS-I pivots, falling back to the
/// PTRANS-II pivots and then to the symbolic product evaluated at p = 0.
/// Throws SingularMatrix only when that last step gives zero.
[[nodiscard]] double determinant(const PentaMatrix<double>& P);
[[nodiscard]] BigRational determinant(const PentaMatrix<BigRational>& P);

}  // namespace penta
