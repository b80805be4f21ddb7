#pragma once

// Backward pentadiagonal systems: Phat = P M with M the reversal
// permutation, so the bands run along the anti-diagonal. Since M^-1 = M,
// Phat v = y is solved by P x = y followed by v = M x.

#include <algorithm>
#include <span>
#include <stdexcept>

#include "penta/core.hpp"
#include "penta/ptrans.hpp"
#include "penta/sptrans.hpp"

namespace penta {

/// Stored through its forward companion P; entry (i, j) of Phat is entry
/// (i, n-1-j) of P.
template <class T>
class BackwardPentaMatrix {
public:
    explicit BackwardPentaMatrix(PentaMatrix<T> companion) : companion_(std::move(companion)) {}

    [[nodiscard]] std::size_t order() const noexcept { return companion_.order(); }
    [[nodiscard]] const PentaMatrix<T>& companion() const noexcept { return companion_; }
    [[nodiscard]] T entry(std::size_t row, std::size_t col) const {
        return companion_.entry(row, order() - 1 - col);
    }

private:
    PentaMatrix<T> companion_;
};

/// M x: entry i moves to n-1-i.
template <class T>
[[nodiscard]] Vec<T> reverse_permutation_apply(std::span<const T> x) {
    return Vec<T>(x.rbegin(), x.rend());
}

/// (-1)^(n(n-1)/2), the determinant of the order-n reversal permutation.
[[nodiscard]] constexpr int reversal_sign(std::size_t n) noexcept {
    return (n % 4 == 2 || n % 4 == 3) ? -1 : 1;
}

namespace detail {

template <class Report>
void to_backward(Report& report, std::size_t n) {
    std::reverse(report.solution.begin(), report.solution.end());
    if (reversal_sign(n) < 0) report.determinant = -report.determinant;
}

}  // namespace detail

/// Solves Phat v = y with PTRANS-I or PTRANS-II on the companion. The
/// report's determinant is det(Phat).
template <class S>
[[nodiscard]] SolveReport<S> solve_backward(const BackwardPentaMatrix<S>& Phat, std::span<const S> y,
                                            Algorithm algorithm, const SolveOptions& opts = {}) {
    SolveReport<S> report;
    switch (algorithm) {
        case Algorithm::ptrans1: report = solve_ptrans1(Phat.companion(), y, opts); break;
        case Algorithm::ptrans2: report = solve_ptrans2(Phat.companion(), y, opts); break;
        default: throw std::invalid_argument("solve_backward: use solve_backward_symbolic for SPTRANS");
    }
    detail::to_backward(report, Phat.order());
    return report;
}

/// Symbolic counterpart of solve_backward (SPTRANS-I or SPTRANS-II).
[[nodiscard]] inline SymbolicReport solve_backward_symbolic(const BackwardPentaMatrix<BigRational>& Phat,
                                                            std::span<const BigRational> y,
                                                            Algorithm algorithm) {
    SymbolicReport report;
    switch (algorithm) {
        case Algorithm::sptrans1: report = sptrans1(Phat.companion(), y); break;
        case Algorithm::sptrans2: report = sptrans2(Phat.companion(), y); break;
        default: throw std::invalid_argument("solve_backward_symbolic: use solve_backward for PTRANS");
    }
    detail::to_backward(report, Phat.order());
    std::reverse(report.expressions.begin(), report.expressions.end());
    if (reversal_sign(Phat.order()) < 0) report.determinant_function = -report.determinant_function;
    return report;
}

template <class S>
[[nodiscard]] S determinant(const BackwardPentaMatrix<S>& Phat) {
    S det = determinant(Phat.companion());
    if (reversal_sign(Phat.order()) < 0) det = -det;
    return det;
}

}  // namespace penta
