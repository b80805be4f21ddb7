#pragma once

// Dense Gaussian elimination, used as ground truth by the test suites.
// O(n^3); never on a production path.

#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "penta/backward.hpp"
#include "penta/core.hpp"

namespace penta::oracle {

template <class T>
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), entries_(n * n, T(0)) {}

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    T& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
    }

private:
    std::size_t n_;
    std::vector<T> entries_;
};

template <class T>
[[nodiscard]] DenseMatrix<T> densify(const PentaMatrix<T>& P) {
    DenseMatrix<T> A(P.order());
    for (std::size_t r = 0; r < P.order(); ++r)
        for (std::size_t c = 0; c < P.order(); ++c) A(r, c) = P.entry(r, c);
    return A;
}

template <class T>
[[nodiscard]] DenseMatrix<T> densify(const BackwardPentaMatrix<T>& Phat) {
    DenseMatrix<T> A(Phat.order());
    for (std::size_t r = 0; r < Phat.order(); ++r)
        for (std::size_t c = 0; c < Phat.order(); ++c) A(r, c) = Phat.entry(r, c);
    return A;
}

template <class T>
[[nodiscard]] Vec<T> matvec(const DenseMatrix<T>& A, std::span<const T> x) {
    Vec<T> y(A.order(), T(0));
    for (std::size_t r = 0; r < A.order(); ++r)
        for (std::size_t c = 0; c < A.order(); ++c) y[r] += A(r, c) * x[c];
    return y;
}

namespace detail {

/// Row index of the pivot for column k: largest magnitude for floats,
/// first nonzero for exact scalars. Returns n if the column is zero.
template <class T>
std::size_t choose_pivot(const DenseMatrix<T>& A, std::size_t k) {
    const std::size_t n = A.order();
    if constexpr (std::is_floating_point_v<T>) {
        std::size_t best = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(A(r, k)) > std::abs(A(best, k))) best = r;
        return A(best, k) == T(0) ? n : best;
    } else {
        for (std::size_t r = k; r < n; ++r)
            if (!(A(r, k) == T(0))) return r;
        return n;
    }
}

}  // namespace detail

/// Solves A x = y. Throws SingularMatrix when a column has no usable pivot.
template <class T>
[[nodiscard]] Vec<T> dense_solve(DenseMatrix<T> A, std::span<const T> y) {
    const std::size_t n = A.order();
    if (y.size() != n) throw Error(Errc::dimension_mismatch, "dense_solve: rhs length");
    Vec<T> b(y.begin(), y.end());
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t piv = detail::choose_pivot(A, k);
        if (piv == n) throw SingularMatrix();
        if (piv != k) {
            A.swap_rows(piv, k);
            std::swap(b[piv], b[k]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (A(r, k) == T(0)) continue;
            const T factor = A(r, k) / A(k, k);
            for (std::size_t c = k; c < n; ++c) A(r, c) -= factor * A(k, c);
            b[r] -= factor * b[k];
        }
    }
    Vec<T> x(n, T(0));
    for (std::size_t k = n; k-- > 0;) {
        T acc = b[k];
        for (std::size_t c = k + 1; c < n; ++c) acc -= A(k, c) * x[c];
        x[k] = acc / A(k, k);
    }
    return x;
}

/// Product of the elimination pivots with the sign of the row swaps; 0 for
/// a singular matrix.
template <class T>
[[nodiscard]] T dense_det(DenseMatrix<T> A) {
    const std::size_t n = A.order();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t piv = detail::choose_pivot(A, k);
        if (piv == n) return T(0);
        if (piv != k) {
            A.swap_rows(piv, k);
            det = -det;
        }
        det *= A(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (A(r, k) == T(0)) continue;
            const T factor = A(r, k) / A(k, k);
            for (std::size_t c = k; c < n; ++c) A(r, c) -= factor * A(k, c);
        }
    }
    return det;
}

}  // namespace penta::oracle
