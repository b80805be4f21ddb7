#pragma once

// The two transformation solvers for pentadiagonal systems.
//
// PTRANS-I eliminates downwards and leaves a unit upper-triangular system
// with bands (1, alpha, beta) and right-hand side z, finished by backward
// substitution. PTRANS-II eliminates upwards and leaves a unit
// lower-triangular system with bands (phi, sigma, 1) and right-hand side w,
// finished by forward substitution. Neither pivots, so both stop at the
// first zero pivot (mu_i or psi_i).
//
// Everything is templated on the scalar so the same recurrences run on
// doubles, on exact rationals and, for the symbolic variants, on rational
// functions of p.

#include <cmath>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "penta/core.hpp"
#include "penta/rational.hpp"

namespace penta {

[[nodiscard]] inline bool is_zero(double v) noexcept { return v == 0.0; }

/// Quantities of the downward elimination, all stored as length-n arrays
/// indexed by row (0-based). Unused slots hold zero: alpha[n-1],
/// beta[n-2], beta[n-1], gamma[0].
template <class S>
struct Ptrans1Factorization {
    Vec<S> alpha, beta, z, gamma, mu;
    std::uint64_t op_count = 0;
};

/// Quantities of the upward elimination. Unused slots hold zero:
/// sigma[0], phi[0], phi[1], rho[n-1].
template <class S>
struct Ptrans2Factorization {
    Vec<S> sigma, phi, w, rho, psi;
    std::uint64_t op_count = 0;
};

struct SolveOptions {
    /// A nonzero pivot whose magnitude is below this fraction of the largest
    /// band entry is listed in SolveReport::near_zero_pivots.
    double near_zero_tolerance = 1e-300;
};

namespace detail {

struct ThrowOnZeroPivot {
    template <class S>
    void operator()(S&, std::size_t row) const {
        throw ZeroPivot(row);
    }
};

template <class S>
void check_rhs(const PentaMatrix<S>& P, std::span<const S> y) {
    if (y.size() != P.order()) {
        throw Error(Errc::dimension_mismatch, "right-hand side has " + std::to_string(y.size()) +
                                                  " entries, matrix order is " +
                                                  std::to_string(P.order()));
    }
}

template <class S>
S product(const Vec<S>& values) {
    S acc(1);
    for (const auto& v : values) acc *= v;
    return acc;
}

template <class S, class PivotT>
void flag_near_zero(const PentaMatrix<S>& P, const Vec<PivotT>& pivots, const SolveOptions& opts,
                    std::vector<std::size_t>& out) {
    if constexpr (std::is_floating_point_v<S>) {
        double scale = 0.0;
        for (auto band : {P.d(), P.a(), P.b(), P.c(), P.e()}) {
            for (double v : band) scale = std::max(scale, std::abs(v));
        }
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (std::abs(pivots[i]) < opts.near_zero_tolerance * scale) out.push_back(i);
        }
    }
}

}  // namespace detail

/// Downward elimination. `on_zero(pivot, row)` runs whenever mu_row comes
/// out exactly zero; it may throw or overwrite the pivot.
///
/// The operation count is 19n - 29 together with back_substitute_ptrans1,
/// counting each +, -, *, / once.
template <class S, class OnZeroPivot>
[[nodiscard]] Ptrans1Factorization<S> factor_ptrans1(const PentaMatrix<S>& P, std::span<const S> y,
                                                     OnZeroPivot&& on_zero) {
    detail::check_rhs(P, y);
    const std::size_t n = P.order();
    const auto d = P.d(), a = P.a(), b = P.b(), c = P.c(), e = P.e();

    Ptrans1Factorization<S> f;
    f.alpha.assign(n, S(0));
    f.beta.assign(n, S(0));
    f.z.assign(n, S(0));
    f.gamma.assign(n, S(0));
    f.mu.assign(n, S(0));
    auto& [alpha, beta, z, gamma, mu, ops] = f;

    mu[0] = d[0];
    if (is_zero(mu[0])) on_zero(mu[0], 0);
    alpha[0] = a[0] / mu[0];
    beta[0] = b[0] / mu[0];
    z[0] = y[0] / mu[0];
    ops += 3;

    gamma[1] = c[1];
    mu[1] = d[1] - alpha[0] * gamma[1];
    if (is_zero(mu[1])) on_zero(mu[1], 1);
    alpha[1] = (a[1] - beta[0] * gamma[1]) / mu[1];
    beta[1] = b[1] / mu[1];
    z[1] = (y[1] - z[0] * gamma[1]) / mu[1];
    ops += 9;

    for (std::size_t i = 2; i < n; ++i) {
        gamma[i] = c[i] - alpha[i - 2] * e[i];
        mu[i] = d[i] - beta[i - 2] * e[i] - alpha[i - 1] * gamma[i];
        if (is_zero(mu[i])) on_zero(mu[i], i);
        ops += 6;
        if (i + 2 <= n) {
            alpha[i] = (a[i] - beta[i - 1] * gamma[i]) / mu[i];
            ops += 3;
        }
        if (i + 3 <= n) {
            beta[i] = b[i] / mu[i];
            ops += 1;
        }
        z[i] = (y[i] - z[i - 2] * e[i] - z[i - 1] * gamma[i]) / mu[i];
        ops += 5;
    }
    return f;
}

template <class S>
[[nodiscard]] Ptrans1Factorization<S> factor_ptrans1(const PentaMatrix<S>& P, std::span<const S> y) {
    return factor_ptrans1(P, y, detail::ThrowOnZeroPivot{});
}

/// Solves the unit upper-triangular system left by factor_ptrans1.
template <class S>
[[nodiscard]] Vec<S> back_substitute_ptrans1(const Ptrans1Factorization<S>& f,
                                             std::uint64_t& ops) {
    const std::size_t n = f.z.size();
    Vec<S> x(n);
    x[n - 1] = f.z[n - 1];
    x[n - 2] = f.z[n - 2] - f.alpha[n - 2] * x[n - 1];
    ops += 2;
    for (std::size_t i = n - 2; i-- > 0;) {
        x[i] = f.z[i] - f.alpha[i] * x[i + 1] - f.beta[i] * x[i + 2];
        ops += 4;
    }
    return x;
}

/// Upward elimination; mirror image of factor_ptrans1.
template <class S, class OnZeroPivot>
[[nodiscard]] Ptrans2Factorization<S> factor_ptrans2(const PentaMatrix<S>& P, std::span<const S> y,
                                                     OnZeroPivot&& on_zero) {
    detail::check_rhs(P, y);
    const std::size_t n = P.order();
    const auto d = P.d(), a = P.a(), b = P.b(), c = P.c(), e = P.e();

    Ptrans2Factorization<S> f;
    f.sigma.assign(n, S(0));
    f.phi.assign(n, S(0));
    f.w.assign(n, S(0));
    f.rho.assign(n, S(0));
    f.psi.assign(n, S(0));
    auto& [sigma, phi, w, rho, psi, ops] = f;

    const std::size_t last = n - 1;
    psi[last] = d[last];
    if (is_zero(psi[last])) on_zero(psi[last], last);
    sigma[last] = c[last] / psi[last];
    phi[last] = e[last] / psi[last];
    w[last] = y[last] / psi[last];
    ops += 3;

    const std::size_t k = n - 2;
    rho[k] = a[k];
    psi[k] = d[k] - sigma[last] * rho[k];
    if (is_zero(psi[k])) on_zero(psi[k], k);
    sigma[k] = (c[k] - phi[last] * rho[k]) / psi[k];
    phi[k] = e[k] / psi[k];
    w[k] = (y[k] - w[last] * rho[k]) / psi[k];
    ops += 9;

    for (std::size_t i = n - 2; i-- > 0;) {
        rho[i] = a[i] - sigma[i + 2] * b[i];
        psi[i] = d[i] - phi[i + 2] * b[i] - sigma[i + 1] * rho[i];
        if (is_zero(psi[i])) on_zero(psi[i], i);
        ops += 6;
        if (i >= 1) {
            sigma[i] = (c[i] - phi[i + 1] * rho[i]) / psi[i];
            ops += 3;
        }
        if (i >= 2) {
            phi[i] = e[i] / psi[i];
            ops += 1;
        }
        w[i] = (y[i] - w[i + 2] * b[i] - w[i + 1] * rho[i]) / psi[i];
        ops += 5;
    }
    return f;
}

template <class S>
[[nodiscard]] Ptrans2Factorization<S> factor_ptrans2(const PentaMatrix<S>& P, std::span<const S> y) {
    return factor_ptrans2(P, y, detail::ThrowOnZeroPivot{});
}

/// Solves the unit lower-triangular system left by factor_ptrans2.
template <class S>
[[nodiscard]] Vec<S> forward_substitute_ptrans2(const Ptrans2Factorization<S>& f,
                                                std::uint64_t& ops) {
    const std::size_t n = f.w.size();
    Vec<S> x(n);
    x[0] = f.w[0];
    x[1] = f.w[1] - f.sigma[1] * x[0];
    ops += 2;
    for (std::size_t i = 2; i < n; ++i) {
        x[i] = f.w[i] - f.sigma[i] * x[i - 1] - f.phi[i] * x[i - 2];
        ops += 4;
    }
    return x;
}

/// PTRANS-I. Throws ZeroPivot at the first vanishing mu.
template <class S>
[[nodiscard]] SolveReport<S> solve_ptrans1(const PentaMatrix<S>& P, std::span<const S> y,
                                           const SolveOptions& opts = {}) {
    auto f = factor_ptrans1(P, y);
    SolveReport<S> report;
    report.algorithm = Algorithm::ptrans1;
    report.op_count = f.op_count;
    report.solution = back_substitute_ptrans1(f, report.op_count);
    report.determinant = detail::product(f.mu);
    detail::flag_near_zero(P, f.mu, opts, report.near_zero_pivots);
    report.pivots = std::move(f.mu);
    return report;
}

/// PTRANS-II. Throws ZeroPivot at the first vanishing psi.
template <class S>
[[nodiscard]] SolveReport<S> solve_ptrans2(const PentaMatrix<S>& P, std::span<const S> y,
                                           const SolveOptions& opts = {}) {
    auto f = factor_ptrans2(P, y);
    SolveReport<S> report;
    report.algorithm = Algorithm::ptrans2;
    report.op_count = f.op_count;
    report.solution = forward_substitute_ptrans2(f, report.op_count);
    report.determinant = detail::product(f.psi);
    detail::flag_near_zero(P, f.psi, opts, report.near_zero_pivots);
    report.pivots = std::move(f.psi);
    return report;
}

}  // namespace penta
