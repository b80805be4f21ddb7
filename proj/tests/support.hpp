#pragma once

// Shared fixtures and random generators for the test binaries.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "penta/core.hpp"
#include "penta/oracle.hpp"
#include "penta/ptrans.hpp"
#include "penta/rational.hpp"

namespace penta::testing {

using Q = BigRational;

inline Vec<Q> ints(std::initializer_list<long> values) {
    Vec<Q> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline Vec<double> doubles(const Vec<Q>& values) {
    Vec<double> out;
    for (const auto& v : values) out.push_back(v.get_d());
    return out;
}

/// 10x10 system with solution (1, ..., 10).
inline PentaMatrix<Q> counting10() {
    return PentaMatrix<Q>::from_bands(ints({1, 2, 3, -4, 5, 6, 7, -1, 1, 8}), ints({2, 2, 1, 5, -7, 3, -1, 4, 5}),
                                      ints({1, 5, -2, 1, 5, 2, 4, -3}), ints({0, 3, 2, 1, 2, 1, 2, 1, -2, 4}),
                                      ints({0, 0, 1, 3, 1, 5, 2, 2, 2, -1}));
}
inline Vec<Q> counting10_rhs() { return ints({8, 33, 8, 24, 29, 98, 99, 17, 57, 108}); }
inline Vec<Q> counting10_solution() { return ints({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}); }

/// 4x4 system with mu_2 = 0 and solution (1, 1, 1, 1).
inline PentaMatrix<Q> breakdown4() {
    return PentaMatrix<Q>::from_bands(ints({3, -2, -1, 3}), ints({2, 7, 5}), ints({1, 1}), ints({0, -3, 2, 2}),
                                      ints({0, 0, 3, 1}));
}
inline Vec<Q> breakdown4_rhs() { return ints({6, 3, 9, 6}); }

template <class T>
PentaMatrix<T> identity(std::size_t n) {
    return PentaMatrix<T>::from_bands(Vec<T>(n, T(1)), Vec<T>(n, T(0)), Vec<T>(n, T(0)), Vec<T>(n, T(0)),
                                      Vec<T>(n, T(0)));
}

struct Bands {
    Vec<Q> d, a, b, c, e;

    PentaMatrix<Q> matrix() const { return PentaMatrix<Q>::from_bands(d, a, b, c, e); }

    /// Bands of J P J, J the reversal permutation: the row order flips and
    /// the super- and sub-diagonals trade places.
    Bands flipped() const {
        auto rev = [](Vec<Q> v) { return Vec<Q>(v.rbegin(), v.rend()); };
        return Bands{rev(d), rev(c), rev(e), rev(a), rev(b)};
    }
};

inline Bands bands_of(const PentaMatrix<Q>& P) {
    auto v = [](std::span<const Q> s) { return Vec<Q>(s.begin(), s.end()); };
    return Bands{v(P.d()), v(P.a()), v(P.b()), v(P.c()), v(P.e())};
}

class Fuzzer {
public:
    explicit Fuzzer(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t order(std::size_t lo, std::size_t hi) {
        return static_cast<std::size_t>(integer(static_cast<long>(lo), static_cast<long>(hi)));
    }

    /// Integer bands with entries in [-range, range], padding zeroed.
    Bands integer_bands(std::size_t n, long range = 6) {
        Bands out;
        for (auto* band : {&out.d, &out.a, &out.b, &out.c, &out.e}) {
            band->resize(n);
            for (auto& v : *band) v = integer(-range, range);
        }
        out.a[n - 1] = 0;
        out.b[n - 2] = out.b[n - 1] = 0;
        out.c[0] = 0;
        out.e[0] = out.e[1] = 0;
        return out;
    }

    /// Strictly diagonally dominant integer bands: no zero pivots, nonsingular.
    Bands dominant_bands(std::size_t n, long range = 6) {
        Bands out = integer_bands(n, range);
        for (std::size_t i = 0; i < n; ++i) {
            const long sign = integer(0, 1) ? 1 : -1;
            out.d[i] = sign * (4 * range + 1 + integer(0, range));
        }
        return out;
    }

    Vec<Q> integer_vector(std::size_t n, long range = 9) {
        Vec<Q> out(n);
        for (auto& v : out) v = integer(-range, range);
        return out;
    }

    /// Diagonally dominant float bands with entries in [-1, 1] off the
    /// diagonal.
    PentaMatrix<double> dominant_float_matrix(std::size_t n) {
        Vec<double> d(n), a(n), b(n), c(n), e(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = real(-1, 1);
            b[i] = real(-1, 1);
            c[i] = real(-1, 1);
            e[i] = real(-1, 1);
            d[i] = (integer(0, 1) ? 1 : -1) * real(4.5, 8.0);
        }
        a[n - 1] = 0;
        b[n - 2] = b[n - 1] = 0;
        c[0] = 0;
        e[0] = e[1] = 0;
        return PentaMatrix<double>::from_bands(d, a, b, c, e);
    }

    Vec<double> real_vector(std::size_t n) {
        Vec<double> out(n);
        for (auto& v : out) v = real(-10, 10);
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Edits row k of integer bands so that the k-th forward pivot mu_k is
/// exactly zero while keeping every entry an integer. mu_k = d_k - s with
/// s linear in (e_k, c_k), so scaling those two by the denominator of s
/// makes s an integer N and d_k = N does the rest. Returns the row of the
/// first zero pivot of the result (k, or an earlier accidental one).
inline std::size_t plant_zero_mu(Bands& bands, std::size_t k) {
    std::optional<std::size_t> first_zero;
    auto record = [&first_zero](Q& pivot, std::size_t row) {
        if (!first_zero) first_zero = row;
        pivot = 1;
    };
    const Vec<Q> zeros(bands.d.size(), Q(0));
    auto f = factor_ptrans1(bands.matrix(), std::span<const Q>(zeros), record);
    if (first_zero && *first_zero <= k) return *first_zero;

    const Q s = bands.d[k] - f.mu[k];
    const mpz_class den = s.get_den();
    bands.e[k] *= den;
    bands.c[k] *= den;
    bands.d[k] = Q(s.get_num());
    return k;
}

/// As plant_zero_mu but for the backward pivot psi_k, by planting mu in the
/// flipped system.
inline std::size_t plant_zero_psi(Bands& bands, std::size_t k) {
    const std::size_t n = bands.d.size();
    Bands flipped = bands.flipped();
    const std::size_t row = plant_zero_mu(flipped, n - 1 - k);
    bands = flipped.flipped();
    return n - 1 - row;
}

template <class T>
T max_abs_diff(std::span<const T> x, std::span<const T> y) {
    T worst = 0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
}

inline double inf_norm(std::span<const double> v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double relative(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

}  // namespace penta::testing
