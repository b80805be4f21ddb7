#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "penta/error.hpp"

namespace penta {

template <class T>
using Vec = std::vector<T>;

/// Banded storage of an n x n pentadiagonal matrix, n >= 4.
///
/// Every band is a full-length array indexed by row (0-based):
///
///   e[i] c[i] d[i] a[i] b[i]   sit at columns i-2, i-1, i, i+1, i+2
///
/// so the slots that would fall outside the matrix are stored as zero:
/// a[n-1], b[n-2], b[n-1], c[0], e[0], e[1].
template <class T>
class PentaMatrix {
public:
    static constexpr std::size_t min_order = 4;

    /// Builds the matrix from its five bands. `d` fixes the order n. The
    /// off-diagonal bands are either full length (padding present, must be
    /// zero) or short: a has n-1 entries, b n-2 (both padded on the right),
    /// c has n-1 and e n-2 (padded on the left).
    static PentaMatrix from_bands(Vec<T> d, Vec<T> a, Vec<T> b, Vec<T> c, Vec<T> e) {
        const std::size_t n = d.size();
        if (n < min_order) {
            throw Error(Errc::invalid_order,
                        "pentadiagonal order must be at least 4, got " + std::to_string(n));
        }
        pad_band(a, n, 1, false, "a");
        pad_band(b, n, 2, false, "b");
        pad_band(c, n, 1, true, "c");
        pad_band(e, n, 2, true, "e");
        return PentaMatrix(std::move(d), std::move(a), std::move(b), std::move(c), std::move(e));
    }

    [[nodiscard]] std::size_t order() const noexcept { return d_.size(); }

    [[nodiscard]] std::span<const T> d() const noexcept { return d_; }
    [[nodiscard]] std::span<const T> a() const noexcept { return a_; }
    [[nodiscard]] std::span<const T> b() const noexcept { return b_; }
    [[nodiscard]] std::span<const T> c() const noexcept { return c_; }
    [[nodiscard]] std::span<const T> e() const noexcept { return e_; }

    /// Dense entry (row, col); zero outside the five bands.
    [[nodiscard]] T entry(std::size_t row, std::size_t col) const {
        if (row == col) return d_[row];
        if (col == row + 1) return a_[row];
        if (col == row + 2) return b_[row];
        if (row == col + 1) return c_[row];
        if (row == col + 2) return e_[row];
        return T(0);
    }

    /// Entry-wise conversion to another scalar type.
    template <class U, class F>
    [[nodiscard]] PentaMatrix<U> convert(F&& f) const {
        auto map = [&f](const Vec<T>& band) {
            Vec<U> out;
            out.reserve(band.size());
            for (const auto& v : band) out.push_back(f(v));
            return out;
        };
        return PentaMatrix<U>::from_bands(map(d_), map(a_), map(b_), map(c_), map(e_));
    }

    friend bool operator==(const PentaMatrix&, const PentaMatrix&) = default;

private:
    PentaMatrix(Vec<T> d, Vec<T> a, Vec<T> b, Vec<T> c, Vec<T> e)
        : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), e_(std::move(e)) {}

    static void pad_band(Vec<T>& band, std::size_t n, std::size_t width, bool leading,
                         std::string_view name) {
        if (band.size() == n - width) {
            band.insert(leading ? band.begin() : band.end(), width, T(0));
        } else if (band.size() != n) {
            throw Error(Errc::dimension_mismatch,
                        "band " + std::string(name) + " has " + std::to_string(band.size()) +
                            " entries, expected " + std::to_string(n) + " or " +
                            std::to_string(n - width));
        }
        for (std::size_t k = 0; k < width; ++k) {
            const std::size_t slot = leading ? k : n - 1 - k;
            if (!(band[slot] == T(0))) {
                throw Error(Errc::invalid_padding, "band " + std::string(name) + " slot " +
                                                       std::to_string(slot + 1) +
                                                       " lies outside the matrix and must be 0");
            }
        }
    }

    Vec<T> d_, a_, b_, c_, e_;
};

/// y = P x, terms that fall outside the matrix omitted.
template <class T>
[[nodiscard]] Vec<T> matvec(const PentaMatrix<T>& P, std::span<const T> x) {
    const std::size_t n = P.order();
    if (x.size() != n) {
        throw Error(Errc::dimension_mismatch, "vector length " + std::to_string(x.size()) +
                                                  " does not match order " + std::to_string(n));
    }
    const auto d = P.d(), a = P.a(), b = P.b(), c = P.c(), e = P.e();
    Vec<T> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        T acc = d[i] * x[i];
        if (i >= 2) acc += e[i] * x[i - 2];
        if (i >= 1) acc += c[i] * x[i - 1];
        if (i + 1 < n) acc += a[i] * x[i + 1];
        if (i + 2 < n) acc += b[i] * x[i + 2];
        y[i] = std::move(acc);
    }
    return y;
}

enum class Algorithm { ptrans1, ptrans2, sptrans1, sptrans2 };

[[nodiscard]] constexpr std::string_view algorithm_name(Algorithm alg) noexcept {
    switch (alg) {
        case Algorithm::ptrans1: return "PTRANS-I";
        case Algorithm::ptrans2: return "PTRANS-II";
        case Algorithm::sptrans1: return "SPTRANS-I";
        case Algorithm::sptrans2: return "SPTRANS-II";
    }
    return "?";
}

/// Outcome of one solve. Pivots are mu (forward algorithms) or psi
/// (backward algorithms); the symbolic variants keep them as rational
/// functions of p, hence the separate pivot type.
template <class T, class PivotT = T>
struct SolveReport {
    Vec<T> solution;
    Vec<PivotT> pivots;
    T determinant{};
    std::uint64_t op_count = 0;
    /// 0-based rows whose identically-zero pivot was replaced by p.
    std::vector<std::size_t> rescued_indices;
    /// 0-based rows whose pivot was nonzero but below the near-zero threshold.
    std::vector<std::size_t> near_zero_pivots;
    Algorithm algorithm = Algorithm::ptrans1;
};

}  // namespace penta
