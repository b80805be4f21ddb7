#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "penta/rational.hpp"

namespace penta {

/// Univariate polynomial in p over the rationals. Coefficients are stored
/// in ascending powers; the zero polynomial has no coefficients and every
/// other polynomial has a nonzero leading coefficient.
class Poly {
public:
    Poly() = default;
    explicit Poly(const BigRational& constant);
    explicit Poly(std::vector<BigRational> coefficients);

    /// The indeterminate p.
    [[nodiscard]] static Poly p();

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const BigRational> coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] const BigRational& leading() const { return coeffs_.back(); }
    /// Coefficient of p^k, zero past the degree.
    [[nodiscard]] BigRational coeff(std::size_t k) const;
    [[nodiscard]] BigRational eval(const BigRational& at) const;
    [[nodiscard]] bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    [[nodiscard]] Poly scaled(const BigRational& factor) const;
    /// Leading coefficient 1; the zero polynomial stays zero.
    [[nodiscard]] Poly monic() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
    friend Poly operator-(Poly v);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Quotient and remainder of Euclidean division; `divisor` must be nonzero.
    [[nodiscard]] static std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) is 0.
[[nodiscard]] Poly gcd(Poly lhs, Poly rhs);

}  // namespace penta
