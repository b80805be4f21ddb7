#pragma once

#include <string>

#include "penta/poly.hpp"
#include "penta/rational.hpp"

namespace penta {

/// Quotient of two polynomials in p, always in canonical form: the
/// denominator is monic and shares no factor with the numerator, and zero
/// is 0/1. Canonical form makes equality structural.
class RationalFunction {
public:
    /// Largest numerator or denominator degree before arithmetic gives up
    /// with Errc::degree_overflow.
    static constexpr int max_degree = 64;

    RationalFunction() : den_(BigRational(1)) {}
    RationalFunction(int constant) : RationalFunction(BigRational(constant)) {}
    RationalFunction(const BigRational& constant) : num_(constant), den_(BigRational(1)) {}
    explicit RationalFunction(Poly numerator);
    /// Throws Errc::division_by_zero_function for a zero denominator.
    RationalFunction(Poly numerator, Poly denominator);

    /// The indeterminate p.
    [[nodiscard]] static RationalFunction p();

    [[nodiscard]] const Poly& num() const noexcept { return num_; }
    [[nodiscard]] const Poly& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    /// Throws Errc::division_by_zero_function when rhs is the zero function.
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction l, const RationalFunction& r) { return l += r; }
    friend RationalFunction operator-(RationalFunction l, const RationalFunction& r) { return l -= r; }
    friend RationalFunction operator*(RationalFunction l, const RationalFunction& r) { return l *= r; }
    friend RationalFunction operator/(RationalFunction l, const RationalFunction& r) { return l /= r; }
    friend RationalFunction operator-(RationalFunction v);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

[[nodiscard]] inline bool is_zero(const RationalFunction& f) noexcept { return f.is_zero(); }

/// Value at p = 0. Throws Errc::pole_at_zero when the reduced denominator
/// vanishes there.
[[nodiscard]] BigRational eval_at_zero(const RationalFunction& f);

/// Stable text rendering.
///
///   ratfun  := sum | part "/" part
///   part    := term | "(" sum ")"          a denominator is parenthesised
///                                           unless it is a bare integer or p
///   sum     := term ((" + " | " - ") term)*
///   term    := ["-"] [int "*"] "p" ["^" int] | ["-"] int
///
/// Numerator and denominator are written with coprime integer coefficients,
/// highest power first; the rational content of the whole function is split
/// between them (sign and numerator of the content go up, its denominator
/// goes down), and the denominator is omitted when it is 1. Examples:
/// "1", "p", "-21/(8*p - 21)", "(25*p - 42)/(16*p - 42)".
[[nodiscard]] std::string format_ratfun(const RationalFunction& f);

}  // namespace penta
