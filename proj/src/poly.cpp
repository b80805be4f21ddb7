#include "penta/poly.hpp"

#include <algorithm>

#include "penta/error.hpp"

namespace penta {

Poly::Poly(const BigRational& constant) {
    if (sgn(constant) != 0) {
        coeffs_.push_back(constant);
        coeffs_.back().canonicalize();
    }
}

// Callers may hand over values built as mpq_class(num, den), which GMP does
// not reduce; equality below relies on reduced form.
Poly::Poly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Poly Poly::p() { return Poly(std::vector<BigRational>{BigRational(0), BigRational(1)}); }

BigRational Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

BigRational Poly::eval(const BigRational& at) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::scaled(const BigRational& factor) const {
    if (sgn(factor) == 0) return {};
    Poly out = *this;
    for (auto& c : out.coeffs_) c *= factor;
    return out;
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(1 / leading());
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly operator-(Poly v) {
    for (auto& c : v.coeffs_) c = -c;
    return v;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw Error(Errc::division_by_zero_function, "polynomial division by zero");
    if (dividend.degree() < divisor.degree()) return {Poly{}, dividend};

    std::vector<BigRational> rem = dividend.coeffs_;
    std::vector<BigRational> quot(dividend.coeffs_.size() - divisor.coeffs_.size() + 1);
    const std::size_t dd = divisor.coeffs_.size() - 1;
    const BigRational inv_lead = 1 / divisor.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigRational q = rem[k + dd] * inv_lead;
        quot[k] = q;
        if (sgn(q) == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    }
    rem.resize(dd);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly gcd(Poly lhs, Poly rhs) {
    if (lhs.degree() < rhs.degree()) std::swap(lhs, rhs);
    lhs = lhs.monic();
    rhs = rhs.monic();
    while (!rhs.is_zero()) {
        Poly rem = Poly::divmod(lhs, rhs).second.monic();
        lhs = std::move(rhs);
        rhs = std::move(rem);
    }
    return lhs;
}

}  // namespace penta
