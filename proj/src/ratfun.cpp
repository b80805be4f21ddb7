#include "penta/ratfun.hpp"

#include <utility>
#include <vector>

#include "penta/error.hpp"

namespace penta {

RationalFunction::RationalFunction(Poly numerator) : num_(std::move(numerator)), den_(BigRational(1)) {
    canonicalize();
}

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw Error(Errc::division_by_zero_function, "rational function with zero denominator");
    }
    canonicalize();
}

RationalFunction RationalFunction::p() { return RationalFunction(Poly::p()); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) {
        throw Error(Errc::division_by_zero_function, "division by the zero rational function");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    canonicalize();
    return *this;
}

RationalFunction operator-(RationalFunction v) {
    v.num_ = -v.num_;
    return v;
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(BigRational(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() >= 0) {
        const Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
    }
    if (!(den_.leading() == 1)) {
        const BigRational inv = 1 / den_.leading();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    if (num_.degree() > max_degree || den_.degree() > max_degree) {
        throw Error(Errc::degree_overflow, "rational function degree exceeds " +
                                               std::to_string(max_degree));
    }
}

BigRational eval_at_zero(const RationalFunction& f) {
    const BigRational den = f.den().coeff(0);
    if (sgn(den) == 0) throw Error(Errc::pole_at_zero, "rational function has a pole at p = 0");
    return f.num().coeff(0) / den;
}

namespace {

/// Splits a nonzero polynomial into content * primitive, where the
/// primitive part has coprime integer coefficients and a positive leading
/// coefficient.
std::pair<BigRational, std::vector<mpz_class>> primitive_part(const Poly& poly) {
    mpz_class lcm_den(1);
    for (const auto& c : poly.coefficients()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    mpz_class g(0);
    for (const auto& c : poly.coefficients()) {
        mpz_class v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (sgn(poly.leading()) < 0) g = -g;
    for (auto& v : ints) v /= g;
    BigRational content(g, lcm_den);
    content.canonicalize();
    return {content, ints};
}

std::string render_term(const mpz_class& coeff, std::size_t power, bool leading) {
    const mpz_class mag = abs(coeff);
    std::string out;
    if (leading) {
        if (sgn(coeff) < 0) out += "-";
    } else {
        out += sgn(coeff) < 0 ? " - " : " + ";
    }
    if (power == 0) return out + mag.get_str();
    if (mag != 1) out += mag.get_str() + "*";
    out += "p";
    if (power > 1) out += "^" + std::to_string(power);
    return out;
}

enum class Wrap { never, sums, products };

std::string render_sum(const std::vector<mpz_class>& coeffs, Wrap wrap) {
    std::string out;
    int terms = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (sgn(coeffs[k]) == 0) continue;
        out += render_term(coeffs[k], k, terms == 0);
        ++terms;
    }
    // A lone product after "/" would bind as (1/2)*p.
    const bool product = out.find_first_of("*^") != std::string::npos;
    if ((wrap != Wrap::never && terms > 1) || (wrap == Wrap::products && product)) return "(" + out + ")";
    return out;
}

}  // namespace

std::string format_ratfun(const RationalFunction& f) {
    if (f.is_zero()) return "0";
    auto [num_content, num_ints] = primitive_part(f.num());
    auto [den_content, den_ints] = primitive_part(f.den());
    const BigRational ratio = num_content / den_content;
    for (auto& v : num_ints) v *= ratio.get_num();
    for (auto& v : den_ints) v *= ratio.get_den();

    const bool unit_den = den_ints.size() == 1 && den_ints[0] == 1;
    if (unit_den) return render_sum(num_ints, Wrap::never);
    return render_sum(num_ints, Wrap::sums) + "/" + render_sum(den_ints, Wrap::products);
}

}  // namespace penta
