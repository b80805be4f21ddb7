#include "penta/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <mpfr.h>

#include "penta/error.hpp"

namespace penta {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
    throw Error(Errc::parse_error, "not a number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

BigRational pow10(long exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    return exponent >= 0 ? BigRational(p) : BigRational(mpz_class(1), p);
}

}  // namespace

BigRational rational_from_double(double v) {
    if (!std::isfinite(v)) {
        throw Error(Errc::parse_error, "non-finite value has no rational expansion");
    }
    BigRational out;
    mpq_set_d(out.get_mpq_t(), v);
    return out;
}

BigRational parse_rational(std::string_view text) {
    if (text.empty()) bad_number(text);

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        const bool has_sign = !num.empty() && (num[0] == '-' || num[0] == '+');
        std::string_view num_digits = has_sign ? num.substr(1) : num;
        if (!all_digits(num_digits) || !all_digits(den)) bad_number(text);
        mpz_class n{std::string(num_digits), 10};
        mpz_class d{std::string(den), 10};
        if (d == 0) bad_number(text);
        if (num[0] == '-') n = -n;
        BigRational out(n, d);
        out.canonicalize();
        return out;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long exponent = 0;
    bool seen_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        seen_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            --exponent;
            seen_digit = true;
        }
    }
    if (!seen_digit) bad_number(text);
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        std::string_view rest = text.substr(pos);
        bool exp_negative = false;
        if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
            exp_negative = rest[0] == '-';
            rest.remove_prefix(1);
        }
        if (!all_digits(rest) || rest.size() > 6) bad_number(text);
        const long e = std::stol(std::string(rest));
        exponent += exp_negative ? -e : e;
        pos = text.size();
    }
    if (pos != text.size()) bad_number(text);

    BigRational out{mpz_class(digits, 10)};
    out *= pow10(exponent);
    out.canonicalize();
    return negative ? BigRational(-out) : out;
}

std::string to_string(const BigRational& v) { return v.get_str(); }

double to_double(const BigRational& v) {
    mpfr_t tmp;
    mpfr_init2(tmp, 53);
    mpfr_set_q(tmp, v.get_mpq_t(), MPFR_RNDN);
    const double out = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    return out;
}

}  // namespace penta
