#include "penta/format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace penta {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

Vec<BigRational> parse_row(const Line& line, std::size_t n) {
    if (line.tokens.size() != n) {
        parse_fail(line.number, "expected " + std::to_string(n) + " values, found " +
                                    std::to_string(line.tokens.size()));
    }
    Vec<BigRational> row;
    row.reserve(n);
    for (const auto& tok : line.tokens) {
        try {
            row.push_back(parse_rational(tok));
        } catch (const Error& err) {
            parse_fail(line.number, err.what());
        }
    }
    return row;
}

/// Decimal expansion when the denominator is 2^i 5^j, p/q otherwise.
std::string format_value(const BigRational& v) {
    mpz_class den = v.get_den();
    std::size_t twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return v.get_str();
    const std::size_t digits = std::max(twos, fives);
    if (digits == 0) return v.get_num().get_str();

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const mpz_class scaled = abs(v.get_num()) * (scale / v.get_den());
    std::string body = scaled.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (sgn(v) < 0 ? "-" : "") + body;
}

}  // namespace

PentaSystem parse_penta(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) parse_fail(1, "empty input, expected 'PENTA <n>'");

    const Line& header = lines.front();
    if (header.tokens[0] != "PENTA" || header.tokens.size() < 2 || header.tokens.size() > 3) {
        parse_fail(header.number, "expected 'PENTA <n> [BACKWARD]'");
    }
    bool backward = false;
    if (header.tokens.size() == 3) {
        if (header.tokens[2] != "BACKWARD") parse_fail(header.number, "unknown header token '" + header.tokens[2] + "'");
        backward = true;
    }
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(header.tokens[1], &used);
        if (used != header.tokens[1].size() || parsed < 0) throw std::invalid_argument("order");
        n = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
        parse_fail(header.number, "bad order '" + header.tokens[1] + "'");
    }
    if (n < PentaMatrix<BigRational>::min_order) {
        throw Error(Errc::invalid_order, "pentadiagonal order must be at least 4, got " + std::to_string(n));
    }
    if (lines.size() != 7) {
        parse_fail(lines.back().number, "expected 6 data lines (d, a, b, c, e, y), found " +
                                            std::to_string(lines.size() - 1));
    }
    auto d = parse_row(lines[1], n);
    auto a = parse_row(lines[2], n);
    auto b = parse_row(lines[3], n);
    auto c = parse_row(lines[4], n);
    auto e = parse_row(lines[5], n);
    auto y = parse_row(lines[6], n);
    return PentaSystem{PentaMatrix<BigRational>::from_bands(std::move(d), std::move(a), std::move(b),
                                                             std::move(c), std::move(e)),
                       std::move(y), backward};
}

PentaSystem load_penta(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_penta(buf.str());
}

std::string write_penta(const PentaSystem& system) {
    std::ostringstream out;
    out << "PENTA " << system.matrix.order();
    if (system.backward) out << " BACKWARD";
    out << '\n';
    auto row = [&out](std::span<const BigRational> values) {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << format_value(values[i]);
        out << '\n';
    };
    const auto& P = system.matrix;
    row(P.d());
    row(P.a());
    row(P.b());
    row(P.c());
    row(P.e());
    row(system.rhs);
    return out.str();
}

void save_penta(const PentaSystem& system, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot write '" + path + "'");
    out << write_penta(system);
    if (!out) throw Error(Errc::io_error, "write to '" + path + "' failed");
}

PentaSystem generate_example3(std::size_t n) {
    if (n < 6) {
        throw Error(Errc::invalid_order, "the example family needs n >= 6, got " + std::to_string(n));
    }
    Vec<BigRational> d(n, 6), a(n, -4), b(n, 1), c(n, -4), e(n, 1), y(n, 0);
    d[0] = 9;
    d[n - 2] = 5;
    a[n - 2] = -2;
    d[n - 1] = 1;
    c[n - 1] = -2;
    a[n - 1] = 0;
    b[n - 2] = b[n - 1] = 0;
    c[0] = 0;
    e[0] = e[1] = 0;
    y[0] = 6;
    y[1] = -1;
    return PentaSystem{PentaMatrix<BigRational>::from_bands(std::move(d), std::move(a), std::move(b),
                                                             std::move(c), std::move(e)),
                       std::move(y), false};
}

}  // namespace penta
