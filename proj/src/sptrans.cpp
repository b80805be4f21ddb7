#include "penta/sptrans.hpp"

#include "penta/ptrans.hpp"

namespace penta {

namespace {

struct Lifted {
    PentaMatrix<RationalFunction> matrix;
    Vec<RationalFunction> rhs;
};

Lifted lift(const PentaMatrix<BigRational>& P, std::span<const BigRational> y) {
    detail::check_rhs(P, y);
    auto matrix = P.convert<RationalFunction>([](const BigRational& v) { return RationalFunction(v); });
    Vec<RationalFunction> rhs(y.begin(), y.end());
    return {std::move(matrix), std::move(rhs)};
}

BigRational at_zero_or_singular(const RationalFunction& f) {
    try {
        return eval_at_zero(f);
    } catch (const Error& err) {
        if (err.code() == Errc::pole_at_zero) throw SingularMatrix();
        throw;
    }
}

void finish(SymbolicReport& report, Vec<RationalFunction> expressions, Vec<RationalFunction> pivots) {
    report.determinant_function = detail::product(pivots);
    report.determinant = at_zero_or_singular(report.determinant_function);
    if (sgn(report.determinant) == 0) throw SingularMatrix();
    report.solution.reserve(expressions.size());
    for (const auto& x : expressions) report.solution.push_back(at_zero_or_singular(x));
    report.expressions = std::move(expressions);
    report.pivots = std::move(pivots);
}

}  // namespace

SymbolicReport sptrans1(const PentaMatrix<BigRational>& P, std::span<const BigRational> y) {
    const auto [matrix, rhs] = lift(P, y);
    SymbolicReport report;
    report.algorithm = Algorithm::sptrans1;
    auto rescue = [&report](RationalFunction& pivot, std::size_t row) {
        pivot = RationalFunction::p();
        report.rescued_indices.push_back(row);
    };
    auto f = factor_ptrans1(matrix, std::span<const RationalFunction>(rhs), rescue);
    report.op_count = f.op_count;
    auto x = back_substitute_ptrans1(f, report.op_count);
    finish(report, std::move(x), std::move(f.mu));
    return report;
}

SymbolicReport sptrans2(const PentaMatrix<BigRational>& P, std::span<const BigRational> y) {
    const auto [matrix, rhs] = lift(P, y);
    SymbolicReport report;
    report.algorithm = Algorithm::sptrans2;
    auto rescue = [&report](RationalFunction& pivot, std::size_t row) {
        pivot = RationalFunction::p();
        report.rescued_indices.push_back(row);
    };
    auto f = factor_ptrans2(matrix, std::span<const RationalFunction>(rhs), rescue);
    report.op_count = f.op_count;
    auto x = forward_substitute_ptrans2(f, report.op_count);
    finish(report, std::move(x), std::move(f.psi));
    return report;
}

PentaMatrix<BigRational> to_exact(const PentaMatrix<double>& P) {
    return P.convert<BigRational>([](double v) { return rational_from_double(v); });
}

Vec<BigRational> to_exact(std::span<const double> v) {
    Vec<BigRational> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(rational_from_double(x));
    return out;
}

PentaMatrix<double> to_double(const PentaMatrix<BigRational>& P) {
    return P.convert<double>([](const BigRational& v) { return to_double(v); });
}

Vec<double> to_double(std::span<const BigRational> v) {
    Vec<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_double(x));
    return out;
}

namespace {

template <class S>
S pivot_determinant(const PentaMatrix<S>& P) {
    const Vec<S> zeros(P.order(), S(0));
    try {
        return detail::product(factor_ptrans1(P, std::span<const S>(zeros)).mu);
    } catch (const ZeroPivot&) {
    }
    try {
        return detail::product(factor_ptrans2(P, std::span<const S>(zeros)).psi);
    } catch (const ZeroPivot&) {
    }
    if constexpr (std::is_same_v<S, double>) {
        const auto exact = to_exact(P);
        const Vec<BigRational> rhs(P.order(), BigRational(0));
        return to_double(sptrans1(exact, rhs).determinant);
    } else {
        const Vec<BigRational> rhs(P.order(), BigRational(0));
        return sptrans1(P, rhs).determinant;
    }
}

}  // namespace

double determinant(const PentaMatrix<double>& P) { return pivot_determinant(P); }

BigRational determinant(const PentaMatrix<BigRational>& P) { return pivot_determinant(P); }

}  // namespace penta
