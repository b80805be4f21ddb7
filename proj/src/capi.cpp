#include "penta/penta.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "penta/backward.hpp"
#include "penta/format.hpp"
#include "penta/ptrans.hpp"
#include "penta/sptrans.hpp"

using namespace penta;

struct penta_system {
    PentaSystem exact;
    PentaMatrix<double> numeric;
    Vec<double> rhs;

    explicit penta_system(PentaSystem sys)
        : exact(std::move(sys)), numeric(penta::to_double(exact.matrix)), rhs(penta::to_double(exact.rhs)) {}
};

struct penta_report {
    Algorithm algorithm = Algorithm::ptrans1;
    Vec<double> solution;
    Vec<double> pivots;
    double determinant = 0.0;
    std::uint64_t op_count = 0;
    std::vector<std::size_t> rescued;
    std::vector<std::size_t> near_zero;
    // Present for the symbolic algorithms only.
    std::optional<SymbolicReport> exact;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_zero_pivot = 0;

penta_status to_status(Errc code) {
    switch (code) {
        case Errc::dimension_mismatch: return PENTA_ERR_DIMENSION;
        case Errc::invalid_order: return PENTA_ERR_INVALID_ORDER;
        case Errc::invalid_padding: return PENTA_ERR_INVALID_PADDING;
        case Errc::parse_error: return PENTA_ERR_PARSE;
        case Errc::zero_pivot: return PENTA_ERR_ZERO_PIVOT;
        case Errc::singular_matrix: return PENTA_ERR_SINGULAR;
        case Errc::division_by_zero_function: return PENTA_ERR_DIVISION_BY_ZERO;
        case Errc::pole_at_zero: return PENTA_ERR_POLE_AT_ZERO;
        case Errc::degree_overflow: return PENTA_ERR_DEGREE_OVERFLOW;
        case Errc::io_error: return PENTA_ERR_IO;
    }
    return PENTA_ERR_INTERNAL;
}

penta_status fail(penta_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class F>
penta_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return PENTA_OK;
    } catch (const ZeroPivot& err) {
        g_last_zero_pivot = err.index();
        return fail(PENTA_ERR_ZERO_PIVOT, err.what());
    } catch (const Error& err) {
        return fail(to_status(err.code()), err.what());
    } catch (const std::invalid_argument& err) {
        return fail(PENTA_ERR_INVALID_ARGUMENT, err.what());
    } catch (const std::bad_alloc&) {
        return fail(PENTA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& err) {
        return fail(PENTA_ERR_INTERNAL, err.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void fill_numeric(penta_report& out, SolveReport<double> report) {
    out.algorithm = report.algorithm;
    out.solution = std::move(report.solution);
    out.pivots = std::move(report.pivots);
    out.determinant = report.determinant;
    out.op_count = report.op_count;
    out.near_zero = std::move(report.near_zero_pivots);
}

void fill_symbolic(penta_report& out, SymbolicReport report) {
    out.algorithm = report.algorithm;
    out.solution = penta::to_double(report.solution);
    out.determinant = penta::to_double(report.determinant);
    out.op_count = report.op_count;
    out.rescued = report.rescued_indices;
    out.exact = std::move(report);
}

void solve_into(const penta_system& sys, Algorithm alg, penta_report& out) {
    const bool backward = sys.exact.backward;
    switch (alg) {
        case Algorithm::ptrans1:
        case Algorithm::ptrans2:
            if (backward) {
                fill_numeric(out, solve_backward(BackwardPentaMatrix<double>(sys.numeric),
                                                 std::span<const double>(sys.rhs), alg));
            } else if (alg == Algorithm::ptrans1) {
                fill_numeric(out, solve_ptrans1(sys.numeric, std::span<const double>(sys.rhs)));
            } else {
                fill_numeric(out, solve_ptrans2(sys.numeric, std::span<const double>(sys.rhs)));
            }
            break;
        case Algorithm::sptrans1:
        case Algorithm::sptrans2: {
            const std::span<const BigRational> rhs(sys.exact.rhs);
            if (backward) {
                fill_symbolic(out, solve_backward_symbolic(BackwardPentaMatrix<BigRational>(sys.exact.matrix),
                                                           rhs, alg));
            } else if (alg == Algorithm::sptrans1) {
                fill_symbolic(out, sptrans1(sys.exact.matrix, rhs));
            } else {
                fill_symbolic(out, sptrans2(sys.exact.matrix, rhs));
            }
            break;
        }
    }
}

penta_status check_handle(const void* p, const char* what) {
    if (p) return PENTA_OK;
    return fail(PENTA_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* penta_version(void) { return "1.0.0"; }

const char* penta_status_name(penta_status status) {
    switch (status) {
        case PENTA_OK: return "ok";
        case PENTA_ERR_DIMENSION: return "dimension mismatch";
        case PENTA_ERR_INVALID_ORDER: return "invalid order";
        case PENTA_ERR_INVALID_PADDING: return "invalid padding";
        case PENTA_ERR_PARSE: return "parse error";
        case PENTA_ERR_ZERO_PIVOT: return "zero pivot";
        case PENTA_ERR_SINGULAR: return "singular matrix";
        case PENTA_ERR_DIVISION_BY_ZERO: return "division by zero function";
        case PENTA_ERR_POLE_AT_ZERO: return "pole at zero";
        case PENTA_ERR_DEGREE_OVERFLOW: return "degree overflow";
        case PENTA_ERR_IO: return "i/o error";
        case PENTA_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PENTA_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* penta_algorithm_name(penta_algorithm algorithm) {
    switch (algorithm) {
        case PENTA_PTRANS1: return "PTRANS-I";
        case PENTA_PTRANS2: return "PTRANS-II";
        case PENTA_SPTRANS1: return "SPTRANS-I";
        case PENTA_SPTRANS2: return "SPTRANS-II";
        case PENTA_AUTO: return "auto";
    }
    return "?";
}

penta_status penta_algorithm_from_name(const char* name, penta_algorithm* out) {
    if (auto s = check_handle(name, "name"); s != PENTA_OK) return s;
    if (auto s = check_handle(out, "out"); s != PENTA_OK) return s;
    static constexpr struct {
        const char* name;
        penta_algorithm alg;
    } table[] = {{"ptrans1", PENTA_PTRANS1},
                 {"ptrans2", PENTA_PTRANS2},
                 {"sptrans1", PENTA_SPTRANS1},
                 {"sptrans2", PENTA_SPTRANS2},
                 {"auto", PENTA_AUTO}};
    for (const auto& entry : table) {
        if (std::strcmp(entry.name, name) == 0) {
            *out = entry.alg;
            return PENTA_OK;
        }
    }
    return fail(PENTA_ERR_INVALID_ARGUMENT, std::string("unknown algorithm '") + name + "'");
}

const char* penta_last_error(void) { return g_last_error.c_str(); }

size_t penta_last_zero_pivot_index(void) { return g_last_zero_pivot; }

void penta_string_free(char* s) { std::free(s); }

penta_status penta_system_create(size_t n, const double* d, const double* a, const double* b, const double* c,
                                 const double* e, const double* y, int backward, penta_system** out) {
    for (const void* p : {static_cast<const void*>(d), static_cast<const void*>(a), static_cast<const void*>(b),
                          static_cast<const void*>(c), static_cast<const void*>(e), static_cast<const void*>(y),
                          static_cast<const void*>(out)}) {
        if (auto s = check_handle(p, "argument"); s != PENTA_OK) return s;
    }
    return guarded([&] {
        auto band = [n](const double* v) { return to_exact(std::span<const double>(v, n)); };
        PentaSystem sys{PentaMatrix<BigRational>::from_bands(band(d), band(a), band(b), band(c), band(e)), band(y),
                        backward != 0};
        *out = new penta_system(std::move(sys));
    });
}

penta_status penta_system_parse(const char* text, penta_system** out) {
    if (auto s = check_handle(text, "text"); s != PENTA_OK) return s;
    if (auto s = check_handle(out, "out"); s != PENTA_OK) return s;
    return guarded([&] { *out = new penta_system(parse_penta(text)); });
}

penta_status penta_system_load(const char* path, penta_system** out) {
    if (auto s = check_handle(path, "path"); s != PENTA_OK) return s;
    if (auto s = check_handle(out, "out"); s != PENTA_OK) return s;
    return guarded([&] { *out = new penta_system(load_penta(path)); });
}

penta_status penta_system_save(const penta_system* system, const char* path) {
    if (auto s = check_handle(system, "system"); s != PENTA_OK) return s;
    if (auto s = check_handle(path, "path"); s != PENTA_OK) return s;
    return guarded([&] { save_penta(system->exact, path); });
}

penta_status penta_system_example3(size_t n, penta_system** out) {
    if (auto s = check_handle(out, "out"); s != PENTA_OK) return s;
    return guarded([&] { *out = new penta_system(generate_example3(n)); });
}

void penta_system_free(penta_system* system) { delete system; }

size_t penta_system_order(const penta_system* system) { return system ? system->numeric.order() : 0; }

int penta_system_is_backward(const penta_system* system) { return system && system->exact.backward ? 1 : 0; }

penta_status penta_system_rhs(const penta_system* system, double* out, size_t len) {
    if (auto s = check_handle(system, "system"); s != PENTA_OK) return s;
    if (auto s = check_handle(out, "out"); s != PENTA_OK) return s;
    if (len != system->rhs.size()) return fail(PENTA_ERR_DIMENSION, "buffer length does not match order");
    std::copy(system->rhs.begin(), system->rhs.end(), out);
    return PENTA_OK;
}

penta_status penta_system_matvec(const penta_system* system, const double* x, double* y, size_t len) {
    if (auto s = check_handle(system, "system"); s != PENTA_OK) return s;
    if (auto s = check_handle(x, "x"); s != PENTA_OK) return s;
    if (auto s = check_handle(y, "y"); s != PENTA_OK) return s;
    return guarded([&] {
        std::span<const double> in(x, len);
        Vec<double> result;
        if (system->exact.backward) {
            // Phat x = P (M x)
            const auto reversed = reverse_permutation_apply(in);
            result = matvec(system->numeric, std::span<const double>(reversed));
        } else {
            result = matvec(system->numeric, in);
        }
        std::copy(result.begin(), result.end(), y);
    });
}

penta_status penta_system_determinant(const penta_system* system, double* value, char** exact) {
    if (auto s = check_handle(system, "system"); s != PENTA_OK) return s;
    return guarded([&] {
        const bool backward = system->exact.backward;
        if (exact) {
            const BigRational det = backward ? determinant(BackwardPentaMatrix<BigRational>(system->exact.matrix))
                                              : determinant(system->exact.matrix);
            if (value) *value = penta::to_double(det);
            *exact = dup_string(to_string(det));
        } else if (value) {
            *value = backward ? determinant(BackwardPentaMatrix<double>(system->numeric))
                              : determinant(system->numeric);
        }
    });
}

penta_status penta_solve(const penta_system* system, penta_algorithm algorithm, penta_report** out) {
    if (auto s = check_handle(system, "system"); s != PENTA_OK) return s;
    if (auto s = check_handle(out, "out"); s != PENTA_OK) return s;
    if (algorithm < PENTA_PTRANS1 || algorithm > PENTA_AUTO) {
        return fail(PENTA_ERR_INVALID_ARGUMENT, "unknown algorithm");
    }
    return guarded([&] {
        auto report = std::make_unique<penta_report>();
        if (algorithm == PENTA_AUTO) {
            try {
                solve_into(*system, Algorithm::ptrans1, *report);
            } catch (const ZeroPivot&) {
                solve_into(*system, Algorithm::sptrans1, *report);
            }
        } else {
            solve_into(*system, static_cast<Algorithm>(algorithm), *report);
        }
        *out = report.release();
    });
}

void penta_report_free(penta_report* report) { delete report; }

penta_algorithm penta_report_algorithm(const penta_report* report) {
    return static_cast<penta_algorithm>(report->algorithm);
}

size_t penta_report_size(const penta_report* report) { return report ? report->solution.size() : 0; }

int penta_report_is_exact(const penta_report* report) { return report && report->exact ? 1 : 0; }

penta_status penta_report_solution(const penta_report* report, double* out, size_t len) {
    if (auto s = check_handle(report, "report"); s != PENTA_OK) return s;
    if (auto s = check_handle(out, "out"); s != PENTA_OK) return s;
    if (len != report->solution.size()) return fail(PENTA_ERR_DIMENSION, "buffer length does not match order");
    std::copy(report->solution.begin(), report->solution.end(), out);
    return PENTA_OK;
}

double penta_report_determinant(const penta_report* report) { return report ? report->determinant : 0.0; }

char* penta_report_solution_str(const penta_report* report, size_t i) {
    if (!report || i >= report->solution.size()) return nullptr;
    if (report->exact) return dup_string(to_string(report->exact->solution[i]));
    return dup_string(format_double(report->solution[i]));
}

char* penta_report_pivot_str(const penta_report* report, size_t i) {
    if (!report) return nullptr;
    if (report->exact) {
        if (i >= report->exact->pivots.size()) return nullptr;
        return dup_string(format_ratfun(report->exact->pivots[i]));
    }
    if (i >= report->pivots.size()) return nullptr;
    return dup_string(format_double(report->pivots[i]));
}

char* penta_report_determinant_str(const penta_report* report) {
    if (!report) return nullptr;
    if (report->exact) return dup_string(to_string(report->exact->determinant));
    return dup_string(format_double(report->determinant));
}

uint64_t penta_report_op_count(const penta_report* report) { return report ? report->op_count : 0; }

size_t penta_report_rescued_count(const penta_report* report) { return report ? report->rescued.size() : 0; }

size_t penta_report_rescued_index(const penta_report* report, size_t k) {
    return report && k < report->rescued.size() ? report->rescued[k] : static_cast<size_t>(-1);
}

size_t penta_report_near_zero_count(const penta_report* report) { return report ? report->near_zero.size() : 0; }

size_t penta_report_near_zero_index(const penta_report* report, size_t k) {
    return report && k < report->near_zero.size() ? report->near_zero[k] : static_cast<size_t>(-1);
}

}  // extern "C"
