// Command-line front end over the C API in penta/penta.h.
//
//   pentasolve solve <file> [--alg ptrans1|ptrans2|sptrans1|sptrans2|auto]
//   pentasolve det <file> [--exact]
//   pentasolve gen-example3 --n <int> --out <file>
//   pentasolve bench --sizes 500,5000 [--algs ptrans1,ptrans2] [--csv <file>]
//
// Exit codes: 0 ok, 1 other failure, 2 bad input, 3 singular, 4 zero pivot.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "penta/penta.h"

namespace {

enum Exit { kOk = 0, kFailure = 1, kBadInput = 2, kSingular = 3, kZeroPivot = 4 };

struct SystemDeleter {
    void operator()(penta_system* s) const { penta_system_free(s); }
};
struct ReportDeleter {
    void operator()(penta_report* r) const { penta_report_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { penta_string_free(s); }
};
using SystemPtr = std::unique_ptr<penta_system, SystemDeleter>;
using ReportPtr = std::unique_ptr<penta_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
    StringPtr owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

int report_failure(penta_status status, penta_algorithm alg = PENTA_PTRANS1) {
    switch (status) {
        case PENTA_ERR_PARSE:
        case PENTA_ERR_INVALID_ORDER:
        case PENTA_ERR_INVALID_PADDING:
        case PENTA_ERR_DIMENSION:
        case PENTA_ERR_IO:
            std::cerr << "error: " << penta_last_error() << '\n';
            return kBadInput;
        case PENTA_ERR_SINGULAR:
            std::cerr << "No solutions\n";
            return kSingular;
        case PENTA_ERR_ZERO_PIVOT: {
            const char* pivot = alg == PENTA_PTRANS2 ? "psi" : "mu";
            std::cerr << penta_algorithm_name(alg) << " failed: " << pivot << "_"
                      << penta_last_zero_pivot_index() + 1 << " = 0 (zero pivot at row "
                      << penta_last_zero_pivot_index() + 1 << "); try --alg auto or a symbolic algorithm\n";
            return kZeroPivot;
        }
        default:
            std::cerr << "error: " << penta_status_name(status) << ": " << penta_last_error() << '\n';
            return kFailure;
    }
}

int load(const std::string& path, SystemPtr& out) {
    penta_system* raw = nullptr;
    const penta_status st = penta_system_load(path.c_str(), &raw);
    out.reset(raw);
    return st == PENTA_OK ? kOk : report_failure(st);
}

int cmd_solve(const std::string& path, const std::string& alg_name) {
    penta_algorithm alg{};
    if (penta_algorithm_from_name(alg_name.c_str(), &alg) != PENTA_OK) {
        std::cerr << "error: " << penta_last_error() << '\n';
        return kBadInput;
    }
    SystemPtr system;
    if (int rc = load(path, system); rc != kOk) return rc;

    penta_report* raw = nullptr;
    const penta_status st = penta_solve(system.get(), alg, &raw);
    ReportPtr report(raw);
    if (st != PENTA_OK) return report_failure(st, alg);

    const std::size_t n = penta_report_size(report.get());
    std::cout << "algorithm: " << penta_algorithm_name(penta_report_algorithm(report.get())) << '\n';
    std::cout << "solution:";
    for (std::size_t i = 0; i < n; ++i) std::cout << ' ' << take(penta_report_solution_str(report.get(), i));
    std::cout << "\ndeterminant: " << take(penta_report_determinant_str(report.get())) << '\n';
    std::cout << "pivots:";
    for (std::size_t i = 0; i < n; ++i) std::cout << ' ' << take(penta_report_pivot_str(report.get(), i));
    std::cout << "\nrescued:";
    const std::size_t rescued = penta_report_rescued_count(report.get());
    if (rescued == 0) std::cout << " none";
    for (std::size_t k = 0; k < rescued; ++k) {
        std::cout << " row " << penta_report_rescued_index(report.get(), k) + 1 << " (pivot := p)";
    }
    std::cout << '\n';
    const std::size_t near_zero = penta_report_near_zero_count(report.get());
    if (near_zero > 0) {
        std::cout << "near-zero pivots:";
        for (std::size_t k = 0; k < near_zero; ++k) {
            std::cout << " row " << penta_report_near_zero_index(report.get(), k) + 1;
        }
        std::cout << '\n';
    }
    std::cout << "op_count: " << penta_report_op_count(report.get()) << '\n';
    return kOk;
}

int cmd_det(const std::string& path, bool exact) {
    SystemPtr system;
    if (int rc = load(path, system); rc != kOk) return rc;
    double value = 0.0;
    char* exact_str = nullptr;
    const penta_status st = penta_system_determinant(system.get(), &value, exact ? &exact_str : nullptr);
    if (st != PENTA_OK) return report_failure(st);
    if (exact) {
        std::cout << take(exact_str) << '\n';
    } else {
        std::printf("%.17g\n", value);
    }
    return kOk;
}

int cmd_gen_example3(std::size_t n, const std::string& out) {
    penta_system* raw = nullptr;
    penta_status st = penta_system_example3(n, &raw);
    SystemPtr system(raw);
    if (st != PENTA_OK) return report_failure(st);
    st = penta_system_save(system.get(), out.c_str());
    if (st != PENTA_OK) return report_failure(st);
    return kOk;
}

struct BenchRow {
    std::size_t n = 0;
    std::string algorithm;
    std::string status = "ok";
    double max_abs_error = 0.0;
    double wall_time_seconds = 0.0;
    std::uint64_t op_count = 0;
};

BenchRow bench_one(const penta_system* system, std::size_t n, penta_algorithm alg, int repeats) {
    BenchRow row;
    row.n = n;
    row.algorithm = penta_algorithm_name(alg);
    double best = INFINITY;
    ReportPtr report;
    for (int r = 0; r < repeats; ++r) {
        penta_report* raw = nullptr;
        const auto start = std::chrono::steady_clock::now();
        const penta_status st = penta_solve(system, alg, &raw);
        const auto stop = std::chrono::steady_clock::now();
        report.reset(raw);
        if (st != PENTA_OK) {
            row.status = std::string("FAILED(") + penta_status_name(st) + ")";
            return row;
        }
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    std::vector<double> x(n);
    penta_report_solution(report.get(), x.data(), n);
    for (double v : x) row.max_abs_error = std::max(row.max_abs_error, std::abs(v - 1.0));
    row.wall_time_seconds = best;
    row.op_count = penta_report_op_count(report.get());
    return row;
}

int cmd_bench(const std::vector<std::size_t>& sizes, const std::vector<std::string>& alg_names,
              const std::string& csv_path, int repeats) {
    std::vector<penta_algorithm> algs;
    for (const auto& name : alg_names) {
        penta_algorithm alg{};
        if (penta_algorithm_from_name(name.c_str(), &alg) != PENTA_OK) {
            std::cerr << "error: " << penta_last_error() << '\n';
            return kBadInput;
        }
        algs.push_back(alg);
    }
    std::vector<BenchRow> rows;
    std::printf("%8s  %-10s  %14s  %12s  %10s  %s\n", "n", "algorithm", "max_abs_error", "time_s", "op_count",
                "status");
    for (std::size_t n : sizes) {
        penta_system* raw = nullptr;
        const penta_status st = penta_system_example3(n, &raw);
        SystemPtr system(raw);
        if (st != PENTA_OK) return report_failure(st);
        for (penta_algorithm alg : algs) {
            BenchRow row = bench_one(system.get(), n, alg, repeats);
            std::printf("%8zu  %-10s  %14.4e  %12.6f  %10llu  %s\n", row.n, row.algorithm.c_str(), row.max_abs_error,
                        row.wall_time_seconds, static_cast<unsigned long long>(row.op_count), row.status.c_str());
            rows.push_back(std::move(row));
        }
    }
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) {
            std::cerr << "error: cannot write '" << csv_path << "'\n";
            return kFailure;
        }
        csv << "n,algorithm,max_abs_error,wall_time_seconds,op_count,status\n";
        csv.precision(17);
        for (const auto& r : rows) {
            csv << r.n << ',' << r.algorithm << ',' << r.max_abs_error << ',' << r.wall_time_seconds << ','
                << r.op_count << ',' << r.status << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pentadiagonal linear systems via transformations"};
    app.require_subcommand(1);
    int rc = kOk;

    std::string solve_file, solve_alg = "auto";
    auto* solve = app.add_subcommand("solve", "Solve a PENTA v1 system");
    solve->add_option("file", solve_file, "PENTA v1 file")->required();
    solve->add_option("--alg", solve_alg, "ptrans1, ptrans2, sptrans1, sptrans2 or auto")->capture_default_str();
    solve->callback([&] { rc = cmd_solve(solve_file, solve_alg); });

    std::string det_file;
    bool det_exact = false;
    auto* det = app.add_subcommand("det", "Determinant of a PENTA v1 matrix");
    det->add_option("file", det_file, "PENTA v1 file")->required();
    det->add_flag("--exact", det_exact, "Exact rational arithmetic, printed as a fraction");
    det->callback([&] { rc = cmd_det(det_file, det_exact); });

    std::size_t gen_n = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen-example3", "Write the all-ones-solution test system");
    gen->add_option("--n", gen_n, "Order, at least 6")->required();
    gen->add_option("--out", gen_out, "Output file")->required();
    gen->callback([&] { rc = cmd_gen_example3(gen_n, gen_out); });

    std::vector<std::size_t> bench_sizes;
    std::vector<std::string> bench_algs{"ptrans1", "ptrans2"};
    std::string bench_csv;
    int bench_repeats = 1;
    auto* bench = app.add_subcommand("bench", "Error and timing table on the all-ones test family");
    bench->add_option("--sizes", bench_sizes, "Comma-separated orders")->required()->delimiter(',');
    bench->add_option("--algs", bench_algs, "Comma-separated algorithms")->delimiter(',')->capture_default_str();
    bench->add_option("--csv", bench_csv, "Also write the rows as CSV");
    bench->add_option("--repeat", bench_repeats, "Report the best of this many timed runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->callback([&] { rc = cmd_bench(bench_sizes, bench_algs, bench_csv, bench_repeats); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kBadInput;
    }
    return rc;
}
