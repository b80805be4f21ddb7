#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PENTASOLVE) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const char* name) { return std::string(PENTA_FIXTURES) + "/" + name; }

std::filesystem::path scratch(const char* name) {
    return std::filesystem::temp_directory_path() / (std::string("pentasolve_test_") + name);
}

std::vector<double> numbers_after(const std::string& text, const std::string& label) {
    const auto pos = text.find(label);
    REQUIRE(pos != std::string::npos);
    const auto end = text.find('\n', pos);
    std::istringstream in(text.substr(pos + label.size(), end - pos - label.size()));
    std::vector<double> out;
    for (std::string tok; in >> tok;) {
        const auto slash = tok.find('/');
        out.push_back(slash == std::string::npos ? std::stod(tok)
                                                 : std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1)));
    }
    return out;
}

}  // namespace

TEST_CASE("solve the 10x10 fixture with each algorithm") {
    for (const char* alg : {"ptrans1", "ptrans2", "sptrans1", "sptrans2", "auto"}) {
        CAPTURE(alg);
        const auto r = run("solve " + fixture("counting10.penta") + " --alg " + alg);
        CHECK(r.code == 0);
        const auto x = numbers_after(r.out, "solution:");
        REQUIRE(x.size() == 10);
        for (std::size_t i = 0; i < 10; ++i) CHECK(std::abs(x[i] - double(i + 1)) <= 1e-10);
        const auto det = numbers_after(r.out, "determinant:");
        REQUIRE(det.size() == 1);
        CHECK(std::abs(det[0] - 1061233.0) <= 1e-12 * 1061233.0);
        CHECK(r.out.find("op_count: 161") != std::string::npos);
    }
}

TEST_CASE("zero pivot and the symbolic rescue on the 4x4 fixture") {
    const auto fail = run("solve " + fixture("breakdown4.penta") + " --alg ptrans1");
    CHECK(fail.code == 4);
    CHECK(fail.out.find("mu_2 = 0") != std::string::npos);

    const auto rescue = run("solve " + fixture("breakdown4.penta") + " --alg sptrans1");
    CHECK(rescue.code == 0);
    CHECK(rescue.out.find("solution: 1 1 1 1") != std::string::npos);
    CHECK(rescue.out.find("pivots: 3 p -2 (8*p - 21)/p") != std::string::npos);
    CHECK(rescue.out.find("rescued: row 2") != std::string::npos);
    CHECK(rescue.out.find("determinant: 126") != std::string::npos);

    const auto automatic = run("solve " + fixture("breakdown4.penta"));
    CHECK(automatic.code == 0);
    CHECK(automatic.out.find("algorithm: SPTRANS-I") != std::string::npos);
}

TEST_CASE("singular and malformed input") {
    const auto singular = scratch("singular.penta");
    std::ofstream(singular) << "PENTA 4\n1 2 5 1\n2 3 1 0\n3 0 0 0\n0 1 1 1\n0 0 1 2\n1 1 2 3\n";
    const auto r = run("solve " + singular.string() + " --alg sptrans2");
    CHECK(r.code == 3);
    CHECK(r.out.find("No solutions") != std::string::npos);
    CHECK(run("det " + singular.string()).code == 3);

    const auto broken = scratch("broken.penta");
    std::ofstream(broken) << "PENTA 4\n1 1 1\n";
    const auto b = run("solve " + broken.string());
    CHECK(b.code == 2);
    CHECK(b.out.find("line 2") != std::string::npos);
    CHECK(run("solve /nonexistent/x.penta").code == 2);
    CHECK(run("solve " + fixture("counting10.penta") + " --alg gauss").code == 2);
    CHECK(run("frobnicate").code == 2);
    std::filesystem::remove(singular);
    std::filesystem::remove(broken);
}

TEST_CASE("det") {
    const auto r = run("det " + fixture("breakdown4.penta"));
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(r.out) - 126.0) <= 1e-12 * 126.0);
    const auto exact = run("det " + fixture("breakdown4.penta") + " --exact");
    CHECK(exact.out == "126\n");
    const auto r10 = run("det " + fixture("counting10.penta"));
    CHECK(std::abs(std::stod(r10.out) - 1061233.0) <= 1e-12 * 1061233.0);
    CHECK(run("det " + fixture("counting10.penta") + " --exact").out == "1061233\n");
}

TEST_CASE("gen-example3 writes a system solved by the all-ones vector") {
    const auto path = scratch("ex3.penta");
    REQUIRE(run("gen-example3 --n 50 --out " + path.string()).code == 0);
    const auto r = run("solve " + path.string() + " --alg ptrans2");
    CHECK(r.code == 0);
    const auto x = numbers_after(r.out, "solution:");
    REQUIRE(x.size() == 50);
    for (double v : x) CHECK(std::abs(v - 1.0) <= 1e-8);
    CHECK(run("gen-example3 --n 5 --out " + path.string()).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("round trip: solve output reproduces the right-hand side") {
    const auto path = scratch("rt.penta");
    std::ofstream(path) << "PENTA 6\n"
                           "10 -9.5 8 7.25 -11 6\n"
                           "1 2 -1 0.5 3 0\n"
                           "0.5 -1 2 1 0 0\n"
                           "0 1 -2 1.5 1 2\n"
                           "0 0 1 -1 0.25 1\n"
                           "1 2 3 4 5 6\n";
    const double d[] = {10, -9.5, 8, 7.25, -11, 6}, a[] = {1, 2, -1, 0.5, 3, 0}, b[] = {0.5, -1, 2, 1, 0, 0},
                 c[] = {0, 1, -2, 1.5, 1, 2}, e[] = {0, 0, 1, -1, 0.25, 1}, y[] = {1, 2, 3, 4, 5, 6};
    for (const char* alg : {"ptrans1", "ptrans2", "sptrans1"}) {
        const auto r = run("solve " + path.string() + " --alg " + alg);
        REQUIRE(r.code == 0);
        const auto x = numbers_after(r.out, "solution:");
        REQUIRE(x.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            double s = d[i] * x[i];
            if (i + 1 < 6) s += a[i] * x[i + 1];
            if (i + 2 < 6) s += b[i] * x[i + 2];
            if (i >= 1) s += c[i] * x[i - 1];
            if (i >= 2) s += e[i] * x[i - 2];
            CHECK(std::abs(s - y[i]) <= 1e-8);
        }
    }
    std::filesystem::remove(path);
}

TEST_CASE("bench table and CSV") {
    const auto csv = scratch("bench.csv");
    const auto r = run("bench --sizes 500,5000 --csv " + csv.string());
    REQUIRE(r.code == 0);
    CHECK(r.out.find("PTRANS-I") != std::string::npos);
    CHECK(r.out.find("PTRANS-II") != std::string::npos);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,algorithm,max_abs_error,wall_time_seconds,op_count,status");
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        REQUIRE(cells.size() == 6);
        const std::size_t n = std::stoul(cells[0]);
        CHECK(std::stoull(cells[4]) == 19 * n - 29);
        CHECK(cells[5] == "ok");
        const double err = std::stod(cells[2]);
        if (cells[1] == "PTRANS-II") CHECK(err == 0.0);
        if (cells[1] == "PTRANS-I" && n == 500) CHECK((err >= 1e-8 && err <= 1e-6));
        if (cells[1] == "PTRANS-I" && n == 5000) CHECK((err >= 1e-4 && err <= 1e-2));
    }
    CHECK(rows == 4);
    std::filesystem::remove(csv);

    const auto failed = run("bench --sizes 8 --algs ptrans1,sptrans1");
    CHECK(failed.code == 0);
}
