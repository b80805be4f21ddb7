#pragma once

// PENTA v1 text format:
//
//   PENTA <n> [BACKWARD]
//   <d_1 ... d_n>
//   <a_1 ... a_n>      a_n = 0
//   <b_1 ... b_n>      b_{n-1} = b_n = 0
//   <c_1 ... c_n>      c_1 = 0
//   <e_1 ... e_n>      e_1 = e_2 = 0
//   <y_1 ... y_n>
//
// '#' starts a comment running to the end of the line; blank lines are
// ignored. Numbers are decimals (optionally with an exponent) or fractions
// p/q, read exactly. With BACKWARD the bands describe the forward companion
// P of the backward matrix Phat = P M.

#include <string>
#include <string_view>

#include "penta/core.hpp"
#include "penta/rational.hpp"

namespace penta {

struct PentaSystem {
    PentaMatrix<BigRational> matrix;
    Vec<BigRational> rhs;
    bool backward = false;
};

/// Throws Error(parse_error) with a line number, or the PentaMatrix
/// construction errors (invalid_order, invalid_padding).
[[nodiscard]] PentaSystem parse_penta(std::string_view text);
[[nodiscard]] PentaSystem load_penta(const std::string& path);

/// Terminating decimals are written as decimals, anything else as p/q.
[[nodiscard]] std::string write_penta(const PentaSystem& system);
void save_penta(const PentaSystem& system, const std::string& path);

/// Order-n member (n >= 6) of the test family with interior stencil
/// (1, -4, 6, -4, 1), first row (9, -4, 1), last two rows (1, -4, 5, -2)
/// and (1, -2, 1), right-hand side (6, -1, 0, ..., 0). Its solution is the
/// all-ones vector.
[[nodiscard]] PentaSystem generate_example3(std::size_t n);

}  // namespace penta
