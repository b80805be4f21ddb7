#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace penta {

/// Error categories shared by every module and mirrored by the C status codes.
enum class Errc {
    dimension_mismatch = 1,
    invalid_order,
    invalid_padding,
    parse_error,
    zero_pivot,
    singular_matrix,
    division_by_zero_function,
    pole_at_zero,
    degree_overflow,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// A pivot (mu for the forward algorithm, psi for the backward one) was
/// exactly zero. `index` is 0-based, so mu_2 in row-numbered notation is 1.
class ZeroPivot : public Error {
public:
    explicit ZeroPivot(std::size_t index)
        : Error(Errc::zero_pivot, "zero pivot at row " + std::to_string(index + 1)),
          index_(index) {}
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error(Errc::singular_matrix, "No solutions") {}
};

}  // namespace penta
