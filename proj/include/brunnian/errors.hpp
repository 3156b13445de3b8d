// Exception types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brunnian {

// A documented precondition was violated by the caller.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Polynomial text did not match the grammar; `position` is a 0-based
// offset into the input string.
struct parse_error : std::invalid_argument {
  parse_error(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct singular_matrix_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_companion_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The G^-1 C eigendecomposition is undefined when -a0 = 1 (1 + a0 = 0).
struct non_diagonalizable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured work budget was exceeded. `blocker` names what resisted
// (e.g. the unsplit cofactor of a factorization, or a point count).
struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& msg, std::string blocker_ = {})
      : std::runtime_error(msg), blocker(std::move(blocker_)) {}
  std::string blocker;
};

}  // namespace brunnian
