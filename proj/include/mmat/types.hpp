#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmat {

using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Type I: order n prime, entries 1 + (i-1)(j-1) mod n.
// Type II: order n with n+1 prime (n even), entries i*j mod (n+1).
enum class MatrixType { TypeI, TypeII };

// Standard is the convention every design in this library is built from.
// Flipped maps odd values (including 1) to +1 and even values to -1; it is
// provided only to observe the determinant sign change it causes.
enum class SignConvention { Standard, Flipped };

inline const char* to_string(MatrixType t) {
  return t == MatrixType::TypeI ? "I" : "II";
}

inline const char* to_string(SignConvention c) {
  return c == SignConvention::Standard ? "standard" : "flipped";
}

struct InadmissibleOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct WrongType : std::logic_error {
  using std::logic_error::logic_error;
};

struct WrongConvention : std::logic_error {
  using std::logic_error::logic_error;
};

struct DegenerateDesign : std::domain_error {
  using std::domain_error::domain_error;
};

struct OrderTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ArithmeticOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace mmat
