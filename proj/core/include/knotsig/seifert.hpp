#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotsig/algebraic.hpp"
#include "knotsig/matrix.hpp"
#include "knotsig/polynomial.hpp"

namespace knotsig {

/// Seifert matrix V of a knot: square, even-dimensional, with
/// det(V - V^T) = 1. The 0x0 matrix is the unknot.
class SeifertMatrix {
 public:
  /// The unknot.
  SeifertMatrix() = default;

  /// Throws OddDimensionError or NotUnimodularError (InputError for
  /// non-square input).
  static SeifertMatrix validate(Matrix<Integer> raw);

  [[nodiscard]] std::size_t dimension() const { return v_.rows(); }
  [[nodiscard]] const Matrix<Integer>& entries() const { return v_; }
  [[nodiscard]] const Integer& operator()(std::size_t i, std::size_t j) const { return v_(i, j); }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  explicit SeifertMatrix(Matrix<Integer> v) : v_(std::move(v)) {}
  Matrix<Integer> v_;
};

/// Normalized Alexander polynomial det(V - t V^T): nonzero constant term,
/// symmetric coefficients, value +1 at t = 1.
struct AlexanderPolynomial {
  IntPolynomial poly;
};

/// Q with t^d Q(t + 1/t) = Delta(t), where deg Delta = 2d.
struct TracePolynomial {
  IntPolynomial poly;
};

AlexanderPolynomial alexander(const SeifertMatrix& v);

/// Throws InputError for an asymmetric or odd-degree input.
TracePolynomial trace_polynomial(const AlexanderPolynomial& delta);

/// Distinct real roots x in (-2, 2) of the trace polynomial, ascending. Each
/// x = 2 cos(theta) stands for the pair of unit-circle roots exp(+-i theta).
std::vector<RealAlgebraicNumber> circle_roots(const SeifertMatrix& v);

/// Block diagonal sum (connected sum of knots).
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
/// -V^T (mirror image).
SeifertMatrix mirror(const SeifertMatrix& v);
/// copies-fold connected sum of v with itself; zero copies is the unknot.
SeifertMatrix connected_sum_power(const SeifertMatrix& v, unsigned copies);

/// Parses "[[a, b], [c, d]]" or "{{a, b}, {c, d}}" with arbitrary
/// whitespace. "[]", "[[]]", "{}" and "{{}}" denote the empty matrix. Throws
/// InputError on malformed or ragged input.
Matrix<Integer> parse_integer_matrix(std::string_view text);

/// Bracket syntax, e.g. "[[-1, 1], [0, -1]]".
std::string format_matrix(const Matrix<Integer>& m);

}  // namespace knotsig
