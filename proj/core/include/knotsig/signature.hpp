#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "knotsig/algebraic.hpp"
#include "knotsig/congruence.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

/// omega = c + i s with c, s rational, c^2 + s^2 = 1 and omega != 1.
struct RationalPoint {
  Rational c;
  Rational s;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// omega = c + i sqrt(1 - c^2) on the upper half circle, -1 < c < 1.
struct AlgebraicPoint {
  RealAlgebraicNumber c;
};

/// omega = -1.
struct MinusOne {};

using CirclePoint = std::variant<RationalPoint, AlgebraicPoint, MinusOne>;

/// Checked RationalPoint. Throws InputError off the circle and
/// PointIsOneError at (1, 0).
RationalPoint make_rational_point(const Rational& c, const Rational& s);

/// (c, s) = ((1 - u^2) / (1 + u^2), 2u / (1 + u^2)).
RationalPoint pythagorean_point(const Rational& u);

/// Signature and nullity of the hermitian form (1 - omega) V + (1 - conj(omega)) V^T.
struct SignatureValue {
  int sigma = 0;
  int nullity = 0;
  friend bool operator==(const SignatureValue&, const SignatureValue&) = default;
};

SignatureValue signature_at_rational(const SeifertMatrix& v, const RationalPoint& point);

/// Evaluation at omega = c + i sqrt(1 - c^2) for algebraic (or rational)
/// c in (-1, 1), exact over Q(c). Throws AbscissaOutOfRangeError otherwise.
SignatureValue signature_at_root(const SeifertMatrix& v, const RealAlgebraicNumber& c);

SignatureValue signature_at(const SeifertMatrix& v, const CirclePoint& point);

/// The step function theta -> sigma on the upper half circle, in the
/// coordinate x = 2 cos(theta) = omega + 1/omega in [-2, 2).
struct SignatureFunction {
  std::size_t dimension = 0;
  /// Circle roots of the Alexander polynomial, ascending.
  std::vector<RealAlgebraicNumber> jumps;
  /// arc_values[0] covers [-2, jumps[0]) and includes omega = -1; the last
  /// entry is the arc next to omega = 1.
  std::vector<int> arc_values;
  /// Exact value at each jump.
  std::vector<SignatureValue> point_values;
  /// Point at which each arc value was evaluated.
  std::vector<RationalPoint> arc_samples;

  friend bool operator==(const SignatureFunction&, const SignatureFunction&) = default;
};

SignatureFunction signature_function(const SeifertMatrix& v);

/// Where an abscissa falls: on arc `index`, or exactly at jump `index`.
struct Location {
  bool at_jump = false;
  std::size_t index = 0;
};

/// x must lie in [-2, 2). Throws AbscissaOutOfRangeError otherwise.
Location locate(const SignatureFunction& f, const RealAlgebraicNumber& x);

/// Value of the step function at x (exact point value at jumps).
SignatureValue evaluate(const SignatureFunction& f, const RealAlgebraicNumber& x);

/// Mean of the one-sided limits at x: the arc value off the jumps. The
/// result has denominator 1 or 2.
Rational averaged_signature(const SignatureFunction& f, const RealAlgebraicNumber& x);
Rational averaged_signature_at_jump(const SignatureFunction& f, std::size_t jump);

/// Pointwise sum on the common refinement of the jump sets.
SignatureFunction add(const SignatureFunction& a, const SignatureFunction& b);

/// Same step function: jumps equal as numbers, same arc and point values.
/// Ignores isolating intervals and arc sample choice.
bool equivalent(const SignatureFunction& a, const SignatureFunction& b);

/// Rational point strictly inside arc `arc` (arc >= 1) delimited by
/// `jumps`, found by a Stern-Brocot search over the Pythagorean parameter.
RationalPoint sample_arc(const std::vector<RealAlgebraicNumber>& jumps, std::size_t arc);

}  // namespace knotsig
