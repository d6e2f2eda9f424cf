#pragma once

#include <string>
#include <vector>

#include "knotsig/polynomial.hpp"

namespace knotsig {

/// A real root of a squarefree integer polynomial, pinned by a rational
/// isolating interval [lo, hi].
///
/// Invariants: min_poly is squarefree, primitive, with positive leading
/// coefficient; it has exactly one root in [lo, hi]. Either lo == hi (the
/// number is rational and min_poly is linear) or min_poly is nonzero at both
/// endpoints and its derivative has no root in [lo, hi], so min_poly is
/// strictly monotone there.
class RealAlgebraicNumber {
 public:
  /// Zero.
  RealAlgebraicNumber();
  explicit RealAlgebraicNumber(const Rational& value);

  /// Checked constructor. Throws InputError when the invariants do not hold.
  RealAlgebraicNumber(const IntPolynomial& min_poly, const Rational& lo, const Rational& hi);

  [[nodiscard]] const IntPolynomial& min_poly() const { return poly_; }
  [[nodiscard]] const Rational& lo() const { return lo_; }
  [[nodiscard]] const Rational& hi() const { return hi_; }
  [[nodiscard]] bool is_rational() const { return lo_ == hi_; }
  /// Only meaningful when is_rational().
  [[nodiscard]] const Rational& rational_value() const { return lo_; }
  [[nodiscard]] Rational width() const { return hi_ - lo_; }

  /// Sign of min_poly just left of the root (it is monotone on the interval).
  [[nodiscard]] int sign_below() const { return sign_at(poly_, lo_); }

  /// Decimal approximation with the requested significant digits.
  [[nodiscard]] std::string decimal(int significant_digits = 12) const;
  [[nodiscard]] double approximate() const;

  /// One bisection step; the value is unchanged.
  void bisect();

  /// Structural equality: same min_poly and interval.
  friend bool operator==(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) = default;

  struct Unchecked {};
  RealAlgebraicNumber(Unchecked, IntPolynomial min_poly, Rational lo, Rational hi)
      : poly_(std::move(min_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

 private:
  IntPolynomial poly_;
  Rational lo_;
  Rational hi_;
};

/// Distinct real roots of p in the open interval (lo, hi), ascending, with
/// pairwise disjoint isolating intervals. Each carries the squarefree part of
/// p as its min_poly (or a linear polynomial when found to be rational).
/// Throws EndpointIsRootError if p(lo) = 0 or p(hi) = 0.
std::vector<RealAlgebraicNumber> isolate_real_roots(const IntPolynomial& p, const Rational& lo,
                                                    const Rational& hi);

/// Same number with an isolating interval no wider than `width`.
RealAlgebraicNumber refine(const RealAlgebraicNumber& alpha, const Rational& width);

/// Exact sign of g(alpha).
int sign_at(const RealAlgebraicNumber& alpha, const RatPolynomial& g);
int sign_at(const RealAlgebraicNumber& alpha, const IntPolynomial& g);

/// As sign_at, but keeps the refined interval in `alpha`.
int sign_at_refining(RealAlgebraicNumber& alpha, const RatPolynomial& g);

/// Exact three-way comparison.
int compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);
int compare(const RealAlgebraicNumber& a, const Rational& r);

/// factor * alpha for factor > 0.
RealAlgebraicNumber scale(const RealAlgebraicNumber& alpha, const Rational& factor);

/// Builds a valid number from a squarefree polynomial with exactly one root in
/// the open interval (lo, hi) and nonzero at both endpoints, tightening the
/// interval until the monotonicity invariant holds.
RealAlgebraicNumber make_isolated(const IntPolynomial& squarefree, Rational lo, Rational hi);

}  // namespace knotsig
