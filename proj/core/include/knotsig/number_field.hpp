#pragma once

#include <memory>
#include <mutex>

#include "knotsig/algebraic.hpp"

namespace knotsig {

/// Q(alpha) for a real algebraic number alpha, represented as
/// Q[x] / (modulus) with modulus the (squarefree, possibly reducible)
/// min_poly of alpha.
///
/// Whenever a gcd computation exposes a proper factor of the modulus, the
/// modulus is replaced by the factor vanishing at alpha. Elements are reduced
/// lazily against the current modulus, so the replacement is invisible to
/// callers. The interval of alpha is also refined in place by sign queries.
/// All members are thread-safe.
class NumberField {
 public:
  explicit NumberField(const RealAlgebraicNumber& generator);

  [[nodiscard]] RealAlgebraicNumber generator() const;
  /// Current monic modulus.
  [[nodiscard]] RatPolynomial modulus() const;

  [[nodiscard]] RatPolynomial reduce(const RatPolynomial& rep) const;
  [[nodiscard]] RatPolynomial multiply(const RatPolynomial& a, const RatPolynomial& b) const;
  /// Exact sign of rep(alpha).
  int sign(const RatPolynomial& rep);
  /// Representative of 1 / rep(alpha). Throws DivisionByZeroError when
  /// rep(alpha) = 0.
  RatPolynomial inverse(const RatPolynomial& rep);

 private:
  /// Replaces the modulus by whichever of `factor` and modulus / factor
  /// vanishes at alpha. Returns true when that is `factor`. Caller holds mu_.
  bool split_modulus(const RatPolynomial& factor);

  mutable std::mutex mu_;
  RealAlgebraicNumber alpha_;
  RatPolynomial modulus_;
};

/// Element of a NumberField.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<NumberField> field, RatPolynomial rep);
  FieldElement(std::shared_ptr<NumberField> field, const Rational& value);

  [[nodiscard]] const std::shared_ptr<NumberField>& field() const { return field_; }
  /// Representative reduced against the current modulus.
  [[nodiscard]] RatPolynomial canonical_rep() const { return field_->reduce(rep_); }

  [[nodiscard]] int sign() const { return field_->sign(rep_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const { return FieldElement(field_, -rep_); }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  std::shared_ptr<NumberField> field_;
  RatPolynomial rep_;
};

}  // namespace knotsig
