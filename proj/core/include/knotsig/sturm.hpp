#pragma once

#include <vector>

#include "knotsig/polynomial.hpp"

namespace knotsig {

/// Sturm chain p, p', -rem(p, p'), ... with every member scaled to a
/// primitive integer polynomial by a positive factor.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  [[nodiscard]] const std::vector<IntPolynomial>& chain() const { return chain_; }
  [[nodiscard]] int sign_variations(const Rational& x) const;
  /// Distinct roots in the open interval (lo, hi). Throws EndpointIsRootError
  /// if either endpoint is a root.
  [[nodiscard]] unsigned count(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of squarefree p in (lo, hi).
unsigned sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

}  // namespace knotsig
