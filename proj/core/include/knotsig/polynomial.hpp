#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/rational.hpp"

namespace knotsig {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  /// c * x^k
  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const T& leading() const { return c_.back(); }
  [[nodiscard]] const std::vector<T>& coefficients() const { return c_; }
  [[nodiscard]] T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  template <class U>
  [[nodiscard]] U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  [[nodiscard]] Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> v(c_);
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> v(p.c_);
    for (auto& x : v) x *= s;
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Human-readable form, e.g. "x^2 - 2".
std::string to_string(const IntPolynomial& p, char var = 'x');
std::string to_string(const RatPolynomial& p, char var = 'x');

RatPolynomial to_rational(const IntPolynomial& p);

/// Positive rational multiple of p with coprime integer coefficients.
/// The sign of every value is preserved.
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive, with positive leading coefficient.
IntPolynomial canonical(const IntPolynomial& p);

/// Quotient and remainder over Q. Throws DivisionByZeroError for b = 0.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd over Q (zero if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct ExtendedGcd {
  RatPolynomial g;  ///< monic gcd
  RatPolynomial s;  ///< s*a + t*b = g
  RatPolynomial t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Exact division a / b; throws InternalError when b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Canonical squarefree part p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Squarefree factors by multiplicity: result[k] collects roots of multiplicity k+1.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// Primitive integer polynomial whose roots are those of p divided by `factor`,
/// i.e. p(factor * x) made primitive.
IntPolynomial scale_argument(const IntPolynomial& p, const Rational& factor);

/// Exact sign of p(x).
int sign_at(const IntPolynomial& p, const Rational& x);
int sign_at(const RatPolynomial& p, const Rational& x);

}  // namespace knotsig
