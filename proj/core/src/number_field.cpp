#include "knotsig/number_field.hpp"

#include <utility>

#include "knotsig/error.hpp"

namespace knotsig {
namespace {

RatPolynomial monic_of(const IntPolynomial& p) {
  RatPolynomial r = to_rational(p);
  return Rational(1 / r.leading()) * r;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) throw InternalError("field elements from different fields");
}

}  // namespace

NumberField::NumberField(const RealAlgebraicNumber& generator)
    : alpha_(generator), modulus_(monic_of(generator.min_poly())) {}

RealAlgebraicNumber NumberField::generator() const {
  std::lock_guard lock(mu_);
  return alpha_;
}

RatPolynomial NumberField::modulus() const {
  std::lock_guard lock(mu_);
  return modulus_;
}

RatPolynomial NumberField::reduce(const RatPolynomial& rep) const {
  RatPolynomial m = modulus();
  if (rep.degree() < m.degree()) return rep;
  return remainder(rep, m);
}

RatPolynomial NumberField::multiply(const RatPolynomial& a, const RatPolynomial& b) const {
  return reduce(reduce(a) * reduce(b));
}

bool NumberField::split_modulus(const RatPolynomial& factor) {
  IntPolynomial f = canonical(primitive_part(factor));
  RatPolynomial cofactor = divmod(modulus_, factor).first;
  IntPolynomial c = canonical(primitive_part(cofactor));
  bool in_factor = sign_at(f, alpha_.lo()) * sign_at(f, alpha_.hi()) < 0 ||
                   (alpha_.is_rational() && sign_at(f, alpha_.lo()) == 0);
  const IntPolynomial& keep = in_factor ? f : c;
  if (alpha_.is_rational()) {
    alpha_ = RealAlgebraicNumber(alpha_.rational_value());
  } else {
    alpha_ = make_isolated(keep, alpha_.lo(), alpha_.hi());
  }
  modulus_ = monic_of(alpha_.min_poly());
  return in_factor;
}

int NumberField::sign(const RatPolynomial& rep) {
  std::lock_guard lock(mu_);
  RatPolynomial r = rep.degree() < modulus_.degree() ? rep : remainder(rep, modulus_);
  if (r.degree() <= 0) return r.is_zero() ? 0 : knotsig::sign(r.leading());
  RatPolynomial common = gcd(r, modulus_);
  if (common.degree() >= 1) {
    if (split_modulus(common)) return 0;
    r = remainder(r, modulus_);
    if (r.degree() <= 0) return r.is_zero() ? 0 : knotsig::sign(r.leading());
  }
  return sign_at_refining(alpha_, r);
}

RatPolynomial NumberField::inverse(const RatPolynomial& rep) {
  std::lock_guard lock(mu_);
  while (true) {
    RatPolynomial r = remainder(rep, modulus_);
    if (r.is_zero()) throw DivisionByZeroError("inverse of zero in Q(alpha)");
    ExtendedGcd e = extended_gcd(r, modulus_);
    if (e.g.degree() == 0) return remainder(e.s, modulus_);
    // alpha is a root of exactly one of the two coprime factors; continue in it.
    split_modulus(e.g);
  }
}

FieldElement::FieldElement(std::shared_ptr<NumberField> field, RatPolynomial rep)
    : field_(std::move(field)), rep_(std::move(rep)) {}

FieldElement::FieldElement(std::shared_ptr<NumberField> field, const Rational& value)
    : field_(std::move(field)), rep_(RatPolynomial::constant(value)) {}

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inverse(rep_)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.rep_ + b.rep_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.rep_ - b.rep_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_->multiply(a.rep_, b.rep_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.canonical_rep() == b.canonical_rep();
}

}  // namespace knotsig
