#include "knotsig/algebraic.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "knotsig/error.hpp"
#include "knotsig/sturm.hpp"

namespace knotsig {
namespace {

IntPolynomial linear_poly(const Rational& v) {
  return canonical(IntPolynomial{Integer(-v.get_num()), Integer(v.get_den())});
}

std::pair<Rational, Rational> interval_mul(const std::pair<Rational, Rational>& a,
                                           const Rational& lo, const Rational& hi) {
  Rational p1 = a.first * lo, p2 = a.first * hi, p3 = a.second * lo, p4 = a.second * hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

/// Enclosure of g over [lo, hi] by interval Horner evaluation.
std::pair<Rational, Rational> interval_eval(const RatPolynomial& g, const Rational& lo,
                                            const Rational& hi) {
  const auto& c = g.coefficients();
  std::pair<Rational, Rational> acc{c.back(), c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = interval_mul(acc, lo, hi);
    acc.first += c[k];
    acc.second += c[k];
  }
  return acc;
}

bool changes_sign(const IntPolynomial& h, const Rational& lo, const Rational& hi) {
  return sign_at(h, lo) * sign_at(h, hi) < 0;
}

}  // namespace

RealAlgebraicNumber::RealAlgebraicNumber() : RealAlgebraicNumber(Rational(0)) {}

RealAlgebraicNumber::RealAlgebraicNumber(const Rational& value)
    : poly_(linear_poly(value)), lo_(value), hi_(value) {}

RealAlgebraicNumber::RealAlgebraicNumber(const IntPolynomial& min_poly, const Rational& lo,
                                         const Rational& hi)
    : poly_(min_poly), lo_(lo), hi_(hi) {
  if (poly_.degree() < 1) throw InputError("algebraic number needs a nonconstant polynomial");
  if (canonical(poly_) != poly_)
    throw InputError("min_poly must be primitive with positive leading coefficient");
  if (gcd(poly_, poly_.derivative()).degree() > 0) throw InputError("min_poly must be squarefree");
  if (lo_ > hi_) throw InputError("isolating interval has lo > hi");
  if (lo_ == hi_) {
    if (poly_.degree() != 1 || sign_at(poly_, lo_) != 0)
      throw InputError("degenerate interval must carry a linear min_poly vanishing there");
    return;
  }
  if (SturmSequence(poly_).count(lo_, hi_) != 1)
    throw InputError("interval does not isolate exactly one root");
  if (poly_.degree() >= 2) {
    IntPolynomial d = squarefree_part(poly_.derivative());
    if (d.degree() >= 1 &&
        (sign_at(d, lo_) == 0 || sign_at(d, hi_) == 0 || SturmSequence(d).count(lo_, hi_) != 0))
      throw InputError("derivative of min_poly vanishes on the isolating interval");
  }
}

void RealAlgebraicNumber::bisect() {
  if (is_rational()) return;
  Rational mid = (lo_ + hi_) / 2;
  int s = sign_at(poly_, mid);
  if (s == 0) {
    poly_ = linear_poly(mid);
    lo_ = hi_ = mid;
  } else if (s == sign_at(poly_, lo_)) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

std::string RealAlgebraicNumber::decimal(int significant_digits) const {
  if (is_rational()) return to_decimal(lo_, significant_digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(significant_digits + 4));
  Rational floor_width(1, Integer(scale * scale));
  RealAlgebraicNumber a = *this;
  while (!a.is_rational() && a.width() * scale > std::max(abs(a.lo_), abs(a.hi_)) &&
         a.width() > floor_width)
    a.bisect();
  return to_decimal((a.lo_ + a.hi_) / 2, significant_digits);
}

double RealAlgebraicNumber::approximate() const {
  RealAlgebraicNumber a = refine(*this, Rational(1, 1UL << 52));
  return to_double((a.lo_ + a.hi_) / 2);
}

RealAlgebraicNumber make_isolated(const IntPolynomial& squarefree, Rational lo, Rational hi) {
  IntPolynomial p = canonical(squarefree);
  if (p.degree() < 1) throw InputError("make_isolated: constant polynomial has no root");
  if (p.degree() == 1) {
    Rational root = make_rational(-p.coeff(0), p.coeff(1));
    return RealAlgebraicNumber(root);
  }
  RealAlgebraicNumber a(RealAlgebraicNumber::Unchecked{}, p, std::move(lo), std::move(hi));
  IntPolynomial d = squarefree_part(p.derivative());
  if (d.degree() < 1) return a;
  SturmSequence chain(d);
  while (!a.is_rational()) {
    if (sign_at(d, a.lo()) != 0 && sign_at(d, a.hi()) != 0 && chain.count(a.lo(), a.hi()) == 0) break;
    a.bisect();
  }
  return a;
}

std::vector<RealAlgebraicNumber> isolate_real_roots(const IntPolynomial& p, const Rational& lo,
                                                    const Rational& hi) {
  if (p.is_zero()) throw InputError("cannot isolate roots of the zero polynomial");
  if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0)
    throw EndpointIsRootError("interval endpoint is a root of " + to_string(p));
  std::vector<RealAlgebraicNumber> roots;
  IntPolynomial sf = squarefree_part(p);
  if (sf.degree() < 1 || lo >= hi) return roots;
  SturmSequence chain(sf);

  std::function<void(const Rational&, const Rational&, unsigned)> split =
      [&](const Rational& a, const Rational& b, unsigned count) {
        if (count == 0) return;
        if (count == 1) {
          roots.push_back(make_isolated(sf, a, b));
          return;
        }
        Rational half = (b - a) / 2;
        Rational mid = a + half;
        // A midpoint that is itself a root is nudged by a third of the
        // half-width, then a ninth, ... until it misses every root.
        Rational nudge = half / 3;
        bool upward = true;
        while (sign_at(sf, mid) == 0) {
          mid = a + half + (upward ? nudge : Rational(-nudge));
          if (!upward) nudge /= 3;
          upward = !upward;
        }
        unsigned left = static_cast<unsigned>(chain.sign_variations(a) - chain.sign_variations(mid));
        split(a, mid, left);
        split(mid, b, count - left);
      };
  split(lo, hi, chain.count(lo, hi));
  return roots;
}

RealAlgebraicNumber refine(const RealAlgebraicNumber& alpha, const Rational& width) {
  RealAlgebraicNumber a = alpha;
  while (!a.is_rational() && a.width() > width) a.bisect();
  return a;
}

int sign_at_refining(RealAlgebraicNumber& alpha, const RatPolynomial& g) {
  if (g.is_zero()) return 0;
  if (alpha.is_rational()) return sign_at(g, alpha.rational_value());
  if (g.degree() == 0) return sign(g.leading());
  RatPolynomial common = gcd(g, to_rational(alpha.min_poly()));
  if (common.degree() >= 1 && changes_sign(primitive_part(common), alpha.lo(), alpha.hi())) return 0;
  while (true) {
    auto [low, high] = interval_eval(g, alpha.lo(), alpha.hi());
    if (low > 0) return 1;
    if (high < 0) return -1;
    alpha.bisect();
    if (alpha.is_rational()) return sign_at(g, alpha.rational_value());
  }
}

int sign_at(const RealAlgebraicNumber& alpha, const RatPolynomial& g) {
  RealAlgebraicNumber a = alpha;
  return sign_at_refining(a, g);
}

int sign_at(const RealAlgebraicNumber& alpha, const IntPolynomial& g) {
  return sign_at(alpha, to_rational(g));
}

int compare(const RealAlgebraicNumber& a, const Rational& r) {
  if (a.is_rational()) {
    int c = cmp(a.rational_value(), r);
    return (c > 0) - (c < 0);
  }
  if (r <= a.lo()) return 1;
  if (r >= a.hi()) return -1;
  return sign_at(a, RatPolynomial{Rational(-r), Rational(1)});
}

int compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  if (b.is_rational()) return compare(a, b.rational_value());
  if (a.is_rational()) return -compare(b, a.rational_value());
  RealAlgebraicNumber x = a, y = b;
  IntPolynomial common = gcd(x.min_poly(), y.min_poly());
  bool maybe_equal = common.degree() >= 1;
  while (true) {
    if (x.is_rational() || y.is_rational()) return compare(x, y);
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (maybe_equal) {
      if (!changes_sign(common, x.lo(), x.hi()) || !changes_sign(common, y.lo(), y.hi())) {
        maybe_equal = false;
      } else {
        // Both are roots of `common`; they coincide iff the union of the
        // intervals holds a single root of it.
        Rational lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
        if (sturm_count(common, lo, hi) == 1) return 0;
      }
    }
    x.bisect();
    y.bisect();
  }
}

RealAlgebraicNumber scale(const RealAlgebraicNumber& alpha, const Rational& factor) {
  if (factor <= 0) throw InputError("scale factor must be positive");
  if (alpha.is_rational()) return RealAlgebraicNumber(Rational(alpha.rational_value() * factor));
  return RealAlgebraicNumber(RealAlgebraicNumber::Unchecked{},
                             canonical(scale_argument(alpha.min_poly(), Rational(1 / factor))),
                             alpha.lo() * factor, alpha.hi() * factor);
}

}  // namespace knotsig
