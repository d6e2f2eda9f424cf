#include "knotsig/signature.hpp"

#include <memory>
#include <string>

#include "knotsig/error.hpp"

namespace knotsig {
namespace {

SignatureValue halve(const Inertia& inertia) {
  if (inertia.signature() % 2 != 0 || inertia.nullity() % 2 != 0)
    throw InternalError("realified form has odd signature or nullity");
  return {inertia.signature() / 2, inertia.nullity() / 2};
}

/// [[(1 - c) S, K], [K^T, S / (1 + c)]] with S = V + V^T, K = V - V^T.
/// Congruent to the realification of the hermitian form scaled by 1/s on
/// the second block, so only c enters.
template <class Scalar, class FromInt>
Matrix<Scalar> scaled_realification(const SeifertMatrix& v, const Scalar& one_minus_c,
                                    const Scalar& inv_one_plus_c, const Scalar& zero,
                                    FromInt from_int) {
  const std::size_t n = v.dimension();
  Matrix<Scalar> d(2 * n, 2 * n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer sym = v(i, j) + v(j, i);
      Integer skew = v(i, j) - v(j, i);
      Scalar s = from_int(sym);
      d(i, j) = one_minus_c * s;
      d(n + i, n + j) = s * inv_one_plus_c;
      d(i, n + j) = from_int(skew);
      d(n + j, i) = from_int(skew);
    }
  }
  return d;
}

Rational two_cos(const RationalPoint& p) { return 2 * p.c; }

}  // namespace

RationalPoint make_rational_point(const Rational& c, const Rational& s) {
  if (c * c + s * s != 1)
    throw InputError("(" + to_string(c) + ", " + to_string(s) + ") is not on the unit circle");
  if (c == 1) throw PointIsOneError("omega = 1 is excluded");
  return {c, s};
}

RationalPoint pythagorean_point(const Rational& u) {
  Rational denom = 1 + u * u;
  return make_rational_point((1 - u * u) / denom, 2 * u / denom);
}

SignatureValue signature_at_rational(const SeifertMatrix& v, const RationalPoint& point) {
  RationalPoint p = make_rational_point(point.c, point.s);
  const std::size_t n = v.dimension();
  if (n == 0) return {0, 0};
  // H = A + iB with A = (1 - c)(V + V^T), B = -s (V - V^T); realified as
  // [[A, -B], [B, A]].
  Matrix<Rational> d(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = (1 - p.c) * Rational(v(i, j) + v(j, i));
      Rational b = -p.s * Rational(v(i, j) - v(j, i));
      d(i, j) = a;
      d(n + i, n + j) = a;
      d(i, n + j) = -b;
      d(n + i, j) = b;
    }
  }
  return halve(congruence_diagonalize(std::move(d)));
}

SignatureValue signature_at_root(const SeifertMatrix& v, const RealAlgebraicNumber& c) {
  if (compare(c, Rational(-1)) <= 0 || compare(c, Rational(1)) >= 0)
    throw AbscissaOutOfRangeError("cos(theta) must lie strictly inside (-1, 1)");
  if (v.dimension() == 0) return {0, 0};
  if (c.is_rational()) {
    const Rational& value = c.rational_value();
    auto d = scaled_realification<Rational>(v, Rational(1 - value), Rational(1 / (1 + value)),
                                            Rational(0), [](const Integer& k) { return Rational(k); });
    return halve(congruence_diagonalize(std::move(d)));
  }
  auto field = std::make_shared<NumberField>(c);
  FieldElement one_minus_c(field, RatPolynomial{Rational(1), Rational(-1)});
  FieldElement inv_one_plus_c = FieldElement(field, RatPolynomial{Rational(1), Rational(1)}).inverse();
  auto d = scaled_realification<FieldElement>(
      v, one_minus_c, inv_one_plus_c, FieldElement(field, Rational(0)),
      [&field](const Integer& k) { return FieldElement(field, Rational(k)); });
  return halve(congruence_diagonalize(std::move(d)));
}

SignatureValue signature_at(const SeifertMatrix& v, const CirclePoint& point) {
  return std::visit(
      [&v](const auto& p) -> SignatureValue {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, RationalPoint>) {
          return signature_at_rational(v, p);
        } else if constexpr (std::is_same_v<P, AlgebraicPoint>) {
          return signature_at_root(v, p.c);
        } else {
          return signature_at_rational(v, RationalPoint{Rational(-1), Rational(0)});
        }
      },
      point);
}

RationalPoint sample_arc(const std::vector<RealAlgebraicNumber>& jumps, std::size_t arc) {
  if (arc == 0 || arc > jumps.size()) throw InternalError("sample_arc: arc index out of range");
  const RealAlgebraicNumber& left = jumps[arc - 1];
  const RealAlgebraicNumber right = arc < jumps.size() ? jumps[arc] : RealAlgebraicNumber(Rational(2));
  // x(u) = 2 (1 - u^2) / (1 + u^2) decreases from 2 to -2 on u in (0, inf).
  Integer lo_num = 0, lo_den = 1, hi_num = 1, hi_den = 0;
  for (int step = 0; step < 100000; ++step) {
    Rational u = make_rational(lo_num + hi_num, lo_den + hi_den);
    RationalPoint p = pythagorean_point(u);
    Rational x = two_cos(p);
    if (compare(right, x) <= 0) {
      lo_num += hi_num;
      lo_den += hi_den;
    } else if (compare(left, x) >= 0) {
      hi_num += lo_num;
      hi_den += lo_den;
    } else {
      return p;
    }
  }
  throw InternalError("sample_arc: no rational point found");
}

SignatureFunction signature_function(const SeifertMatrix& v) {
  SignatureFunction f;
  f.dimension = v.dimension();
  f.jumps = circle_roots(v);
  for (const auto& x : f.jumps) f.point_values.push_back(signature_at_root(v, scale(x, Rational(1, 2))));
  for (std::size_t arc = 0; arc <= f.jumps.size(); ++arc) {
    RationalPoint p = arc == 0 ? RationalPoint{Rational(-1), Rational(0)} : sample_arc(f.jumps, arc);
    SignatureValue value = signature_at_rational(v, p);
    if (value.nullity != 0)
      throw InternalError("nonzero nullity at an arc sample off the Alexander roots");
    f.arc_values.push_back(value.sigma);
    f.arc_samples.push_back(p);
  }
  return f;
}

Location locate(const SignatureFunction& f, const RealAlgebraicNumber& x) {
  if (compare(x, Rational(-2)) < 0 || compare(x, Rational(2)) >= 0)
    throw AbscissaOutOfRangeError("abscissa must lie in [-2, 2)");
  for (std::size_t j = 0; j < f.jumps.size(); ++j) {
    int c = compare(x, f.jumps[j]);
    if (c == 0) return {true, j};
    if (c < 0) return {false, j};
  }
  return {false, f.jumps.size()};
}

SignatureValue evaluate(const SignatureFunction& f, const RealAlgebraicNumber& x) {
  Location where = locate(f, x);
  if (where.at_jump) return f.point_values[where.index];
  return {f.arc_values[where.index], 0};
}

Rational averaged_signature_at_jump(const SignatureFunction& f, std::size_t jump) {
  return make_rational(f.arc_values[jump] + f.arc_values[jump + 1], 2);
}

Rational averaged_signature(const SignatureFunction& f, const RealAlgebraicNumber& x) {
  Location where = locate(f, x);
  if (where.at_jump) return averaged_signature_at_jump(f, where.index);
  return Rational(f.arc_values[where.index]);
}

SignatureFunction add(const SignatureFunction& a, const SignatureFunction& b) {
  SignatureFunction sum;
  sum.dimension = a.dimension + b.dimension;
  std::size_t i = 0, j = 0;
  while (i < a.jumps.size() || j < b.jumps.size()) {
    int order = i == a.jumps.size() ? 1 : j == b.jumps.size() ? -1 : compare(a.jumps[i], b.jumps[j]);
    if (order == 0) {
      sum.jumps.push_back(a.jumps[i]);
      sum.point_values.push_back({a.point_values[i].sigma + b.point_values[j].sigma,
                                  a.point_values[i].nullity + b.point_values[j].nullity});
      ++i;
      ++j;
    } else if (order < 0) {
      sum.jumps.push_back(a.jumps[i]);
      sum.point_values.push_back({a.point_values[i].sigma + b.arc_values[j], a.point_values[i].nullity});
      ++i;
    } else {
      sum.jumps.push_back(b.jumps[j]);
      sum.point_values.push_back({b.point_values[j].sigma + a.arc_values[i], b.point_values[j].nullity});
      ++j;
    }
  }
  for (std::size_t arc = 0; arc <= sum.jumps.size(); ++arc) {
    RationalPoint p = arc == 0 ? RationalPoint{Rational(-1), Rational(0)} : sample_arc(sum.jumps, arc);
    RealAlgebraicNumber x(two_cos(p));
    sum.arc_values.push_back(evaluate(a, x).sigma + evaluate(b, x).sigma);
    sum.arc_samples.push_back(p);
  }
  return sum;
}

bool equivalent(const SignatureFunction& a, const SignatureFunction& b) {
  if (a.dimension != b.dimension || a.jumps.size() != b.jumps.size() ||
      a.arc_values != b.arc_values || a.point_values != b.point_values)
    return false;
  for (std::size_t k = 0; k < a.jumps.size(); ++k)
    if (compare(a.jumps[k], b.jumps[k]) != 0) return false;
  return true;
}

}  // namespace knotsig
