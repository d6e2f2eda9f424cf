#include "knotsig/polynomial.hpp"

#include <sstream>

#include "knotsig/error.hpp"

namespace knotsig {
namespace {

template <class T>
std::string format(const Polynomial<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    T c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    bool negative = sgn(c) < 0;
    T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return inv * p;
}

}  // namespace

std::string to_string(const IntPolynomial& p, char var) { return format(p, var); }
std::string to_string(const RatPolynomial& p, char var) { return format(p, var); }

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c.get_num() * (den / c.get_den()));
  return primitive_part(IntPolynomial(std::move(v)));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  Integer g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 1) return p;
  std::vector<Integer> v(p.coefficients());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial canonical(const IntPolynomial& p) {
  IntPolynomial q = primitive_part(p);
  if (!q.is_zero() && sgn(q.leading()) < 0) return -q;
  return q;
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> r(a.coefficients());
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rational lead_inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] * lead_inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = remainder(x, y);
    // Keeping the remainders monic bounds coefficient growth.
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return canonical(primitive_part(gcd(to_rational(a), to_rational(b))));
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw InternalError("exact_quotient: divisor does not divide");
  std::vector<Integer> v;
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) throw InternalError("exact_quotient: non-integral quotient");
    v.emplace_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return canonical(p);
  IntPolynomial g = gcd(p, p.derivative());
  return canonical(primitive_part(divmod(to_rational(p), to_rational(g)).first));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  // Yun's algorithm over Q.
  std::vector<IntPolynomial> out;
  if (p.degree() <= 0) return out;
  RatPolynomial f = to_rational(p);
  RatPolynomial df = f.derivative();
  RatPolynomial a = gcd(f, df);
  RatPolynomial b = divmod(f, a).first;
  RatPolynomial c = divmod(df, a).first;
  RatPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    RatPolynomial g = gcd(b, d);
    out.push_back(canonical(primitive_part(g)));
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntPolynomial scale_argument(const IntPolynomial& p, const Rational& factor) {
  std::vector<Rational> v;
  Rational power = 1;
  for (const auto& c : p.coefficients()) {
    v.emplace_back(c * power);
    power *= factor;
  }
  return primitive_part(RatPolynomial(std::move(v)));
}

int sign_at(const IntPolynomial& p, const Rational& x) { return sgn(p.evaluate(x)); }
int sign_at(const RatPolynomial& p, const Rational& x) { return sgn(p.evaluate(x)); }

}  // namespace knotsig
