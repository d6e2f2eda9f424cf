#include "knotsig/sturm.hpp"

#include "knotsig/error.hpp"

namespace knotsig {

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) return;
  chain_.push_back(primitive_part(p));
  IntPolynomial d = primitive_part(p.derivative());
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    RatPolynomial r = remainder(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back()));
    if (r.is_zero()) break;
    chain_.push_back(primitive_part(-r));
  }
}

int SturmSequence::sign_variations(const Rational& x) const {
  int variations = 0;
  int previous = 0;
  for (const auto& q : chain_) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

unsigned SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (chain_.empty()) throw EndpointIsRootError("Sturm count of the zero polynomial");
  if (sign_at(chain_.front(), lo) == 0 || sign_at(chain_.front(), hi) == 0)
    throw EndpointIsRootError("interval endpoint is a root of " + to_string(chain_.front()));
  if (lo >= hi) return 0;
  return static_cast<unsigned>(sign_variations(lo) - sign_variations(hi));
}

unsigned sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  return SturmSequence(p).count(lo, hi);
}

}  // namespace knotsig
