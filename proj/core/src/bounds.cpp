#include "knotsig/bounds.hpp"

#include <cstdlib>

#include "knotsig/error.hpp"

namespace knotsig {
namespace {

unsigned ceil_half(const Rational& r) {
  Rational h = abs(r) / 2;
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return static_cast<unsigned>(q.get_ui());
}

/// Largest |value|; among ties a root beats an arc, then lowest index.
struct Best {
  Rational magnitude = -1;
  Witness witness;

  void offer(Witness::Kind kind, std::size_t index, const Rational& value) {
    Rational m = abs(value);
    bool better = m > magnitude ||
                  (m == magnitude && kind == Witness::Kind::Root && witness.kind == Witness::Kind::Arc);
    if (better) {
      magnitude = m;
      witness = {kind, index, value};
    }
  }
};

VerdictLine check(std::string name, std::optional<unsigned> lhs, std::optional<unsigned> rhs) {
  if (!lhs || !rhs) return {std::move(name), Verdict::Unknown};
  return {std::move(name), *lhs <= *rhs ? Verdict::Consistent : Verdict::Violated};
}

std::optional<unsigned> twice(std::optional<unsigned> v) {
  if (!v) return std::nullopt;
  return 2 * *v;
}

}  // namespace

BoundWithWitness gds_lower_bound(const SignatureFunction& f) {
  if (f.arc_values.empty()) throw InputError("signature function has no arcs");
  Best best;
  for (std::size_t j = 0; j < f.point_values.size(); ++j)
    best.offer(Witness::Kind::Root, j, Rational(f.point_values[j].sigma));
  for (std::size_t a = 0; a < f.arc_values.size(); ++a)
    best.offer(Witness::Kind::Arc, a, Rational(f.arc_values[a]));
  return {static_cast<unsigned>(best.magnitude.get_num().get_ui()), best.witness};
}

BoundWithWitness g4_lower_bound(const SignatureFunction& f) {
  if (f.arc_values.empty()) throw InputError("signature function has no arcs");
  Best best;
  for (std::size_t j = 0; j < f.jumps.size(); ++j)
    best.offer(Witness::Kind::Root, j, averaged_signature_at_jump(f, j));
  for (std::size_t a = 0; a < f.arc_values.size(); ++a)
    best.offer(Witness::Kind::Arc, a, Rational(f.arc_values[a]));
  return {ceil_half(best.magnitude), best.witness};
}

BoundsReport bounds_report(SignatureFunction f, const std::optional<GenusMetadata>& metadata,
                           const std::string& name) {
  BoundsReport report;
  report.name = name;
  report.gds = gds_lower_bound(f);
  report.g4 = g4_lower_bound(f);
  report.function = std::move(f);
  report.metadata = metadata;
  if (metadata) {
    report.verdicts.push_back(check("gds_lower <= gds", report.gds.bound, metadata->gds));
    report.verdicts.push_back(check("g4_lower <= g4", report.g4.bound, metadata->g4));
    report.verdicts.push_back(check("2 g4 <= gds", twice(metadata->g4), metadata->gds));
    report.verdicts.push_back(check("gds <= 2 g3", metadata->gds, twice(metadata->g3)));
  }
  return report;
}

BoundsReport bounds_report(const SeifertMatrix& v, const std::optional<GenusMetadata>& metadata,
                           const std::string& name) {
  auto prefixed = [&name](const std::exception& e) {
    return name.empty() ? std::string(e.what()) : name + ": " + e.what();
  };
  try {
    return bounds_report(signature_function(v), metadata, name);
  } catch (const InternalError& e) {
    throw InternalError(prefixed(e));
  } catch (const InputError& e) {
    throw InputError(prefixed(e));
  } catch (const Error& e) {
    throw Error(prefixed(e));
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::Violated:
      return "violated";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

}  // namespace knotsig
