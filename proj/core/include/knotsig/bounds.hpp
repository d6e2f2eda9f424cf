#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotsig/signature.hpp"

namespace knotsig {

/// Where a bound is attained: on an arc of the signature function or at a
/// jump (a circle root of the Alexander polynomial).
struct Witness {
  enum class Kind { Arc, Root };
  Kind kind = Kind::Arc;
  std::size_t index = 0;
  /// sigma there (gds bound) or the averaged signature (g4 bound).
  Rational value;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct BoundWithWitness {
  unsigned bound = 0;
  Witness witness;
};

/// max |sigma_omega| over omega != 1: a lower bound for the doubly slice genus.
BoundWithWitness gds_lower_bound(const SignatureFunction& f);

/// max over x of ceil(|averaged sigma| / 2): a lower bound for the slice genus.
BoundWithWitness g4_lower_bound(const SignatureFunction& f);

/// Genera recorded in a knot table, when known.
struct GenusMetadata {
  std::optional<unsigned> g3;
  std::optional<unsigned> g4;
  std::optional<unsigned> gds;
};

enum class Verdict { Consistent, Violated, Unknown };

struct VerdictLine {
  std::string check;
  Verdict verdict = Verdict::Unknown;
};

struct BoundsReport {
  std::string name;
  SignatureFunction function;
  BoundWithWitness gds;
  BoundWithWitness g4;
  std::optional<GenusMetadata> metadata;
  /// Empty without metadata.
  std::vector<VerdictLine> verdicts;
};

/// Computes the signature function and both bounds, and checks them against
/// table metadata: gds_lower <= gds, g4_lower <= g4 and 2 g4 <= gds <= 2 g3.
/// Errors are rethrown with `name` prefixed.
BoundsReport bounds_report(const SeifertMatrix& v, const std::optional<GenusMetadata>& metadata = {},
                           const std::string& name = {});

/// Same, from an already computed signature function.
BoundsReport bounds_report(SignatureFunction f, const std::optional<GenusMetadata>& metadata = {},
                           const std::string& name = {});

std::string to_string(Verdict v);

}  // namespace knotsig
