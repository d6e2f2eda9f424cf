#pragma once

#include <string>
#include <vector>

#include "knotsig/bounds.hpp"
#include "knotsig/knot_table.hpp"
#include "knotsig/signature.hpp"

namespace knotsig {

// Exact fields (polynomial coefficients, interval endpoints, rationals) are
// written as decimal strings and are authoritative. Fields ending in
// "_approx" are 12-significant-digit annotations.

std::string to_json(const SignatureFunction& f);
std::string to_json(const BoundsReport& report);
std::string to_json(const std::vector<ScanEntry>& entries);

/// One row per arc and per jump, in ascending x.
std::string to_tsv(const SignatureFunction& f);

/// `samples` evenly spaced angles theta/pi = k/samples, k = 1..samples,
/// with the step function value there. Samples within 1e-9 of a jump take
/// the jump value; this output is a plotting aid.
std::string step_samples_tsv(const SignatureFunction& f, unsigned samples);

std::string bounds_tsv_header();
std::string to_tsv_line(const BoundsReport& report);

std::string scan_tsv(const std::vector<ScanEntry>& entries);

/// theta / pi for x = 2 cos(theta), as a 12-digit annotation.
std::string theta_over_pi_approx(const RealAlgebraicNumber& x);

/// Short human-readable location, e.g. "root 0 (x=1, theta/pi=0.333333333333)".
std::string describe(const SignatureFunction& f, const Witness& w);

}  // namespace knotsig
