#include "knotsig/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace knotsig {
namespace {

using nlohmann::ordered_json;

std::string format_double(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

long double theta_over_pi(long double x) {
  long double half = std::clamp(x / 2, -1.0L, 1.0L);
  return std::acos(half) / std::numbers::pi_v<long double>;
}

long double x_value(const RealAlgebraicNumber& x) { return std::stold(x.decimal(20)); }

ordered_json exact_poly(const IntPolynomial& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return coeffs;
}

ordered_json jump_json(const RealAlgebraicNumber& x) {
  return ordered_json{{"min_poly", exact_poly(x.min_poly())},
                      {"interval", {{"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}}},
                      {"x_approx", x.decimal(12)},
                      {"theta_over_pi_approx", theta_over_pi_approx(x)}};
}

ordered_json function_json(const SignatureFunction& f) {
  ordered_json jumps = ordered_json::array();
  for (const auto& x : f.jumps) jumps.push_back(jump_json(x));
  ordered_json points = ordered_json::array();
  for (const auto& v : f.point_values) points.push_back({{"sigma", v.sigma}, {"nullity", v.nullity}});
  ordered_json samples = ordered_json::array();
  for (const auto& p : f.arc_samples) samples.push_back({{"c", to_string(p.c)}, {"s", to_string(p.s)}});
  return ordered_json{{"dimension", f.dimension},
                      {"jumps", jumps},
                      {"arc_values", f.arc_values},
                      {"arc_samples", samples},
                      {"point_values", points}};
}

ordered_json witness_json(const SignatureFunction& f, const Witness& w) {
  ordered_json j{{"kind", w.kind == Witness::Kind::Root ? "root" : "arc"},
                 {"index", w.index},
                 {"value", to_string(w.value)},
                 {"where", describe(f, w)}};
  if (w.kind == Witness::Kind::Root) j["jump"] = jump_json(f.jumps[w.index]);
  return j;
}

ordered_json optional_json(const std::optional<unsigned>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json report_json(const BoundsReport& r) {
  ordered_json j{{"name", r.name},
                 {"gds_lower", r.gds.bound},
                 {"gds_witness", witness_json(r.function, r.gds.witness)},
                 {"g4_lower", r.g4.bound},
                 {"g4_witness", witness_json(r.function, r.g4.witness)}};
  if (r.metadata) {
    j["metadata"] = {{"g3", optional_json(r.metadata->g3)},
                     {"g4", optional_json(r.metadata->g4)},
                     {"gds", optional_json(r.metadata->gds)}};
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : r.verdicts) verdicts.push_back({{"check", v.check}, {"verdict", to_string(v.verdict)}});
    j["verdicts"] = verdicts;
  } else {
    j["metadata"] = nullptr;
    j["verdicts"] = ordered_json::array();
  }
  j["signature_function"] = function_json(r.function);
  return j;
}

std::string arc_bounds(const SignatureFunction& f, std::size_t arc, bool theta) {
  std::string from = arc == 0 ? (theta ? "1" : "-2")
                              : (theta ? theta_over_pi_approx(f.jumps[arc - 1]) : f.jumps[arc - 1].decimal(12));
  std::string to = arc == f.jumps.size() ? (theta ? "0" : "2")
                                         : (theta ? theta_over_pi_approx(f.jumps[arc]) : f.jumps[arc].decimal(12));
  return from + "\t" + to;
}

std::string verdict_summary(const BoundsReport& r) {
  if (r.verdicts.empty()) return "-";
  std::string out;
  for (const auto& v : r.verdicts) {
    if (!out.empty()) out += ";";
    std::string check = v.check;
    check.erase(std::remove(check.begin(), check.end(), ' '), check.end());
    out += check + ":" + to_string(v.verdict);
  }
  return out;
}

}  // namespace

std::string theta_over_pi_approx(const RealAlgebraicNumber& x) {
  if (x.is_rational()) {
    const Rational& v = x.rational_value();
    if (v == 1) return format_double(1.0L / 3);
    if (v == -1) return format_double(2.0L / 3);
    if (v == 0) return "0.5";
  }
  return format_double(theta_over_pi(x_value(x)));
}

std::string describe(const SignatureFunction& f, const Witness& w) {
  if (w.kind == Witness::Kind::Root) {
    const auto& x = f.jumps[w.index];
    return "root " + std::to_string(w.index) + " (x=" + x.decimal(12) +
           ", theta/pi=" + theta_over_pi_approx(x) + ")";
  }
  if (w.index == 0) return "arc 0 (omega=-1)";
  const auto& p = f.arc_samples[w.index];
  return "arc " + std::to_string(w.index) + " (omega=" + to_string(p.c) + "+" + to_string(p.s) + "i)";
}

std::string to_json(const SignatureFunction& f) { return function_json(f).dump(2) + "\n"; }

std::string to_json(const BoundsReport& report) { return report_json(report).dump(2) + "\n"; }

std::string to_json(const std::vector<ScanEntry>& entries) {
  ordered_json out = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json j{{"name", e.name}};
    if (e.error) {
      j["error"] = *e.error;
    } else {
      j["gds_lower"] = e.report->gds.bound;
      j["g4_lower"] = e.report->g4.bound;
      ordered_json evidence = ordered_json::array();
      for (const auto& ev : e.evidence) {
        ordered_json item = jump_json(ev.x);
        item["jump"] = ev.jump;
        item["sigma"] = ev.value.sigma;
        item["nullity"] = ev.value.nullity;
        evidence.push_back(item);
      }
      j["root_evidence"] = evidence;
      j["report"] = report_json(*e.report);
    }
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string to_tsv(const SignatureFunction& f) {
  std::ostringstream out;
  out << "# x = 2cos(theta); decimal columns are approximate\n";
  out << "kind\tindex\tx_from\tx_to\ttheta_over_pi_from\ttheta_over_pi_to\tsigma\tnullity\n";
  for (std::size_t arc = 0; arc <= f.jumps.size(); ++arc) {
    std::string xs = arc_bounds(f, arc, false), ts = arc_bounds(f, arc, true);
    out << "arc\t" << arc << '\t' << xs << '\t' << ts << '\t' << f.arc_values[arc] << "\t0\n";
    if (arc < f.jumps.size()) {
      std::string x = f.jumps[arc].decimal(12), t = theta_over_pi_approx(f.jumps[arc]);
      out << "jump\t" << arc << '\t' << x << '\t' << x << '\t' << t << '\t' << t << '\t'
          << f.point_values[arc].sigma << '\t' << f.point_values[arc].nullity << '\n';
    }
  }
  return out.str();
}

std::string step_samples_tsv(const SignatureFunction& f, unsigned samples) {
  std::vector<long double> jumps;
  for (const auto& x : f.jumps) jumps.push_back(x_value(x));
  std::ostringstream out;
  out << "theta_over_pi\tsigma\n";
  for (unsigned k = 1; k <= samples; ++k) {
    long double t = static_cast<long double>(k) / samples;
    long double x = 2 * std::cos(t * std::numbers::pi_v<long double>);
    int sigma = f.arc_values.back();
    for (std::size_t j = 0; j < jumps.size(); ++j) {
      if (std::fabs(x - jumps[j]) < 1e-9L) {
        sigma = f.point_values[j].sigma;
        break;
      }
      if (x < jumps[j]) {
        sigma = f.arc_values[j];
        break;
      }
    }
    out << format_double(t) << '\t' << sigma << '\n';
  }
  return out.str();
}

std::string bounds_tsv_header() { return "name\tgds_lower\tg4_lower\tgds_witness\tg4_witness\tverdicts\n"; }

std::string to_tsv_line(const BoundsReport& r) {
  std::ostringstream out;
  out << (r.name.empty() ? "-" : r.name) << '\t' << r.gds.bound << '\t' << r.g4.bound << '\t'
      << describe(r.function, r.gds.witness) << '\t' << describe(r.function, r.g4.witness) << '\t'
      << verdict_summary(r) << '\n';
  return out.str();
}

std::string scan_tsv(const std::vector<ScanEntry>& entries) {
  std::ostringstream out;
  out << "name\tgds_lower\tg4_lower\troot_evidence\terror\n";
  for (const auto& e : entries) {
    out << e.name << '\t';
    if (e.error) {
      out << "-\t-\t-\t" << *e.error << '\n';
      continue;
    }
    std::string evidence;
    for (const auto& ev : e.evidence) {
      if (!evidence.empty()) evidence += ";";
      evidence += "theta/pi=" + theta_over_pi_approx(ev.x) + ":sigma=" + std::to_string(ev.value.sigma) +
                  ",nullity=" + std::to_string(ev.value.nullity);
    }
    out << e.report->gds.bound << '\t' << e.report->g4.bound << '\t' << (evidence.empty() ? "-" : evidence)
        << "\t-\n";
  }
  return out.str();
}

}  // namespace knotsig
