#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotsig/bounds.hpp"
#include "knotsig/error.hpp"
#include "knotsig/knot_table.hpp"
#include "knotsig/seifert.hpp"
#include "knotsig/serialize.hpp"

namespace knotsig::cli {
namespace {

enum class Format { Text, Json, Tsv };

struct Knot {
  std::string name;
  SeifertMatrix seifert;
  std::optional<GenusMetadata> metadata;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A matrix literal, `name@table.csv`, or a file holding a matrix literal.
Knot resolve(const std::string& spec) {
  auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (spec[first] == '[' || spec[first] == '{'))
    return {spec, SeifertMatrix::validate(parse_integer_matrix(spec)), std::nullopt};

  auto at = spec.find('@');
  if (at != std::string::npos && !std::filesystem::exists(spec)) {
    std::string name = spec.substr(0, at);
    std::string table = spec.substr(at + 1);
    if (name.empty() || table.empty()) throw InputError("knot spec must be name@table: " + spec);
    TableParseResult parsed = load_table(table);
    for (const auto& record : parsed.records)
      if (record.name == name) return {record.name, record.seifert, record.metadata()};
    for (const auto& d : parsed.diagnostics)
      if (d.name == name) throw InputError(name + " (line " + std::to_string(d.line) + "): " + d.message);
    throw InputError("no knot named " + name + " in " + table);
  }

  std::string text = read_file(spec);
  return {spec, SeifertMatrix::validate(parse_integer_matrix(text)), std::nullopt};
}

Knot mirrored(Knot k) {
  k.name = "mirror(" + k.name + ")";
  k.seifert = mirror(k.seifert);
  return k;
}

std::string range_text(const SignatureFunction& f, std::size_t arc) {
  std::string lo = arc == 0 ? "[-2" : "(" + f.jumps[arc - 1].decimal(12);
  std::string hi = arc == f.jumps.size() ? "2)" : f.jumps[arc].decimal(12) + ")";
  return lo + ", " + hi;
}

void print_function_text(std::ostream& out, const SignatureFunction& f) {
  out << "dimension: " << f.dimension << '\n';
  out << "jumps: " << f.jumps.size() << '\n';
  for (std::size_t j = 0; j < f.jumps.size(); ++j) {
    const auto& x = f.jumps[j];
    out << "  jump " << j << ": x~" << x.decimal(12) << " theta/pi~" << theta_over_pi_approx(x)
        << " sigma=" << f.point_values[j].sigma << " nullity=" << f.point_values[j].nullity
        << " min_poly=" << to_string(x.min_poly()) << " interval=[" << to_string(x.lo()) << ", "
        << to_string(x.hi()) << "]\n";
  }
  out << "arcs: " << f.arc_values.size() << '\n';
  for (std::size_t a = 0; a < f.arc_values.size(); ++a)
    out << "  arc " << a << ": x in " << range_text(f, a) << " sigma=" << f.arc_values[a] << '\n';
}

std::string optional_text(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "?"; }

void print_report_text(std::ostream& out, const BoundsReport& r) {
  out << "name: " << r.name << '\n';
  out << "gds_lower: " << r.gds.bound << " at " << describe(r.function, r.gds.witness)
      << " sigma=" << to_string(r.gds.witness.value) << '\n';
  out << "g4_lower: " << r.g4.bound << " at " << describe(r.function, r.g4.witness)
      << " averaged_sigma=" << to_string(r.g4.witness.value) << '\n';
  if (r.metadata) {
    out << "table: g3=" << optional_text(r.metadata->g3) << " g4=" << optional_text(r.metadata->g4)
        << " gds=" << optional_text(r.metadata->gds) << '\n';
    for (const auto& v : r.verdicts) out << "  " << v.check << ": " << to_string(v.verdict) << '\n';
  }
}

void print_report(std::ostream& out, const BoundsReport& r, Format format) {
  switch (format) {
    case Format::Json:
      out << to_json(r);
      break;
    case Format::Tsv:
      out << bounds_tsv_header() << to_tsv_line(r);
      break;
    case Format::Text:
      print_report_text(out, r);
      break;
  }
}

void print_scan_text(std::ostream& out, const std::vector<ScanEntry>& entries) {
  out << entries.size() << " knot(s)\n";
  for (const auto& e : entries) {
    out << e.name;
    if (e.error) {
      out << ": error: " << *e.error << '\n';
      continue;
    }
    out << ": gds_lower=" << e.report->gds.bound << " g4_lower=" << e.report->g4.bound;
    for (const auto& ev : e.evidence)
      out << " | root x~" << ev.x.decimal(12) << " theta/pi~" << theta_over_pi_approx(ev.x)
          << " sigma=" << ev.value.sigma << " nullity=" << ev.value.nullity;
    out << '\n';
  }
}

Format format_from(bool json, bool tsv) { return json ? Format::Json : tsv ? Format::Tsv : Format::Text; }

int cmd_sig(const std::string& spec, Format format, unsigned samples, std::ostream& out) {
  Knot k = resolve(spec);
  SignatureFunction f = signature_function(k.seifert);
  switch (format) {
    case Format::Json: {
      auto doc = nlohmann::ordered_json::parse(to_json(f));
      if (samples > 0) {
        auto rows = nlohmann::ordered_json::array();
        std::istringstream tsv(step_samples_tsv(f, samples));
        std::string line;
        std::getline(tsv, line);
        while (std::getline(tsv, line)) {
          auto tab = line.find('\t');
          rows.push_back({{"theta_over_pi_approx", line.substr(0, tab)}, {"sigma", std::stoi(line.substr(tab + 1))}});
        }
        doc["step_samples"] = rows;
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Tsv:
      out << to_tsv(f);
      if (samples > 0) out << '\n' << step_samples_tsv(f, samples);
      break;
    case Format::Text:
      out << "knot: " << k.name << '\n';
      out << "alexander: " << to_string(alexander(k.seifert).poly, 't') << '\n';
      print_function_text(out, f);
      if (samples > 0) out << step_samples_tsv(f, samples);
      break;
  }
  return kOk;
}

int cmd_bounds(const std::string& spec, bool mirror_flag, Format format, std::ostream& out) {
  Knot k = resolve(spec);
  if (mirror_flag) k = mirrored(std::move(k));
  print_report(out, bounds_report(k.seifert, k.metadata, k.name), format);
  return kOk;
}

/// Flags apply to the next knot spec: sum [--mirror] [--copies k] SPEC ...
int cmd_sum(const std::vector<std::string>& args, std::ostream& out) {
  Format format = Format::Text;
  bool mirror_next = false;
  unsigned copies_next = 1;
  SeifertMatrix total;
  std::vector<std::string> parts;
  std::size_t knots = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      format = Format::Json;
    } else if (a == "--tsv") {
      format = Format::Tsv;
    } else if (a == "--mirror") {
      mirror_next = true;
    } else if (a == "--copies" || a.rfind("--copies=", 0) == 0) {
      std::string value;
      if (a == "--copies") {
        if (i + 1 >= args.size()) throw InputError("--copies needs a value");
        value = args[++i];
      } else {
        value = a.substr(9);
      }
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InputError("--copies expects a nonnegative integer, got '" + value + "'");
      copies_next = static_cast<unsigned>(std::stoul(value));
    } else if (a.size() > 1 && a[0] == '-' && a[1] == '-') {
      throw InputError("unknown option for sum: " + a);
    } else {
      Knot k = resolve(a);
      if (mirror_next) k = mirrored(std::move(k));
      total = connected_sum(total, connected_sum_power(k.seifert, copies_next));
      parts.push_back(copies_next == 1 ? k.name : "#" + std::to_string(copies_next) + " " + k.name);
      ++knots;
      mirror_next = false;
      copies_next = 1;
    }
  }
  if (knots == 0) throw InputError("sum needs at least one knot");
  if (mirror_next || copies_next != 1) throw InputError("trailing --mirror/--copies without a knot");
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : " # ") + p;
  print_report(out, bounds_report(total, std::nullopt, name), format);
  return kOk;
}

int cmd_scan(const std::string& table, const ScanCriteria& criteria, unsigned threads, Format format,
             std::ostream& out, std::ostream& err) {
  TableParseResult parsed = load_table(table);
  for (const auto& d : parsed.diagnostics)
    err << "warning: line " << d.line << " (" << d.name << "): " << d.message << '\n';
  std::vector<ScanEntry> entries = scan(parsed.records, criteria, threads);
  switch (format) {
    case Format::Json:
      out << to_json(entries);
      break;
    case Format::Tsv:
      out << scan_tsv(entries);
      break;
    case Format::Text:
      print_scan_text(out, entries);
      break;
  }
  bool failed = std::any_of(entries.begin(), entries.end(), [](const ScanEntry& e) { return e.error.has_value(); });
  return failed ? kInternalError : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tristram-Levine signature functions and genus bounds from Seifert matrices", "knotsig"};
  app.require_subcommand(1);
  const char* spec_help = "matrix literal, name@table.csv, or file holding a matrix";

  std::string sig_spec;
  bool sig_json = false, sig_tsv = false;
  unsigned samples = 0;
  auto* sig = app.add_subcommand("sig", "Signature function on the upper half circle");
  sig->add_option("knot", sig_spec, spec_help)->required();
  auto* sig_json_opt = sig->add_flag("--json", sig_json, "JSON output");
  sig->add_flag("--tsv", sig_tsv, "TSV output")->excludes(sig_json_opt);
  sig->add_option("--samples", samples, "Also emit N evenly spaced (theta/pi, sigma) samples");

  std::string bounds_spec;
  bool bounds_json = false, bounds_tsv = false, bounds_mirror = false;
  auto* bounds = app.add_subcommand("bounds", "Doubly slice and slice genus lower bounds");
  bounds->add_option("knot", bounds_spec, spec_help)->required();
  bounds->add_flag("--mirror", bounds_mirror, "Use the mirror image");
  auto* bounds_json_opt = bounds->add_flag("--json", bounds_json, "JSON output");
  bounds->add_flag("--tsv", bounds_tsv, "TSV output")->excludes(bounds_json_opt);

  auto* sum = app.add_subcommand("sum", "Bounds for a connected sum: [--mirror] [--copies k] KNOT ...");
  sum->allow_extras();
  sum->footer("Flags apply to the knot that follows them.");

  std::string table;
  ScanCriteria criteria;
  unsigned max_crossings = 0, min_root_sig = 0, threads = 0;
  bool scan_json = false, scan_tsv_flag = false;
  auto* scan_cmd = app.add_subcommand("scan", "Filter a knot table by root signatures");
  scan_cmd->add_option("table", table, "CSV table")->required();
  auto* max_opt = scan_cmd->add_option("--max-crossings", max_crossings, "Keep knots with at most N crossings");
  scan_cmd->add_flag("--slice-only", criteria.require_slice, "Keep knots with table g4 = 0");
  auto* min_opt = scan_cmd->add_option("--min-root-sig", min_root_sig, "Keep knots with |sigma| >= N at a root");
  scan_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
  auto* scan_json_opt = scan_cmd->add_flag("--json", scan_json, "JSON output");
  scan_cmd->add_flag("--tsv", scan_tsv_flag, "TSV output")->excludes(scan_json_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*sig) return cmd_sig(sig_spec, format_from(sig_json, sig_tsv), samples, out);
    if (*bounds) return cmd_bounds(bounds_spec, bounds_mirror, format_from(bounds_json, bounds_tsv), out);
    if (*sum) return cmd_sum(sum->remaining(), out);
    if (*max_opt) criteria.max_crossings = max_crossings;
    if (*min_opt) criteria.min_root_signature = min_root_sig;
    return cmd_scan(table, criteria, threads, format_from(scan_json, scan_tsv_flag), out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace knotsig::cli
