#include "knotsig/knot_table.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <thread>

#include "knotsig/error.hpp"

namespace knotsig {
namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       const std::vector<std::string>& names) {
  for (const auto& wanted : names)
    for (std::size_t i = 0; i < header.size(); ++i)
      if (lowercase(trim(header[i])) == lowercase(wanted)) return i;
  return std::nullopt;
}

std::optional<unsigned> parse_count(const std::vector<std::string>& row, std::optional<std::size_t> col) {
  if (!col || *col >= row.size()) return std::nullopt;
  std::string text = trim(row[*col]);
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return static_cast<unsigned>(std::stoul(text));
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_text(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : ""; }

ScanEntry scan_one(const KnotRecord& record, const ScanCriteria& criteria) {
  ScanEntry entry{record.name, std::nullopt, {}, std::nullopt};
  try {
    entry.report = bounds_report(record.seifert, record.metadata(), record.name);
    const SignatureFunction& f = entry.report->function;
    unsigned threshold = criteria.min_root_signature.value_or(0);
    for (std::size_t j = 0; j < f.jumps.size(); ++j)
      if (static_cast<unsigned>(std::abs(f.point_values[j].sigma)) >= threshold)
        entry.evidence.push_back({j, f.jumps[j], f.point_values[j]});
  } catch (const std::exception& e) {
    entry.error = e.what();
  }
  return entry;
}

bool passes_metadata(const KnotRecord& record, const ScanCriteria& criteria) {
  if (criteria.max_crossings && (!record.crossings || *record.crossings > *criteria.max_crossings))
    return false;
  if (criteria.require_slice && (!record.g4 || *record.g4 != 0)) return false;
  return true;
}

}  // namespace

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw InputError("unterminated quoted field at end of table");
  if (any) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

TableParseResult parse_table(std::istream& in, const FormatDescriptor& format) {
  auto rows = read_csv(in);
  // Blank lines carry no record.
  std::vector<std::size_t> lines;
  std::vector<std::vector<std::string>> kept;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool blank = std::all_of(rows[i].begin(), rows[i].end(), [](const std::string& f) { return trim(f).empty(); });
    if (blank) continue;
    kept.push_back(std::move(rows[i]));
    lines.push_back(i + 1);
  }
  if (kept.empty()) throw InputError("empty table: no header row");
  const auto& header = kept.front();
  auto name_col = find_column(header, format.name);
  auto seifert_col = find_column(header, format.seifert);
  if (!name_col) throw InputError("missing required column: name");
  if (!seifert_col) throw InputError("missing required column: seifert matrix");
  auto crossings_col = find_column(header, format.crossings);
  auto g3_col = find_column(header, format.g3);
  auto g4_col = find_column(header, format.g4);
  auto gds_col = find_column(header, format.gds);

  TableParseResult result;
  for (std::size_t r = 1; r < kept.size(); ++r) {
    const auto& row = kept[r];
    std::string name = *name_col < row.size() ? trim(row[*name_col]) : "";
    if (name.empty()) {
      result.diagnostics.push_back({lines[r], name, "empty name"});
      continue;
    }
    if (*seifert_col >= row.size()) {
      result.diagnostics.push_back({lines[r], name, "missing Seifert matrix field"});
      continue;
    }
    try {
      KnotRecord record{name, SeifertMatrix::validate(parse_integer_matrix(row[*seifert_col])),
                        parse_count(row, crossings_col), parse_count(row, g3_col),
                        parse_count(row, g4_col), parse_count(row, gds_col)};
      result.records.push_back(std::move(record));
    } catch (const InputError& e) {
      result.diagnostics.push_back({lines[r], name, e.what()});
    }
  }
  return result;
}

TableParseResult load_table(const std::filesystem::path& path, const FormatDescriptor& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open table " + path.string());
  return parse_table(in, format);
}

void write_table(std::ostream& out, const std::vector<KnotRecord>& records) {
  out << "name,crossing_number,three_genus,four_genus,double_slice_genus,seifert_matrix\n";
  for (const auto& r : records) {
    out << quote(r.name) << ',' << optional_text(r.crossings) << ',' << optional_text(r.g3) << ','
        << optional_text(r.g4) << ',' << optional_text(r.gds) << ','
        << quote(format_matrix(r.seifert.entries())) << '\n';
  }
}

std::vector<ScanEntry> scan(const std::vector<KnotRecord>& records, const ScanCriteria& criteria,
                            unsigned threads) {
  std::vector<const KnotRecord*> candidates;
  for (const auto& r : records)
    if (passes_metadata(r, criteria)) candidates.push_back(&r);

  std::vector<ScanEntry> computed(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++)
      computed[i] = scan_one(*candidates[i], criteria);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, candidates.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<ScanEntry> out;
  for (auto& entry : computed) {
    bool keep = entry.error.has_value() || !criteria.min_root_signature || !entry.evidence.empty();
    if (keep) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace knotsig
