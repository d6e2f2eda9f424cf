#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/bounds.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

struct KnotRecord {
  std::string name;
  SeifertMatrix seifert;
  std::optional<unsigned> crossings;
  std::optional<unsigned> g3;
  std::optional<unsigned> g4;
  std::optional<unsigned> gds;

  [[nodiscard]] GenusMetadata metadata() const { return {g3, g4, gds}; }
  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// Maps table roles to accepted header names (first match wins, compared
/// case-insensitively). The defaults cover KnotInfo exports.
struct FormatDescriptor {
  std::vector<std::string> name{"name"};
  std::vector<std::string> seifert{"seifert_matrix", "seifert"};
  std::vector<std::string> crossings{"crossing_number", "crossings"};
  std::vector<std::string> g3{"three_genus", "g3"};
  std::vector<std::string> g4{"four_genus", "smooth_four_genus", "g4"};
  std::vector<std::string> gds{"double_slice_genus", "gds"};
};

struct RowDiagnostic {
  std::size_t line = 0;
  std::string name;
  std::string message;
};

struct TableParseResult {
  std::vector<KnotRecord> records;
  std::vector<RowDiagnostic> diagnostics;
};

/// Parses a comma-separated table with a header row. Quoted fields may hold
/// commas, doubled quotes and newlines. Rows whose matrix is unparsable or
/// invalid are skipped with a diagnostic. Throws InputError when a required
/// column is missing or the table has no header.
TableParseResult parse_table(std::istream& in, const FormatDescriptor& format = {});
TableParseResult load_table(const std::filesystem::path& path, const FormatDescriptor& format = {});

/// Writes records in the layout parse_table reads back.
void write_table(std::ostream& out, const std::vector<KnotRecord>& records);

/// Splits one CSV record; exposed for tests.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

struct ScanCriteria {
  std::optional<unsigned> max_crossings;
  bool require_slice = false;
  std::optional<unsigned> min_root_signature;
};

struct RootEvidence {
  std::size_t jump = 0;
  RealAlgebraicNumber x;
  SignatureValue value;
};

struct ScanEntry {
  std::string name;
  std::optional<BoundsReport> report;
  std::vector<RootEvidence> evidence;
  /// Set when the computation for this record failed.
  std::optional<std::string> error;
};

/// Records passing every supplied filter, in input order. Crossing and
/// slice filters use table metadata (unknown values fail the filter); the
/// root filter keeps records with some jump where |sigma| >= the threshold.
/// Evidence lists those jumps (all jumps when no threshold is set). Records
/// are processed concurrently on `threads` workers (0 = hardware).
std::vector<ScanEntry> scan(const std::vector<KnotRecord>& records, const ScanCriteria& criteria,
                            unsigned threads = 0);

}  // namespace knotsig
