#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wavecas::io {

/// Echo of one CLI invocation, serialized at the top of every output file.
struct RunManifest {
  std::string command;
  std::string family_spec;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string version;
  std::string unit_mode;    // "cutoff" or "absolute"
  std::string tolerances;   // abs/rel quadrature contract echo
  std::string timestamp;    // ISO-8601 UTC; excluded from the content hash
};

/// Column-oriented numeric table with per-column unit annotations.
/// Invariants: the first column is monotone; rows never contain NaN (failed
/// sweep points are dropped by the producer and logged to diagnostics).
struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::string> units;  // one entry per column, may be ""
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

/// FNV-1a over the formatted column header and data rows (timestamp and all
/// other manifest lines excluded), so identical invocations hash identically.
std::uint64_t content_hash(const CurveTable& table);

/// CSV: '#' manifest comment lines, a header row, then %.12e data rows.
void write_csv(std::ostream& out, const RunManifest& manifest, const CurveTable& table);

/// JSON: { "manifest": {...}, "columns": [...], "units": [...], "rows": [[...]] }.
void write_json(std::ostream& out, const RunManifest& manifest, const CurveTable& table);

/// %.12e formatting shared by both writers and the hash.
std::string format_value(double value);

}  // namespace wavecas::io
