#include "wavecas/io/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wavecas::io {

void CurveTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("CurveTable::add_row: column count mismatch");
  for (double v : row)
    if (std::isnan(v)) throw std::invalid_argument("CurveTable::add_row: NaN rejected");
  rows.push_back(std::move(row));
}

std::string format_value(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12e", value);
  return buffer;
}

namespace {

std::uint64_t fnv1a(const std::string& text, std::uint64_t hash) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace

std::uint64_t content_hash(const CurveTable& table) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const auto& name : table.columns) hash = fnv1a(name + ",", hash);
  for (const auto& row : table.rows) {
    for (double v : row) hash = fnv1a(format_value(v) + ",", hash);
    hash = fnv1a("\n", hash);
  }
  return hash;
}

void write_csv(std::ostream& out, const RunManifest& manifest, const CurveTable& table) {
  out << "# command: " << manifest.command << "\n";
  out << "# wavelet: " << manifest.family_spec << "\n";
  for (const auto& [key, value] : manifest.parameters) out << "# " << key << ": " << value << "\n";
  out << "# unit-mode: " << manifest.unit_mode << "\n";
  out << "# tolerances: " << manifest.tolerances << "\n";
  out << "# version: " << manifest.version << "\n";
  out << "# timestamp: " << manifest.timestamp << "\n";
  out << "# units:";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << " " << table.columns[i] << "=" << (table.units[i].empty() ? "1" : table.units[i]);
  }
  out << "\n";
  char hashbuf[24];
  std::snprintf(hashbuf, sizeof(hashbuf), "%016llx",
                static_cast<unsigned long long>(content_hash(table)));
  out << "# data-hash: " << hashbuf << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_value(row[i]);
    out << "\n";
  }
}

void write_json(std::ostream& out, const RunManifest& manifest, const CurveTable& table) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json m;
  m["command"] = manifest.command;
  m["wavelet"] = manifest.family_spec;
  for (const auto& [key, value] : manifest.parameters) m[key] = value;
  m["unit-mode"] = manifest.unit_mode;
  m["tolerances"] = manifest.tolerances;
  m["version"] = manifest.version;
  m["timestamp"] = manifest.timestamp;
  char hashbuf[24];
  std::snprintf(hashbuf, sizeof(hashbuf), "%016llx",
                static_cast<unsigned long long>(content_hash(table)));
  m["data-hash"] = hashbuf;
  doc["manifest"] = m;
  doc["columns"] = table.columns;
  doc["units"] = table.units;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto jrow = nlohmann::ordered_json::array();
    // Serialize through the fixed %.12e format so CSV and JSON agree bit for bit.
    for (double v : row) jrow.push_back(std::stod(format_value(v)));
    rows.push_back(jrow);
  }
  doc["rows"] = rows;
  out << doc.dump(2) << "\n";
}

}  // namespace wavecas::io
