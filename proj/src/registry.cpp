#include "dhckit/registry.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dhckit {

using nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "dhckit-exceptional-tables";
constexpr int kSchemaVersion = 1;

ExceptionalRow t1(int row, std::string group, std::string chars,
                  std::vector<int> d, std::string ell) {
  ExceptionalRow r;
  char id[8];
  std::snprintf(id, sizeof id, "t1r%02d", row);
  r.id = id;
  r.table = "table1";
  r.index = row;
  r.group = std::move(group);
  r.characters = {std::move(chars)};
  r.d_values = std::move(d);
  r.ell_constraint = std::move(ell);
  return r;
}

ExceptionalRow t2(int kase, std::string group, std::string centralizer, int d,
                  std::string datum) {
  ExceptionalRow r;
  char id[8];
  std::snprintf(id, sizeof id, "t2c%02d", kase);
  r.id = id;
  r.table = "table2";
  r.index = kase;
  r.group = std::move(group);
  r.centralizer = std::move(centralizer);
  r.d_values = {d};
  r.datum = std::move(datum);
  return r;
}

std::vector<ExceptionalRow> build_registry() {
  std::vector<ExceptionalRow> rows;
  // algebraically conjugate characters with equal uniform projections
  rows.push_back(t1(1, "G2", "alpha(1) = (1/3) q phi1(q)^2 phi2(q)^2", {1, 2},
                    "ell >= 5"));
  rows.push_back(t1(2, "F4", "F4[theta^j], j = 1, 2", {1, 2, 4, 8}, "ell >= 3"));
  rows.push_back(t1(3, "F4", "F4[+-i]", {1, 2, 3, 6}, "ell >= 5"));
  rows.push_back(t1(4, "E6", "E6[theta^j], j = 1, 2", {1, 2, 4, 5, 8}, "ell >= 5"));
  rows.push_back(t1(5, "2E6", "2E6[theta^j], j = 1, 2", {1, 2, 4, 8, 10}, "ell >= 5"));
  rows.push_back(t1(6, "E7", "E7[theta^j, 1], j = 1, 2", {4, 5, 7, 8, 10, 14},
                    "ell >= 5"));
  rows.push_back(t1(7, "E7", "E7[theta^j, eps], j = 1, 2", {4, 5, 7, 8, 10, 14},
                    "ell >= 5"));
  rows.push_back(t1(8, "E8", "E8[theta^j, 1], j = 1, 2",
                    {4, 5, 7, 8, 10, 12, 14, 20, 24}, "ell >= 5"));
  rows.push_back(t1(9, "E8", "E8[theta^j, eps], j = 1, 2",
                    {4, 5, 7, 8, 10, 12, 14, 20, 24}, "ell >= 5"));
  rows.push_back(t1(10, "E8", "E8[theta^j, eps'], j = 1, 2",
                    {4, 5, 7, 8, 10, 14, 15, 20, 30}, "ell >= 5"));
  rows.push_back(t1(11, "E8", "E8[theta^j, eps''], j = 1, 2",
                    {4, 5, 7, 8, 10, 14, 15, 20, 30}, "ell >= 5"));
  rows.push_back(t1(12, "E8", "E8[theta^j, r], j = 1, 2",
                    {2, 4, 5, 7, 8, 10, 14, 15, 18, 20, 24}, "ell >= 5"));
  rows.push_back(t1(13, "E8", "E8[theta^j, r'], j = 1, 2",
                    {2, 4, 5, 7, 8, 10, 14, 18, 20, 30}, "ell >= 5"));
  rows.push_back(t1(14, "E8", "E8[lambda^j], j = 1, 2, 3, 4",
                    {1, 2, 3, 4, 6, 7, 8, 9, 12, 14, 18, 24}, "ell = 3, ell >= 7"));
  rows.push_back(t1(15, "E8", "E8[-theta^j], j = 1, 2",
                    {1, 4, 5, 7, 8, 9, 10, 12, 14, 15, 20}, "ell >= 5"));
  rows.push_back(t1(16, "E8", "E8[theta^j], j = 1, 2",
                    {1, 4, 5, 7, 8, 9, 10, 14, 20, 24, 30}, "ell >= 5"));
  rows.push_back(t1(17, "E8", "E8[+-i]", {1, 2, 3, 5, 6, 7, 9, 10, 14, 15, 18, 30},
                    "ell >= 3"));
  // isolated-series cuspidal data on Levis not of type A, ascending rank
  rows.push_back(t2(1, "F4", "B4", 2, "(B2, [0,2;1])"));
  rows.push_back(t2(2, "F4", "B4", 4, "(B2, [0,1;2])"));
  rows.push_back(t2(3, "F4", "A1xC3", 2, "(C2, [0,2;1])"));
  rows.push_back(t2(4, "E7", "D6xA1", 2, "(D4, [1,3;0,2])"));
  rows.push_back(t2(5, "E8", "D8", 2, "(D4, [1,3;0,2])"));
  rows.push_back(t2(6, "E8", "D8", 3, "2D5"));
  rows.push_back(t2(7, "E8", "D8", 4, "D4"));
  rows.push_back(t2(8, "E8", "D8", 6, "2D5"));
  rows.push_back(t2(9, "E8", "D8", 8, "2D4"));
  rows.push_back(t2(10, "E8", "E7xA1", 2, "(E7, [512_a], [512'_a])"));
  rows.push_back(t2(11, "E8", "E7xA1", 2, "(2E6, 2E6[theta^j]) j = 1, 2"));
  rows.push_back(t2(12, "E8", "E7xA1", 2, "(D4, [1,3;0,2])"));
  rows.push_back(t2(13, "E8", "E7xA1", 3, "(3D4 x A1, 3D4[-1] otimes alpha')"));
  rows.push_back(t2(14, "E8", "E7xA1", 6, "(3D4 x A1, phi_{2,1} otimes alpha')"));
  rows.push_back(t2(15, "E8", "E6xA2", 3, "(3D4, 3D4[-1])"));
  rows.push_back(t2(16, "E8", "2E6x2A2", 2, "(D4, [1,3;0,2])"));
  rows.push_back(t2(17, "E8", "2E6x2A2", 6, "(3D4, phi_{2,1})"));
  return rows;
}

ordered_json row_to_json(const ExceptionalRow& r) {
  ordered_json j;
  j["id"] = r.id;
  j["table"] = r.table;
  j[r.table == "table2" ? "case" : "row"] = r.index;
  j["group"] = r.group;
  if (r.table == "table1") {
    j["characters"] = r.characters;
    j["d"] = r.d_values;
    j["ell"] = r.ell_constraint;
  } else {
    j["centralizer"] = r.centralizer;
    j["d"] = r.d_values;
    j["datum"] = r.datum;
  }
  return j;
}

ExceptionalRow row_from_json(const ordered_json& j) {
  ExceptionalRow r;
  r.id = j.at("id").get<std::string>();
  r.table = j.at("table").get<std::string>();
  if (r.table != "table1" && r.table != "table2")
    throw std::invalid_argument("unknown table in registry row: " + r.table);
  r.index = r.table == "table2" ? j.at("case").get<int>() : j.at("row").get<int>();
  r.group = j.at("group").get<std::string>();
  r.centralizer = j.value("centralizer", std::string{});
  r.characters = j.value("characters", std::vector<std::string>{});
  r.d_values = j.at("d").get<std::vector<int>>();
  r.ell_constraint = j.value("ell", std::string{});
  r.datum = j.value("datum", std::string{});
  return r;
}

}  // namespace

TableKind table_kind_parse(const std::string& s) {
  if (s == "table1") return TableKind::table1;
  if (s == "table2") return TableKind::table2;
  throw std::invalid_argument("unknown table kind: " + s);
}

bool ell_admits(const ExceptionalRow& row, long long ell) {
  if (row.ell_constraint.empty()) return true;
  std::istringstream in(row.ell_constraint);
  std::string clause;
  while (std::getline(in, clause, ',')) {
    std::istringstream c(clause);
    std::string name, op;
    long long bound = 0;
    if (!(c >> name >> op >> bound) || name != "ell")
      throw std::logic_error("malformed ell constraint: " + row.ell_constraint);
    if (op == ">=" && ell >= bound) return true;
    if (op == "=" && ell == bound) return true;
  }
  return false;
}

const std::vector<ExceptionalRow>& exceptional_registry() {
  static const std::vector<ExceptionalRow> rows = build_registry();
  return rows;
}

std::vector<ExceptionalRow> exceptional_lookup(TableKind kind, const RowFilter& filter) {
  std::string table = kind == TableKind::table1 ? "table1" : "table2";
  std::vector<ExceptionalRow> out;
  for (const auto& row : exceptional_registry()) {
    if (row.table != table) continue;
    if (filter.group && row.group != *filter.group) continue;
    if (filter.centralizer && row.centralizer != *filter.centralizer) continue;
    if (filter.d && std::find(row.d_values.begin(), row.d_values.end(), *filter.d) ==
                        row.d_values.end())
      continue;
    if (filter.ell && !ell_admits(row, *filter.ell)) continue;
    out.push_back(row);
  }
  return out;
}

std::string registry_to_jsonl() {
  const auto& rows = exceptional_registry();
  ordered_json header;
  header["format"] = kFormat;
  header["schema_version"] = kSchemaVersion;
  header["rows"] = rows.size();
  std::string out = header.dump() + "\n";
  for (const auto& row : rows) out += row_to_json(row).dump() + "\n";
  return out;
}

std::vector<ExceptionalRow> registry_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty registry text");
  ordered_json header = ordered_json::parse(line);
  if (header.value("format", std::string{}) != kFormat)
    throw std::invalid_argument("registry header has wrong format tag");
  if (header.value("schema_version", -1) != kSchemaVersion)
    throw std::invalid_argument("unsupported registry schema version");
  std::vector<ExceptionalRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(row_from_json(ordered_json::parse(line)));
  }
  if (header.contains("rows") && header["rows"].get<size_t>() != rows.size())
    throw std::invalid_argument("registry row count does not match header");
  return rows;
}

}  // namespace dhckit
