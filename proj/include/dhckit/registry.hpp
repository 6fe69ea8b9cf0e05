#pragma once
// Read-only registry of the exceptional-type cases: table1 lists the
// algebraically conjugate unipotent characters whose uniform projections
// coincide (with the d where they are d-cuspidal and the odd primes giving
// central defect); table2 lists the isolated-series cuspidal data whose Levi
// is not of type A, in ascending rank.

#include <optional>
#include <string>
#include <vector>

namespace dhckit {

enum class TableKind { table1, table2 };
TableKind table_kind_parse(const std::string& s);

struct ExceptionalRow {
  std::string id;     // row provenance: "t1r03" = table1 row 3, "t2c06" = table2 case 6
  std::string table;  // "table1" | "table2"
  int index = 0;      // row number (table2: the case number)
  std::string group;  // ambient group type
  std::string centralizer;              // table2 only: type of the centralizer
  std::vector<std::string> characters;  // table1 only: names kept verbatim
  std::vector<int> d_values;
  std::string ell_constraint;  // table1 only, e.g. "ell >= 5" or "ell = 3, ell >= 7"
  std::string datum;           // table2 only: the cuspidal pair, verbatim

  bool operator==(const ExceptionalRow&) const = default;
};

// whether the row's constraint admits ell ("ell >= 5", comma = or)
bool ell_admits(const ExceptionalRow& row, long long ell);

struct RowFilter {
  std::optional<std::string> group;
  std::optional<std::string> centralizer;
  std::optional<int> d;
  std::optional<long long> ell;
};

const std::vector<ExceptionalRow>& exceptional_registry();
std::vector<ExceptionalRow> exceptional_lookup(TableKind kind,
                                               const RowFilter& filter = {});

// line-delimited JSON, first line a schema-version header; the text form is
// canonical and byte-stable (data/exceptional_tables.jsonl holds a copy)
std::string registry_to_jsonl();
std::vector<ExceptionalRow> registry_from_jsonl(const std::string& text);

}  // namespace dhckit
