#pragma once
// Two-row symbols for classical types B/C/D: hooks, cohooks, cores and
// cocores, the q-exponent valuation v(B,C), generic-degree hook products,
// and the one-step signed induction sums.

#include "dhckit/intpoly.hpp"

#include <utility>
#include <vector>

namespace dhckit {

enum class Row { B, C };
inline Row other(Row r) { return r == Row::B ? Row::C : Row::B; }
inline char row_char(Row r) { return r == Row::B ? 'B' : 'C'; }

enum class SymbolType { BC, D };

class Symbol {
 public:
  Symbol(std::vector<int> b, std::vector<int> c);

  const std::vector<int>& row(Row r) const { return r == Row::B ? b_ : c_; }
  const std::vector<int>& b() const { return b_; }
  const std::vector<int>& c() const { return c_; }
  bool contains(Row r, int x) const;

  int defect() const;
  SymbolType type() const { return defect() % 2 == 1 ? SymbolType::BC : SymbolType::D; }
  bool degenerate() const { return b_ == c_; }
  // sum of entries minus the same sum for the densest symbol of this total
  // size; invariant under shifting and raised by e under hook and cohook
  // additions alike
  long long rank() const;

  Symbol shifted() const;    // ({0} u B+1, {0} u C+1)
  Symbol canonical() const;  // reverse shifts while 0 sits in both rows
  Symbol swapped() const { return Symbol(c_, b_); }

  bool operator==(const Symbol& o) const = default;
  bool operator<(const Symbol& o) const;

  std::string display() const;  // "[0,2;1]"

 private:
  std::vector<int> b_, c_;  // strictly increasing, >= 0
};

struct SymbolHook {
  Row row;    // row holding the upper entry of the step
  int entry;  // for removals: the entry removed; for additions: the entry bumped
  bool operator==(const SymbolHook& o) const = default;
};

// removable e-hooks: (R, b) with b in R, b >= e, b-e not in R
std::vector<SymbolHook> hooks_of(const Symbol& sym, int e);
// removable e-cohooks: (R, b) with b in R, b >= e, b-e not in the other row;
// removal deletes b from R and inserts b-e into the other row
std::vector<SymbolHook> cohooks_of(const Symbol& sym, int e);

Symbol remove_symbol_hook(const Symbol& sym, const SymbolHook& h, int e);
Symbol remove_symbol_cohook(const Symbol& sym, const SymbolHook& h, int e);

// additions (inverse moves): (R, y) bumps y in R to y+e (hook), or moves
// y out of R to y+e in the other row (cohook)
std::vector<SymbolHook> hook_additions(const Symbol& sym, int e);
std::vector<SymbolHook> cohook_additions(const Symbol& sym, int e);
Symbol add_symbol_hook(const Symbol& sym, const SymbolHook& h, int e);
Symbol add_symbol_cohook(const Symbol& sym, const SymbolHook& h, int e);

// crossing count of the step whose upper entry is `upper` in row `upper_row`:
// entries of that row strictly between upper-e and upper
int step_crossings(const Symbol& with_upper, Row upper_row, int upper, int e);

bool is_core_symbol(const Symbol& sym, int d);
Symbol d_core_symbol(const Symbol& sym, int d);

struct SymbolValuation {
  long long two_part;    // |B n C|
  long long q_exponent;  // v(B,C) = sum of min(x,y) over entry pairs;
                         // offsets constant per |B|+|C| are dropped
};
SymbolValuation symbol_valuation(const Symbol& sym);

// family invariant: entry multiset of B u C plus defect, in shift-canonical
// form; row-swap and shift invariant
struct FamilyKey {
  std::vector<int> entries;
  int defect;
  bool operator==(const FamilyKey& o) const = default;
  bool operator<(const FamilyKey& o) const {
    return std::tie(entries, defect) < std::tie(o.entries, o.defect);
  }
};
FamilyKey family_key(const Symbol& sym);

// reduced ratio [hook/cohook product of sym2] / [same of sym1] as a pair
// (numerator, denominator) of products of cyclotomics; equals the ratio of
// the two generic degrees up to a shape constant
std::pair<IntPoly, IntPoly> degree_pprime_ratio(const Symbol& sym1, const Symbol& sym2);

// prod (q^{b_j} - eps_j) != prod (q^{b_j} + eps_j); requires even length and
// a strictly minimal first entry
bool distinct_power_products(const std::vector<int>& bs, const std::vector<Sign>& eps,
                             const Int& q);

struct SignedSymbolTerm {
  int sign;  // +1 or -1
  Symbol symbol;
};
using SignedSymbolSum = std::vector<SignedSymbolTerm>;

// all one-step additions from a core: d-hooks for odd d, (d/2)-cohooks for
// even d, signed by (-1)^{crossings}
SignedSymbolSum asai_one_step(const Symbol& core, int d);

// every symbol of the target rank reached from the core by hook (odd d) or
// cohook (even d) additions
std::vector<Symbol> series_symbols(const Symbol& core, int d, long long target_rank);

// closed-form minimal-valuation candidates: one symbol when the row suprema
// differ, two when they agree
std::vector<Symbol> minimal_series_candidates(const Symbol& core, int d,
                                              long long target_rank);

}  // namespace dhckit
