#include "dhckit/symbol.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dhckit {

namespace {

std::vector<int> sorted_checked(std::vector<int> v, const char* which) {
  std::sort(v.begin(), v.end());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw std::invalid_argument(std::string(which) + ": negative entry");
    if (i > 0 && v[i] == v[i - 1])
      throw std::invalid_argument(std::string(which) + ": repeated entry");
  }
  return v;
}

bool member(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<int> with_inserted(std::vector<int> v, int x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return v;
}

std::vector<int> with_erased(std::vector<int> v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) throw std::logic_error("with_erased: entry absent");
  v.erase(it);
  return v;
}

long long entry_sum(const std::vector<int>& v) {
  long long s = 0;
  for (int x : v) s += x;
  return s;
}

}  // namespace

Symbol::Symbol(std::vector<int> b, std::vector<int> c)
    : b_(sorted_checked(std::move(b), "Symbol row B")),
      c_(sorted_checked(std::move(c), "Symbol row C")) {}

bool Symbol::contains(Row r, int x) const { return member(row(r), x); }

int Symbol::defect() const {
  return std::abs(static_cast<int>(b_.size()) - static_cast<int>(c_.size()));
}

long long Symbol::rank() const {
  long long total = static_cast<long long>(b_.size() + c_.size());
  long long dense = total >= 1 ? (total - 1) * (total - 1) / 4 : 0;
  return entry_sum(b_) + entry_sum(c_) - dense;
}

Symbol Symbol::shifted() const {
  std::vector<int> nb{0}, nc{0};
  for (int x : b_) nb.push_back(x + 1);
  for (int x : c_) nc.push_back(x + 1);
  return Symbol(std::move(nb), std::move(nc));
}

Symbol Symbol::canonical() const {
  std::vector<int> nb = b_, nc = c_;
  while (!nb.empty() && !nc.empty() && nb.front() == 0 && nc.front() == 0) {
    nb.erase(nb.begin());
    nc.erase(nc.begin());
    for (int& x : nb) --x;
    for (int& x : nc) --x;
  }
  return Symbol(std::move(nb), std::move(nc));
}

bool Symbol::operator<(const Symbol& o) const {
  return std::tie(b_, c_) < std::tie(o.b_, o.c_);
}

std::string Symbol::display() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  os << ';';
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

std::vector<SymbolHook> hooks_of(const Symbol& sym, int e) {
  if (e <= 0) throw std::invalid_argument("hooks_of: e must be positive");
  std::vector<SymbolHook> out;
  for (Row r : {Row::B, Row::C})
    for (int b : sym.row(r))
      if (b >= e && !sym.contains(r, b - e)) out.push_back({r, b});
  return out;
}

std::vector<SymbolHook> cohooks_of(const Symbol& sym, int e) {
  if (e <= 0) throw std::invalid_argument("cohooks_of: e must be positive");
  std::vector<SymbolHook> out;
  for (Row r : {Row::B, Row::C})
    for (int b : sym.row(r))
      if (b >= e && !sym.contains(other(r), b - e)) out.push_back({r, b});
  return out;
}

Symbol remove_symbol_hook(const Symbol& sym, const SymbolHook& h, int e) {
  if (!sym.contains(h.row, h.entry) || h.entry < e || sym.contains(h.row, h.entry - e))
    throw std::invalid_argument("remove_symbol_hook: not a removable hook");
  auto rr = with_inserted(with_erased(sym.row(h.row), h.entry), h.entry - e);
  return h.row == Row::B ? Symbol(rr, sym.c()) : Symbol(sym.b(), rr);
}

Symbol remove_symbol_cohook(const Symbol& sym, const SymbolHook& h, int e) {
  if (!sym.contains(h.row, h.entry) || h.entry < e ||
      sym.contains(other(h.row), h.entry - e))
    throw std::invalid_argument("remove_symbol_cohook: not a removable cohook");
  auto src = with_erased(sym.row(h.row), h.entry);
  auto dst = with_inserted(sym.row(other(h.row)), h.entry - e);
  return h.row == Row::B ? Symbol(src, dst) : Symbol(dst, src);
}

std::vector<SymbolHook> hook_additions(const Symbol& sym, int e) {
  if (e <= 0) throw std::invalid_argument("hook_additions: e must be positive");
  std::vector<SymbolHook> out;
  for (Row r : {Row::B, Row::C})
    for (int y : sym.row(r))
      if (!sym.contains(r, y + e)) out.push_back({r, y});
  return out;
}

std::vector<SymbolHook> cohook_additions(const Symbol& sym, int e) {
  if (e <= 0) throw std::invalid_argument("cohook_additions: e must be positive");
  std::vector<SymbolHook> out;
  for (Row r : {Row::B, Row::C})
    for (int y : sym.row(r))
      if (!sym.contains(other(r), y + e)) out.push_back({r, y});
  return out;
}

Symbol add_symbol_hook(const Symbol& sym, const SymbolHook& h, int e) {
  if (!sym.contains(h.row, h.entry) || sym.contains(h.row, h.entry + e))
    throw std::invalid_argument("add_symbol_hook: not addable");
  auto rr = with_inserted(with_erased(sym.row(h.row), h.entry), h.entry + e);
  return h.row == Row::B ? Symbol(rr, sym.c()) : Symbol(sym.b(), rr);
}

Symbol add_symbol_cohook(const Symbol& sym, const SymbolHook& h, int e) {
  if (!sym.contains(h.row, h.entry) || sym.contains(other(h.row), h.entry + e))
    throw std::invalid_argument("add_symbol_cohook: not addable");
  auto src = with_erased(sym.row(h.row), h.entry);
  auto dst = with_inserted(sym.row(other(h.row)), h.entry + e);
  return h.row == Row::B ? Symbol(src, dst) : Symbol(dst, src);
}

int step_crossings(const Symbol& with_upper, Row upper_row, int upper, int e) {
  int n = 0;
  for (int z : with_upper.row(upper_row))
    if (z > upper - e && z < upper) ++n;
  return n;
}

bool is_core_symbol(const Symbol& sym, int d) {
  if (d <= 0) throw std::invalid_argument("is_core_symbol: d must be positive");
  if (d % 2 == 1) return hooks_of(sym, d).empty();
  return cohooks_of(sym, d / 2).empty();
}

Symbol d_core_symbol(const Symbol& sym, int d) {
  if (d <= 0) throw std::invalid_argument("d_core_symbol: d must be positive");
  Symbol cur = sym;
  if (d % 2 == 1) {
    for (auto hs = hooks_of(cur, d); !hs.empty(); hs = hooks_of(cur, d))
      cur = remove_symbol_hook(cur, hs.front(), d);
  } else {
    int e = d / 2;
    for (auto hs = cohooks_of(cur, e); !hs.empty(); hs = cohooks_of(cur, e))
      cur = remove_symbol_cohook(cur, hs.front(), e);
  }
  return cur;
}

SymbolValuation symbol_valuation(const Symbol& sym) {
  long long v = 0, common = 0;
  for (Row r : {Row::B, Row::C}) {
    const auto& own = sym.row(r);
    const auto& opp = sym.row(other(r));
    for (size_t j = 0; j < own.size(); ++j) {
      long long above = static_cast<long long>(own.size()) - 1 - j;
      long long gt = static_cast<long long>(
          opp.end() - std::upper_bound(opp.begin(), opp.end(), own[j]));
      v += (above + gt) * own[j];
    }
  }
  for (int x : sym.b())
    if (sym.contains(Row::C, x)) {
      v += x;
      ++common;
    }
  return {common, v};
}

FamilyKey family_key(const Symbol& sym) {
  Symbol can = sym.canonical();
  std::vector<int> all = can.b();
  all.insert(all.end(), can.c().begin(), can.c().end());
  std::sort(all.begin(), all.end());
  return {std::move(all), can.defect()};
}

namespace {

// cyclotomic exponent map of the full hook/cohook product of one symbol:
// hooks of a row contribute X^l - 1, cohooks of the pair contribute X^l + 1
std::map<long long, long long> degree_factor_exponents(const Symbol& sym) {
  std::map<long long, long long> exp;
  auto add_minus = [&](int l) {  // X^l - 1 = prod_{e | l} phi_e
    for (int e = 1; e <= l; ++e)
      if (l % e == 0) ++exp[e];
  };
  auto add_plus = [&](int l) {  // X^l + 1 = prod_{e | 2l, e !| l} phi_e
    for (int e = 1; e <= 2 * l; ++e)
      if ((2 * l) % e == 0 && l % e != 0) ++exp[e];
  };
  for (Row r : {Row::B, Row::C})
    for (int b : sym.row(r))
      for (int x = 0; x < b; ++x)
        if (!sym.contains(r, x)) add_minus(b - x);
  for (Row r : {Row::B, Row::C})
    for (int b : sym.row(r))
      for (int x = 0; x < b; ++x)
        if (!sym.contains(other(r), x)) add_plus(b - x);
  return exp;
}

}  // namespace

std::pair<IntPoly, IntPoly> degree_pprime_ratio(const Symbol& sym1, const Symbol& sym2) {
  if (sym1.b().size() + sym1.c().size() != sym2.b().size() + sym2.c().size() ||
      sym1.rank() != sym2.rank())
    throw std::invalid_argument("degree_pprime_ratio: symbols must share total size and rank");
  auto e1 = degree_factor_exponents(sym1);
  auto e2 = degree_factor_exponents(sym2);
  for (const auto& [k, v] : e1) e2[k] -= v;
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (const auto& [k, v] : e2) {
    IntPoly phi = cyclotomic(static_cast<int>(k));
    for (long long i = 0; i < v; ++i) num = num * phi;
    for (long long i = 0; i < -v; ++i) den = den * phi;
  }
  return {num, den};
}

bool distinct_power_products(const std::vector<int>& bs, const std::vector<Sign>& eps,
                             const Int& q) {
  if (bs.size() != eps.size() || bs.empty() || bs.size() % 2 != 0)
    throw std::invalid_argument("distinct_power_products: need even matching lengths");
  for (size_t j = 1; j < bs.size(); ++j)
    if (bs[j] <= bs[0])
      throw std::invalid_argument("distinct_power_products: first entry must be strictly minimal");
  if (q < 2) throw std::invalid_argument("distinct_power_products: q must be >= 2");
  Int lhs = 1, rhs = 1;
  for (size_t j = 0; j < bs.size(); ++j) {
    Int p = 1;
    for (int i = 0; i < bs[j]; ++i) p *= q;
    lhs *= p - sign_value(eps[j]);
    rhs *= p + sign_value(eps[j]);
  }
  return lhs != rhs;
}

SignedSymbolSum asai_one_step(const Symbol& core, int d) {
  if (d <= 0) throw std::invalid_argument("asai_one_step: d must be positive");
  if (!is_core_symbol(core, d))
    throw std::invalid_argument("asai_one_step: symbol is not a core for this d");
  SignedSymbolSum out;
  if (d % 2 == 1) {
    for (const auto& h : hook_additions(core, d)) {
      Symbol next = add_symbol_hook(core, h, d);
      int cr = step_crossings(next, h.row, h.entry + d, d);
      out.push_back({cr % 2 == 0 ? 1 : -1, next});
    }
  } else {
    int e = d / 2;
    for (const auto& h : cohook_additions(core, e)) {
      Symbol next = add_symbol_cohook(core, h, e);
      int cr = step_crossings(next, other(h.row), h.entry + e, e);
      out.push_back({cr % 2 == 0 ? 1 : -1, next});
    }
  }
  std::sort(out.begin(), out.end(), [](const SignedSymbolTerm& a, const SignedSymbolTerm& b) {
    return a.symbol < b.symbol;
  });
  return out;
}

std::vector<Symbol> series_symbols(const Symbol& core, int d, long long target_rank) {
  if (d <= 0) throw std::invalid_argument("series_symbols: d must be positive");
  if (!is_core_symbol(core, d))
    throw std::invalid_argument("series_symbols: symbol is not a core for this d");
  long long e = d % 2 == 1 ? d : d / 2;
  long long diff = target_rank - core.rank();
  if (diff < 0 || diff % e != 0)
    throw std::invalid_argument("series_symbols: target rank unreachable from core");
  std::set<Symbol> level{core};
  for (long long step = 0; step < diff / e; ++step) {
    std::set<Symbol> next;
    for (const Symbol& s : level) {
      if (d % 2 == 1) {
        for (const auto& h : hook_additions(s, d)) next.insert(add_symbol_hook(s, h, d));
      } else {
        for (const auto& h : cohook_additions(s, d / 2))
          next.insert(add_symbol_cohook(s, h, d / 2));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<Symbol> minimal_series_candidates(const Symbol& core, int d,
                                              long long target_rank) {
  if (d <= 0) throw std::invalid_argument("minimal_series_candidates: d must be positive");
  if (!is_core_symbol(core, d))
    throw std::invalid_argument("minimal_series_candidates: symbol is not a core for this d");
  long long e = d % 2 == 1 ? d : d / 2;
  long long diff = target_rank - core.rank();
  if (diff < 0 || diff % e != 0)
    throw std::invalid_argument("minimal_series_candidates: target rank unreachable");
  if (diff == 0) return {core};
  int travel = static_cast<int>(diff);  // the moving entry's total displacement
  long long u = diff / e;               // number of steps
  int supb = core.b().empty() ? -1 : core.b().back();
  int supc = core.c().empty() ? -1 : core.c().back();
  if (supb < 0 && supc < 0) return {};  // nothing to move
  auto bump_within = [&](Row r, int from) {
    auto rr = with_inserted(with_erased(core.row(r), from), from + travel);
    return r == Row::B ? Symbol(rr, core.c()) : Symbol(core.b(), rr);
  };
  auto bump_across = [&](Row r, int from) {
    auto src = with_erased(core.row(r), from);
    auto dst = with_inserted(core.row(other(r)), from + travel);
    return r == Row::B ? Symbol(src, dst) : Symbol(dst, src);
  };
  bool lands_same_row = d % 2 == 1 || u % 2 == 0;
  std::vector<Symbol> out;
  if (supb > supc) {
    out.push_back(lands_same_row ? bump_within(Row::B, supb) : bump_across(Row::B, supb));
  } else if (supc > supb) {
    out.push_back(lands_same_row ? bump_within(Row::C, supc) : bump_across(Row::C, supc));
  } else {
    out.push_back(lands_same_row ? bump_within(Row::B, supb) : bump_across(Row::B, supb));
    out.push_back(lands_same_row ? bump_within(Row::C, supc) : bump_across(Row::C, supc));
  }
  return out;
}

}  // namespace dhckit
