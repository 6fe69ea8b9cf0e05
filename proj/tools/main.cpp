// dhc-kit: batch front end over the exact combinatorics library.  Every
// subcommand prints one deterministic JSON envelope (or TSV records); exit
// codes: 0 ok, 1 failed selftest, 2 usage, 3 domain, 4 resource.
#include <CLI11.hpp>
#include <json.hpp>

#include "dhckit/intpoly.hpp"
#include "dhckit/partition.hpp"
#include "dhckit/registry.hpp"
#include "dhckit/selftest.hpp"
#include "dhckit/series.hpp"
#include "dhckit/symbol.hpp"
#include "dhckit/wreath.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace dhckit;

namespace {

constexpr const char* kVersion = "1.0.0";

int g_exit = 0;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  long long bound = 10000;
  std::optional<long long> seed;
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  sub->add_option("--bound", c.bound, "size cap for oracle groups and large tables")
      ->capture_default_str();
  sub->add_option("--seed", c.seed,
                  "echoed in the envelope; all sweeps are exhaustive, so results "
                  "do not depend on it");
  sub->add_flag("--timing", c.timing,
                "add wall-clock timing_ms to the envelope (exempt from the "
                "byte-identical guarantee)");
}

struct Tsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Common& c, const std::string& command, ordered_json input,
          const ordered_json& result, const std::vector<std::string>& notes,
          const Tsv& tsv, double ms) {
  if (c.format == "tsv") {
    std::ostringstream out;
    for (size_t i = 0; i < tsv.header.size(); ++i)
      out << (i ? "\t" : "") << tsv.header[i];
    out << "\n";
    for (const auto& row : tsv.rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << "\n";
    }
    std::cout << out.str();
    return;
  }
  if (c.seed) input["seed"] = *c.seed;
  ordered_json env;
  env["tool"] = "dhc-kit";
  env["version"] = kVersion;
  env["command"] = command;
  env["input"] = std::move(input);
  env["result"] = result;
  env["notes"] = notes;
  if (c.timing) env["timing_ms"] = ms;
  std::cout << env.dump(2) << "\n";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw std::invalid_argument(std::string(what) + ": empty entry in list");
    item = item.substr(a, b - a + 1);
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

ordered_json part_json(const PartitionShape& p) { return ordered_json(p.parts_decreasing()); }

std::string part_str(const PartitionShape& p) { return join_ints(p.parts_decreasing(), ","); }

ordered_json symbol_json(const Symbol& s) {
  ordered_json j;
  j["b"] = s.b();
  j["c"] = s.c();
  j["defect"] = s.defect();
  j["rank"] = s.rank();
  j["degenerate"] = s.degenerate();
  return j;
}

// counts p(n) without materializing the partitions
long long partition_count(int n) {
  std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
  return p[static_cast<size_t>(n)];
}

struct NamedSpec {
  std::string name;
  WreathSpec spec;
};

std::vector<NamedSpec> curated_wreath_specs() {
  auto SFk = [](int n) { return BaseFactor{BaseFactor::Kind::symmetric, n}; };
  auto CFk = [](int n) { return BaseFactor{BaseFactor::Kind::cyclic, n}; };
  auto cycle = [](BaseFactor f, int points) {
    WreathSpec s;
    s.points = points;
    s.base.assign(static_cast<size_t>(points), f);
    if (points > 1) {
      std::vector<int> cyc(static_cast<size_t>(points));
      for (int i = 0; i < points; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % points;
      s.b_orders = {points};
      s.b_action = {cyc};
    }
    return s;
  };
  std::vector<NamedSpec> out;
  out.push_back({"S2wrC2", cycle(SFk(2), 2)});
  out.push_back({"S3wrC2", cycle(SFk(3), 2)});
  out.push_back({"S2wrC3", cycle(SFk(2), 3)});
  out.push_back({"S3wrC3", cycle(SFk(3), 3)});
  out.push_back({"S2wrC4", cycle(SFk(2), 4)});
  out.push_back({"S3wrC4", cycle(SFk(3), 4)});
  {
    WreathSpec s;
    s.points = 4;
    s.base.assign(4, SFk(2));
    s.b_orders = {2, 2};
    s.b_action = {{1, 0, 3, 2}, {2, 3, 0, 1}};
    out.push_back({"S2wrV4", s});
    s.base.assign(4, SFk(3));
    out.push_back({"S3wrV4", s});
  }
  {
    WreathSpec s;
    s.points = 3;
    s.base = {SFk(2), SFk(2), SFk(3)};
    s.b_orders = {2};
    s.b_action = {{1, 0, 2}};
    out.push_back({"S2S2S3.C2", s});
  }
  {
    WreathSpec s;
    s.points = 1;
    s.base = {SFk(3)};
    s.b_orders = {3};
    s.b_action = {{0}};
    out.push_back({"S3xC3", s});
  }
  {
    WreathSpec s;
    s.points = 2;
    s.base = {CFk(3), CFk(3)};
    s.b_orders = {2};
    s.b_action = {{1, 0}};
    out.push_back({"C3C3.C2", s});
  }
  {
    WreathSpec s;
    s.points = 2;
    s.base = {SFk(2), SFk(2)};
    s.b_orders = {4};
    s.b_action = {{1, 0}};
    out.push_back({"S2S2.C4", s});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dhc-kit: exact series, block, and degree combinatorics for the unipotent "
      "characters of finite reductive groups, with identity-check sweeps"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ---- series ----
  struct {
    int n = 0;
    int delta = 0;
    long long q = 0, ell = 0;
    std::string eps = "+";
    Common c;
  } se;
  {
    auto* sc = app.add_subcommand(
        "series", "group the partitions of n into series by delta-core");
    sc->add_option("--n", se.n, "size of the partitions")->required()->check(CLI::Range(0, 40));
    auto* od = sc->add_option("--delta", se.delta, "series parameter, given directly")
                   ->check(CLI::Range(1, 40));
    auto* oq = sc->add_option("--q", se.q, "prime power (derives delta together with --ell)");
    auto* ol = sc->add_option("--ell", se.ell, "odd prime not dividing q");
    sc->add_option("--eps", se.eps, "+ for the linear, - for the unitary series")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    od->excludes(oq)->excludes(ol);
    oq->needs(ol);
    ol->needs(oq);
    add_common(sc, se.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      ordered_json input{{"n", se.n}};
      int delta = se.delta;
      if (delta == 0) {
        if (se.q == 0 || se.ell == 0)
          throw UsageError("series: give --delta, or both --q and --ell");
        EllParams p(se.q, se.ell);
        delta = static_cast<int>(ennola_delta(p, sign_parse(se.eps)));
        input["q"] = se.q;
        input["ell"] = se.ell;
        input["eps"] = se.eps;
      }
      input["delta"] = delta;
      auto labels = series_partition_A(se.n, delta);
      ordered_json rows = ordered_json::array();
      Tsv tsv{{"delta", "core", "weight", "ambient", "members"}, {}};
      for (const auto& lab : labels) {
        ordered_json j;
        j["core"] = part_json(lab.core);
        j["weight"] = lab.weight;
        j["ambient"] = lab.ambient;
        ordered_json mem = ordered_json::array();
        std::ostringstream ms;
        for (size_t i = 0; i < lab.members.size(); ++i) {
          mem.push_back(part_json(lab.members[i]));
          ms << (i ? " " : "") << part_str(lab.members[i]);
        }
        j["members"] = mem;
        rows.push_back(j);
        tsv.rows.push_back({std::to_string(delta), part_str(lab.core),
                            std::to_string(lab.weight), std::to_string(lab.ambient),
                            ms.str()});
      }
      ordered_json result{{"delta", delta}, {"count", labels.size()}, {"series", rows}};
      emit(se.c, "series", input, result,
           {"one series per delta-core reachable from a partition of n",
            "members exhaust the partitions of n; series are disjoint"},
           tsv, ms_since(t0));
    });
  }

  // ---- blocks ----
  struct {
    int n = 0;
    long long q = 0, ell = 0;
    std::string eps = "+";
    Common c;
  } bl;
  {
    auto* sc = app.add_subcommand(
        "blocks", "unipotent block shadows for the linear/unitary group");
    sc->add_option("--n", bl.n, "rank")->required()->check(CLI::Range(1, 40));
    sc->add_option("--q", bl.q, "prime power")->required();
    sc->add_option("--ell", bl.ell, "odd prime not dividing q")->required();
    sc->add_option("--eps", bl.eps, "+ linear, - unitary")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    add_common(sc, bl.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      Sign eps = sign_parse(bl.eps);
      auto blocks = unipotent_blocks_GL(bl.n, bl.q, bl.ell, eps);
      ordered_json rows = ordered_json::array();
      Tsv tsv{{"core", "weight", "delta", "defect_order"}, {}};
      for (const auto& b : blocks) {
        ordered_json j;
        j["core"] = part_json(b.label.core);
        j["weight"] = b.label.weight;
        j["delta"] = b.label.delta;
        j["defect_order"] = b.defect_order.str();
        rows.push_back(j);
        tsv.rows.push_back({part_str(b.label.core), std::to_string(b.label.weight),
                            std::to_string(b.label.delta), b.defect_order.str()});
      }
      ordered_json input{{"n", bl.n}, {"q", bl.q}, {"ell", bl.ell}, {"eps", bl.eps}};
      ordered_json result{{"count", blocks.size()}, {"blocks", rows}};
      emit(bl.c, "blocks", input, result,
           {"one block per series label; defect order is the ell-part of the "
            "ambient torus order over the core"},
           tsv, ms_since(t0));
    });
  }

  // ---- levi ----
  struct {
    int n = 0;
    long long q = 0, ell = 0;
    std::string eps = "+";
    Common c;
  } lv;
  {
    auto* sc = app.add_subcommand(
        "levi", "split Levi shadows: decompositions n = N + delta * sum ell^alpha");
    sc->add_option("--n", lv.n, "rank")->required()->check(CLI::Range(1, 40));
    sc->add_option("--q", lv.q, "prime power")->required();
    sc->add_option("--ell", lv.ell, "odd prime not dividing q")->required();
    sc->add_option("--eps", lv.eps, "+ linear, - unitary")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    add_common(sc, lv.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      Sign eps = sign_parse(lv.eps);
      auto shadows = esplit_levi_shadows_GL(lv.n, lv.q, lv.ell, eps);
      ordered_json rows = ordered_json::array();
      Tsv tsv{{"N", "alphas", "torus_poly", "torus_factored", "divided_torus_order"}, {}};
      for (const auto& s : shadows) {
        ordered_json j;
        j["N"] = s.N;
        j["alphas"] = s.alphas;
        j["torus_poly"] = s.torus_poly.display();
        j["torus_factored"] = factored_display(s.torus_poly);
        j["divided_torus_order"] = s.divided_torus_order;
        rows.push_back(j);
        tsv.rows.push_back({std::to_string(s.N), join_ints(s.alphas, ","),
                            s.torus_poly.display(), factored_display(s.torus_poly),
                            s.divided_torus_order ? "true" : "false"});
      }
      ordered_json input{{"n", lv.n}, {"q", lv.q}, {"ell", lv.ell}, {"eps", lv.eps}};
      ordered_json result{{"count", shadows.size()}, {"shadows", rows}};
      emit(lv.c, "levi", input, result,
           {"torus factors are X^k - eps^k with k = delta * ell^alpha",
            "divided_torus_order marks the N = 0 shadow whose torus order "
            "carries a factor 1/(q - eps)"},
           tsv, ms_since(t0));
    });
  }

  // ---- core ----
  struct {
    std::string partition;
    int d = 0;
    Common c;
  } co;
  {
    auto* sc = app.add_subcommand("core", "d-core of a partition");
    sc->add_option("--partition", co.partition, "comma-separated parts, empty for ()")
        ->required();
    sc->add_option("--d", co.d, "hook length")->required()->check(CLI::Range(1, 1000));
    add_common(sc, co.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      PartitionShape lam(parse_int_list(co.partition, "--partition"));
      PartitionShape kappa = d_core(lam, co.d);
      long long weight = (lam.size() - kappa.size()) / co.d;
      ordered_json input{{"partition", part_json(lam)}, {"d", co.d}};
      ordered_json result{{"core", part_json(kappa)}, {"weight", weight}};
      Tsv tsv{{"core", "weight"}, {{part_str(kappa), std::to_string(weight)}}};
      emit(co.c, "core", input, result,
           {"fixed point of removing d-hooks in any order"}, tsv, ms_since(t0));
    });
  }

  // ---- mn-table ----
  struct {
    int n = 0;
    Common c;
  } mn;
  {
    auto* sc = app.add_subcommand(
        "mn-table", "exact character table of the symmetric group S_n");
    sc->add_option("--n", mn.n, "letters")->required()->check(CLI::Range(1, 60));
    add_common(sc, mn.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      long long pc = partition_count(mn.n);
      if (pc * pc > mn.c.bound)
        throw std::length_error(
            "mn-table: table has " + std::to_string(pc * pc) +
            " entries, over --bound " + std::to_string(mn.c.bound));
      auto parts = partitions_of(mn.n);
      ordered_json classes = ordered_json::array();
      Tsv tsv;
      tsv.header.push_back("partition");
      for (const auto& mu : parts) {
        classes.push_back(part_json(mu));
        tsv.header.push_back(part_str(mu));
      }
      ordered_json rows = ordered_json::array();
      for (const auto& lam : parts) {
        ordered_json vals = ordered_json::array();
        std::vector<std::string> line{part_str(lam)};
        for (const auto& mu : parts) {
          std::string v = mn_value(lam, mu).str();
          vals.push_back(v);
          line.push_back(v);
        }
        rows.push_back(ordered_json{{"partition", part_json(lam)}, {"values", vals}});
        tsv.rows.push_back(line);
      }
      ordered_json input{{"n", mn.n}};
      ordered_json result{{"classes", classes}, {"rows", rows}};
      emit(mn.c, "mn-table", input, result,
           {"rows are labeled by partitions, columns by cycle types",
            "values computed by iterated border-strip removal"},
           tsv, ms_since(t0));
    });
  }

  // ---- valuation ----
  struct {
    std::string partition;
    int m = -1;
    Common c;
  } va;
  {
    auto* sc = app.add_subcommand(
        "valuation", "beta-set of a partition and its q-exponents");
    sc->add_option("--partition", va.partition, "comma-separated parts, empty for ()")
        ->required();
    sc->add_option("--m", va.m, "beta-set length (default: number of parts)");
    add_common(sc, va.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      PartitionShape lam(parse_int_list(va.partition, "--partition"));
      int m = va.m < 0 ? std::max(lam.rows(), 1) : va.m;
      BetaSet beta = beta_of(lam, m);
      long long v = v_valuation(beta);
      long long ref = v_valuation(beta_of(PartitionShape{}, m));
      long long nl = hook_degree_valuation(lam);
      ordered_json input{{"partition", part_json(lam)}, {"m", m}};
      ordered_json result{{"beta", beta.entries()},
                          {"v", v},
                          {"reference_v", ref},
                          {"difference", v - ref},
                          {"degree_exponent", nl}};
      Tsv tsv{{"beta", "v", "reference_v", "difference", "degree_exponent"},
              {{join_ints(beta.entries(), ","), std::to_string(v), std::to_string(ref),
                std::to_string(v - ref), std::to_string(nl)}}};
      emit(va.c, "valuation", input, result,
           {"difference against the empty partition at the same padding equals "
            "the degree exponent n(lambda)"},
           tsv, ms_since(t0));
    });
  }

  // ---- symbol-series ----
  struct {
    std::string b, c_row;
    int d = 0;
    long long rank = 0;
    Common c;
  } sy;
  {
    auto* sc = app.add_subcommand(
        "symbol-series", "all symbols of a given rank over a core symbol");
    sc->add_option("--b", sy.b, "core row B, comma-separated (may be empty)");
    sc->add_option("--c", sy.c_row, "core row C, comma-separated (may be empty)");
    sc->add_option("--d", sy.d, "series parameter")->required()->check(CLI::Range(1, 100));
    sc->add_option("--rank", sy.rank, "target rank")->required()->check(CLI::Range(0, 60));
    add_common(sc, sy.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      Symbol core(parse_int_list(sy.b, "--b"), parse_int_list(sy.c_row, "--c"));
      auto symbols = series_symbols(core, sy.d, sy.rank);
      auto minimal = minimal_series_candidates(core, sy.d, sy.rank);
      std::set<Symbol> min_set(minimal.begin(), minimal.end());
      ordered_json rows = ordered_json::array();
      Tsv tsv{{"b", "c", "defect", "rank", "degenerate", "valuation", "minimal"}, {}};
      for (const auto& s : symbols) {
        ordered_json j = symbol_json(s);
        j["valuation"] = symbol_valuation(s).q_exponent;
        j["minimal"] = min_set.count(s) == 1;
        rows.push_back(j);
        tsv.rows.push_back({join_ints(s.b(), ","), join_ints(s.c(), ","),
                            std::to_string(s.defect()), std::to_string(s.rank()),
                            s.degenerate() ? "true" : "false",
                            std::to_string(symbol_valuation(s).q_exponent),
                            min_set.count(s) == 1 ? "true" : "false"});
      }
      ordered_json input{{"b", ordered_json(core.b())},
                         {"c", ordered_json(core.c())},
                         {"d", sy.d},
                         {"rank", sy.rank}};
      ordered_json result{{"count", symbols.size()},
                          {"minimal_count", minimal.size()},
                          {"symbols", rows}};
      emit(sy.c, "symbol-series", input, result,
           {"symbols reachable from the core by hook steps (odd d) or cohook "
            "steps (even d), listed with their degree q-exponents",
            "minimal marks the closed-form valuation minima"},
           tsv, ms_since(t0));
    });
  }

  // ---- symbol-degree-ratio ----
  struct {
    std::string b1, c1, b2, c2;
    Common c;
  } sr;
  {
    auto* sc = app.add_subcommand(
        "symbol-degree-ratio",
        "ratio of the prime-to-p degree parts of two symbols of equal rank");
    sc->add_option("--b1", sr.b1, "first symbol, row B");
    sc->add_option("--c1", sr.c1, "first symbol, row C");
    sc->add_option("--b2", sr.b2, "second symbol, row B");
    sc->add_option("--c2", sr.c2, "second symbol, row C");
    add_common(sc, sr.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      Symbol s1(parse_int_list(sr.b1, "--b1"), parse_int_list(sr.c1, "--c1"));
      Symbol s2(parse_int_list(sr.b2, "--b2"), parse_int_list(sr.c2, "--c2"));
      auto ratio = degree_pprime_ratio(s1, s2);
      ordered_json input{{"first", symbol_json(s1)}, {"second", symbol_json(s2)}};
      ordered_json result{{"numerator", ratio.first.display()},
                          {"denominator", ratio.second.display()},
                          {"numerator_factored", factored_display(ratio.first)},
                          {"denominator_factored", factored_display(ratio.second)},
                          {"equal", ratio.first == ratio.second}};
      Tsv tsv{{"numerator", "denominator", "equal"},
              {{ratio.first.display(), ratio.second.display(),
                ratio.first == ratio.second ? "true" : "false"}}};
      emit(sr.c, "symbol-degree-ratio", input, result,
           {"cancelled hook/cohook-product quotient; the power of q is split off"},
           tsv, ms_since(t0));
    });
  }

  // ---- lemma-sweep ----
  struct {
    std::vector<int> sizes{2, 4};
    int max_entry = 6;
    std::vector<long long> qs{2, 3, 4, 5};
    Common c;
  } ls;
  {
    auto* sc = app.add_subcommand(
        "lemma-sweep",
        "exhaustive check that mixed-sign power products never coincide");
    sc->add_option("--sizes", ls.sizes, "sequence lengths to sweep")
        ->capture_default_str();
    sc->add_option("--max-entry", ls.max_entry, "largest exponent entry")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    sc->add_option("--q", ls.qs, "evaluation points")->capture_default_str();
    add_common(sc, ls.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      long long sequences = 0, products = 0, violations = 0;
      std::string first_violation;
      for (int n : ls.sizes) {
        if (n < 2) throw std::invalid_argument("lemma-sweep: sizes must be >= 2");
        double est = 1;
        for (int k = 1; k < n; ++k) est *= ls.max_entry;
        est *= ls.max_entry * (1 << n) * static_cast<double>(ls.qs.size());
        if (est > 5e6)
          throw std::length_error("lemma-sweep: sweep too large, lower --max-entry");
        for (int b1 = 0; b1 <= ls.max_entry - 1; ++b1) {
          std::vector<std::vector<int>> tails{{}};
          for (int k = 1; k < n; ++k) {
            std::vector<std::vector<int>> next;
            for (const auto& tail : tails)
              for (int v = b1 + 1; v <= ls.max_entry; ++v) {
                auto u = tail;
                u.push_back(v);
                next.push_back(std::move(u));
              }
            tails = std::move(next);
          }
          for (const auto& tail : tails) {
            std::vector<int> seq{b1};
            seq.insert(seq.end(), tail.begin(), tail.end());
            ++sequences;
            for (int mask = 0; mask < (1 << n); ++mask) {
              std::vector<Sign> eps(static_cast<size_t>(n));
              for (int k = 0; k < n; ++k)
                eps[static_cast<size_t>(k)] = (mask >> k) & 1 ? Sign::minus : Sign::plus;
              for (long long q : ls.qs) {
                ++products;
                if (!distinct_power_products(seq, eps, Int(q))) {
                  ++violations;
                  if (first_violation.empty()) {
                    std::ostringstream w;
                    w << "q=" << q << " mask=" << mask << " seq=" << join_ints(seq, ",");
                    first_violation = w.str();
                  }
                }
              }
            }
          }
        }
      }
      ordered_json input{{"sizes", ls.sizes},
                         {"max_entry", ls.max_entry},
                         {"q", ls.qs}};
      ordered_json result{{"sequences", sequences},
                          {"products_checked", products},
                          {"violations", violations},
                          {"all_distinct", violations == 0}};
      if (violations > 0) result["first_violation"] = first_violation;
      Tsv tsv{{"sequences", "products_checked", "violations"},
              {{std::to_string(sequences), std::to_string(products),
                std::to_string(violations)}}};
      emit(ls.c, "lemma-sweep", input, result,
           {"first entry strictly minimal, later entries may repeat; every "
            "sign assignment at every evaluation point"},
           tsv, ms_since(t0));
    });
  }

  // ---- wreath-check ----
  struct {
    std::string spec = "all";
    Common c;
  } wc;
  {
    auto* sc = app.add_subcommand(
        "wreath-check",
        "validate the induced-character parametrization of curated wreath-like "
        "groups against the brute-force table");
    std::vector<std::string> names{"all"};
    for (const auto& ns : curated_wreath_specs()) names.push_back(ns.name);
    sc->add_option("--spec", wc.spec, "group to check")
        ->check(CLI::IsMember(names))
        ->capture_default_str();
    add_common(sc, wc.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      ordered_json rows = ordered_json::array();
      Tsv tsv{{"spec", "order", "classes", "irreducibles", "oracle_rows",
               "degree_square_sum", "matched"},
              {}};
      bool all_matched = true;
      for (const auto& ns : curated_wreath_specs()) {
        if (wc.spec != "all" && wc.spec != ns.name) continue;
        WreathGroup w(ns.spec, wc.c.bound);
        auto fam = gamma_family(w);
        auto tab = brute_force_table(w);
        long long sq = 0;
        for (const auto& g : fam) sq += g.degree * g.degree;
        auto match = gamma_oracle_match(w, fam, tab);
        std::set<int> hit;
        bool matched = fam.size() == tab.rows.size();
        for (size_t i = 0; i < match.size(); ++i) {
          if (match[i] < 0 ||
              fam[i].degree != tab.degrees[static_cast<size_t>(match[i])])
            matched = false;
          hit.insert(match[i]);
        }
        matched = matched && hit.size() == fam.size() && hit.count(-1) == 0 &&
                  sq == w.order();
        all_matched = all_matched && matched;
        ordered_json j;
        j["spec"] = ns.name;
        j["order"] = w.order();
        j["classes"] = w.classes().reps.size();
        j["irreducibles"] = fam.size();
        j["oracle_rows"] = tab.rows.size();
        j["degree_square_sum"] = sq;
        j["matched"] = matched;
        rows.push_back(j);
        tsv.rows.push_back({ns.name, std::to_string(w.order()),
                            std::to_string(w.classes().reps.size()),
                            std::to_string(fam.size()), std::to_string(tab.rows.size()),
                            std::to_string(sq), matched ? "true" : "false"});
      }
      ordered_json input{{"spec", wc.spec}, {"bound", wc.c.bound}};
      ordered_json result{{"groups", rows}, {"all_matched", all_matched}};
      emit(wc.c, "wreath-check", input, result,
           {"matched: the induced parametrization is a degree-preserving "
            "bijection onto the independent table and degrees square-sum to "
            "the group order"},
           tsv, ms_since(t0));
    });
  }

  // ---- tables ----
  struct {
    std::string table;
    std::string group, centralizer;
    int d = 0;
    long long ell = 0;
    Common c;
  } tb;
  {
    auto* sc = app.add_subcommand(
        "tables", "query the registry of exceptional-type cuspidal data");
    sc->add_option("--table", tb.table, "restrict to one table")
        ->check(CLI::IsMember({"table1", "table2"}));
    sc->add_option("--group", tb.group, "ambient group type, e.g. F4");
    sc->add_option("--centralizer", tb.centralizer, "centralizer type (table2)");
    sc->add_option("--d", tb.d, "keep rows listing this d");
    sc->add_option("--ell", tb.ell, "keep rows whose prime constraint admits ell");
    add_common(sc, tb.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      RowFilter f;
      if (!tb.group.empty()) f.group = tb.group;
      if (!tb.centralizer.empty()) f.centralizer = tb.centralizer;
      if (tb.d > 0) f.d = tb.d;
      if (tb.ell > 0) f.ell = tb.ell;
      std::vector<ExceptionalRow> rows;
      if (tb.table.empty() || tb.table == "table1") {
        auto r1 = exceptional_lookup(TableKind::table1, f);
        rows.insert(rows.end(), r1.begin(), r1.end());
      }
      if (tb.table.empty() || tb.table == "table2") {
        auto r2 = exceptional_lookup(TableKind::table2, f);
        rows.insert(rows.end(), r2.begin(), r2.end());
      }
      ordered_json jrows = ordered_json::array();
      Tsv tsv{{"id", "table", "index", "group", "centralizer", "characters", "d_values",
               "ell_constraint", "datum"},
              {}};
      for (const auto& row : rows) {
        ordered_json j;
        j["id"] = row.id;
        j["table"] = row.table;
        j["index"] = row.index;
        j["group"] = row.group;
        j["centralizer"] = row.centralizer;
        j["characters"] = row.characters;
        j["d_values"] = row.d_values;
        j["ell_constraint"] = row.ell_constraint;
        j["datum"] = row.datum;
        jrows.push_back(j);
        std::ostringstream ch;
        for (size_t i = 0; i < row.characters.size(); ++i)
          ch << (i ? "; " : "") << row.characters[i];
        tsv.rows.push_back({row.id, row.table, std::to_string(row.index), row.group,
                            row.centralizer, ch.str(), join_ints(row.d_values, ","),
                            row.ell_constraint, row.datum});
      }
      ordered_json input = ordered_json::object();
      if (!tb.table.empty()) input["table"] = tb.table;
      if (!tb.group.empty()) input["group"] = tb.group;
      if (!tb.centralizer.empty()) input["centralizer"] = tb.centralizer;
      if (tb.d > 0) input["d"] = tb.d;
      if (tb.ell > 0) input["ell"] = tb.ell;
      ordered_json result{{"count", rows.size()}, {"rows", jrows}};
      emit(tb.c, "tables", input, result,
           {"rows transcribed verbatim; table1 lists character families with "
            "their cuspidality d-values and prime constraints, table2 lists "
            "cuspidal pair data by case"},
           tsv, ms_since(t0));
    });
  }

  // ---- selftest ----
  struct {
    int only = 0;
    Common c;
  } st;
  {
    auto* sc = app.add_subcommand(
        "selftest", "run the acceptance criteria and print the pass/fail matrix");
    sc->add_option("--only", st.only, "run a single criterion by number");
    add_common(sc, st.c);
    sc->callback([&] {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<CriterionResult> results;
      if (st.only > 0)
        results.push_back(run_criterion(st.only));
      else
        results = run_acceptance();
      ordered_json rows = ordered_json::array();
      Tsv tsv{{"number", "name", "pass", "detail"}, {}};
      int failed = 0;
      for (const auto& r : results) {
        ordered_json j;
        j["number"] = r.number;
        j["name"] = r.name;
        j["pass"] = r.pass;
        j["detail"] = r.detail;
        rows.push_back(j);
        tsv.rows.push_back({std::to_string(r.number), r.name, r.pass ? "PASS" : "FAIL",
                            r.detail});
        if (!r.pass) ++failed;
      }
      ordered_json input = ordered_json::object();
      if (st.only > 0) input["only"] = st.only;
      ordered_json result{{"criteria", rows},
                          {"passed", results.size() - static_cast<size_t>(failed)},
                          {"failed", failed},
                          {"all_pass", failed == 0}};
      emit(st.c, "selftest", input, result,
           {"each criterion is an exhaustive or frozen-bound property sweep "
            "against independent oracles",
            "exit status 1 when any criterion fails"},
           tsv, ms_since(t0));
      if (failed > 0) g_exit = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return g_exit;
}
