#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>

#include "dhckit/intpoly.hpp"
#include "dhckit/partition.hpp"
#include "dhckit/registry.hpp"
#include "dhckit/selftest.hpp"
#include "dhckit/series.hpp"
#include "dhckit/symbol.hpp"
#include "dhckit/wreath.hpp"

namespace py = pybind11;
using namespace dhckit;

namespace {

// exact integers cross into python as arbitrary-precision ints
py::int_ big(const Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int big_in(const py::int_& v) {
  PyObject* s = PyObject_Str(v.ptr());
  if (!s) throw py::error_already_set();
  Py_ssize_t n = 0;
  const char* data = PyUnicode_AsUTF8AndSize(s, &n);
  std::string text(data, static_cast<size_t>(n));
  Py_DECREF(s);
  return Int(text);
}

py::dict series_dict(const SeriesLabelA& lab) {
  py::list members;
  for (const auto& m : lab.members) members.append(m.parts_decreasing());
  py::dict d;
  d["core"] = lab.core.parts_decreasing();
  d["weight"] = lab.weight;
  d["delta"] = lab.delta;
  d["ambient"] = lab.ambient;
  d["members"] = members;
  return d;
}

py::dict symbol_dict(const Symbol& s) {
  py::dict d;
  d["b"] = s.b();
  d["c"] = s.c();
  d["defect"] = s.defect();
  d["rank"] = s.rank();
  d["valuation"] = symbol_valuation(s).q_exponent;
  return d;
}

py::dict row_dict(const ExceptionalRow& r) {
  py::dict d;
  d["id"] = r.id;
  d["table"] = r.table;
  d["index"] = r.index;
  d["group"] = r.group;
  d["centralizer"] = r.centralizer;
  d["characters"] = r.characters;
  d["d_values"] = r.d_values;
  d["ell_constraint"] = r.ell_constraint;
  d["datum"] = r.datum;
  return d;
}

py::dict criterion_dict(const CriterionResult& r) {
  py::dict d;
  d["number"] = r.number;
  d["name"] = r.name;
  d["pass"] = r.pass;
  d["detail"] = r.detail;
  d["seconds"] = r.seconds;
  return d;
}

WreathSpec spec_of(int points, const std::vector<int>& b_orders,
                   const std::vector<std::vector<int>>& b_action,
                   const std::vector<std::pair<std::string, int>>& base) {
  WreathSpec spec;
  spec.points = points;
  spec.b_orders = b_orders;
  spec.b_action = b_action;
  for (const auto& [kind, size] : base) {
    BaseFactor f;
    if (kind == "symmetric")
      f.kind = BaseFactor::Kind::symmetric;
    else if (kind == "cyclic")
      f.kind = BaseFactor::Kind::cyclic;
    else
      throw std::invalid_argument("base factor kind must be symmetric or cyclic");
    f.size = size;
    spec.base.push_back(f);
  }
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact combinatorics of d-series, unipotent block shadows, symbol "
      "calculus, and wreath-product character tables";
  m.attr("__version__") = "1.0.0";

  // ---- order polynomials and cyclotomic arithmetic ----
  m.def("order_mod", &order_mod, py::arg("q"), py::arg("ell"),
        "multiplicative order of q modulo the odd prime ell");
  m.def(
      "in_regular_set",
      [](long long n, long long q, long long ell) { return in_E(n, EllParams(q, ell)); },
      py::arg("n"), py::arg("q"), py::arg("ell"),
      "whether ell divides the n-th cyclotomic value at q");
  m.def(
      "cyclotomic", [](int a) { return cyclotomic(a).display(); }, py::arg("a"),
      "the a-th cyclotomic polynomial, as text");
  m.def(
      "gl_order",
      [](int n, const std::string& eps) {
        IntPoly p = gl_order(n, sign_parse(eps));
        return py::make_tuple(p.display(), factored_display(p));
      },
      py::arg("n"), py::arg("eps") = "+",
      "generic order of GL_n (eps=+) or GU_n (eps=-): (plain, factored)");
  m.def(
      "ell_part", [](py::int_ v, long long ell) { return big(ell_part(big_in(v), ell)); },
      py::arg("value"), py::arg("ell"), "largest power of ell dividing value");
  m.def(
      "ennola_delta",
      [](long long q, long long ell, const std::string& eps) {
        return ennola_delta(EllParams(q, ell), sign_parse(eps));
      },
      py::arg("q"), py::arg("ell"), py::arg("eps") = "+",
      "hook length delta governing the (q, ell, eps) series partition");

  // ---- partitions, beta-sets, character values ----
  m.def(
      "partitions_of",
      [](int n) {
        py::list out;
        for (const auto& p : partitions_of(n)) out.append(p.parts_decreasing());
        return out;
      },
      py::arg("n"));
  m.def(
      "d_core",
      [](const std::vector<int>& parts, int d) {
        PartitionShape lam(parts), core = dhckit::d_core(lam, d);
        py::dict out;
        out["core"] = core.parts_decreasing();
        out["weight"] = (lam.size() - core.size()) / d;
        return out;
      },
      py::arg("partition"), py::arg("d"),
      "fixed point of removing d-hooks in any order, with its weight");
  m.def(
      "beta_set",
      [](const std::vector<int>& parts, int m) {
        return beta_of(PartitionShape(parts), m).entries();
      },
      py::arg("partition"), py::arg("m"), "first-column hook lengths padded to m rows");
  m.def(
      "mn_value",
      [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return big(mn_value(PartitionShape(lam), PartitionShape(mu)));
      },
      py::arg("lam"), py::arg("mu"),
      "symmetric-group character value chi^lam on class type mu");
  m.def(
      "v_valuation",
      [](std::vector<int> entries) { return v_valuation(BetaSet(std::move(entries))); },
      py::arg("beta"), "sum of pairwise minima of the beta-set entries");
  m.def(
      "hook_degree_valuation",
      [](const std::vector<int>& parts) {
        return hook_degree_valuation(PartitionShape(parts));
      },
      py::arg("partition"), "n(lambda) = sum (i-1) * lambda_i");

  // ---- d-series and unipotent block shadows ----
  m.def(
      "series_partition",
      [](int n, int delta) {
        py::list out;
        for (const auto& lab : series_partition_A(n, delta)) out.append(series_dict(lab));
        return out;
      },
      py::arg("n"), py::arg("delta"),
      "partition of the partitions of n into delta-series, by core");
  m.def(
      "unipotent_blocks",
      [](int n, long long q, long long ell, const std::string& eps) {
        py::list out;
        for (const auto& b : unipotent_blocks_GL(n, q, ell, sign_parse(eps))) {
          py::dict d = series_dict(b.label);
          d["defect_order"] = big(b.defect_order);
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("q"), py::arg("ell"), py::arg("eps") = "+",
      "unipotent ell-blocks of GL_n(q)/GU_n(q) with their defect orders");
  m.def(
      "levi_shadows",
      [](int n, long long q, long long ell, const std::string& eps) {
        py::list out;
        for (const auto& s : esplit_levi_shadows_GL(n, q, ell, sign_parse(eps))) {
          py::dict d;
          d["N"] = s.N;
          d["alphas"] = s.alphas;
          d["torus_poly"] = s.torus_poly.display();
          d["torus_factored"] = factored_display(s.torus_poly);
          d["divided_torus_order"] = s.divided_torus_order;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("q"), py::arg("ell"), py::arg("eps") = "+",
      "decompositions n = N + d * sum ell^alpha with their torus order polynomials");

  // ---- symbol calculus ----
  m.def(
      "symbol",
      [](const std::vector<int>& b, const std::vector<int>& c) {
        return symbol_dict(Symbol(b, c));
      },
      py::arg("b"), py::arg("c"), "defect, rank, and valuation of the symbol (b; c)");
  m.def(
      "symbol_series",
      [](const std::vector<int>& b, const std::vector<int>& c, int d, long long rank) {
        py::list out;
        for (const auto& s : series_symbols(Symbol(b, c), d, rank))
          out.append(symbol_dict(s));
        return out;
      },
      py::arg("b"), py::arg("c"), py::arg("d"), py::arg("rank"),
      "all symbols of the given rank above the core (b; c)");
  m.def(
      "minimal_symbols",
      [](const std::vector<int>& b, const std::vector<int>& c, int d, long long rank) {
        py::list out;
        for (const auto& s : minimal_series_candidates(Symbol(b, c), d, rank))
          out.append(symbol_dict(s));
        return out;
      },
      py::arg("b"), py::arg("c"), py::arg("d"), py::arg("rank"),
      "closed-form minimal-valuation candidates in the series");
  m.def(
      "one_step",
      [](const std::vector<int>& b, const std::vector<int>& c, int d) {
        py::list out;
        for (const auto& t : asai_one_step(Symbol(b, c), d)) {
          py::dict e = symbol_dict(t.symbol);
          e["sign"] = t.sign;
          out.append(e);
        }
        return out;
      },
      py::arg("b"), py::arg("c"), py::arg("d"),
      "signed one-step additions from a core: d-hooks (odd d) or d/2-cohooks (even d)");
  m.def(
      "family_key",
      [](const std::vector<int>& b, const std::vector<int>& c) {
        FamilyKey k = family_key(Symbol(b, c));
        return py::make_tuple(k.entries, k.defect);
      },
      py::arg("b"), py::arg("c"),
      "shift- and swap-invariant family label: (entry multiset, defect)");
  m.def(
      "degree_ratio",
      [](const std::vector<int>& b1, const std::vector<int>& c1,
         const std::vector<int>& b2, const std::vector<int>& c2) {
        auto [num, den] = degree_pprime_ratio(Symbol(b1, c1), Symbol(b2, c2));
        py::dict d;
        d["numerator"] = factored_display(num);
        d["denominator"] = factored_display(den);
        d["equal"] = num == den;
        return d;
      },
      py::arg("b1"), py::arg("c1"), py::arg("b2"), py::arg("c2"),
      "reduced ratio of the two generic-degree hook products, factored");
  m.def(
      "distinct_power_products",
      [](const std::vector<int>& bs, const std::vector<std::string>& eps, py::int_ q) {
        std::vector<Sign> signs;
        for (const auto& s : eps) signs.push_back(sign_parse(s));
        return distinct_power_products(bs, signs, big_in(q));
      },
      py::arg("bs"), py::arg("eps"), py::arg("q"),
      "prod (q^b - eps) != prod (q^b + eps) for a strictly minimal first entry");

  // ---- wreath-like products ----
  m.def(
      "wreath_table",
      [](int points, const std::vector<int>& b_orders,
         const std::vector<std::vector<int>>& b_action,
         const std::vector<std::pair<std::string, int>>& base, long long bound) {
        WreathGroup w(spec_of(points, b_orders, b_action, base), bound);
        auto fam = gamma_family(w);
        auto tab = brute_force_table(w);
        auto match = gamma_oracle_match(w, fam, tab);
        long long sq = 0;
        py::list degrees;
        for (const auto& g : fam) {
          degrees.append(g.degree);
          sq += g.degree * g.degree;
        }
        std::set<int> hit(match.begin(), match.end());
        bool matched = fam.size() == tab.rows.size() && hit.size() == fam.size() &&
                       hit.count(-1) == 0 && sq == w.order();
        py::dict d;
        d["order"] = w.order();
        d["classes"] = w.classes().reps.size();
        d["irreducibles"] = fam.size();
        d["degrees"] = degrees;
        d["matches_brute_force"] = matched;
        return d;
      },
      py::arg("points"), py::arg("b_orders"), py::arg("b_action"), py::arg("base"),
      py::arg("bound") = 10000,
      "induced-character table of (prod of base factors) . B and its check "
      "against the brute-force table; base factors are (\"symmetric\"|\"cyclic\", size)");

  // ---- exceptional-group registry ----
  m.def(
      "registry_rows",
      [](const std::optional<std::string>& table, const std::optional<std::string>& group,
         const std::optional<std::string>& centralizer, const std::optional<int>& d,
         const std::optional<long long>& ell) {
        RowFilter f{group, centralizer, d, ell};
        py::list out;
        for (TableKind kind : {TableKind::table1, TableKind::table2}) {
          if (table && table_kind_parse(*table) != kind) continue;
          for (const auto& r : exceptional_lookup(kind, f)) out.append(row_dict(r));
        }
        return out;
      },
      py::arg("table") = py::none(), py::arg("group") = py::none(),
      py::arg("centralizer") = py::none(), py::arg("d") = py::none(),
      py::arg("ell") = py::none(), "filtered rows of the curated exceptional tables");
  m.def("registry_jsonl", &registry_to_jsonl,
        "the registry as canonical line-delimited JSON (header line first)");

  // ---- acceptance matrix ----
  m.def(
      "acceptance",
      []() {
        py::list out;
        for (const auto& r : run_acceptance()) out.append(criterion_dict(r));
        return out;
      },
      "run the full acceptance matrix; one dict per criterion");
  m.def(
      "criterion", [](int number) { return criterion_dict(run_criterion(number)); },
      py::arg("number"), "run one acceptance criterion (1-based)");
}
