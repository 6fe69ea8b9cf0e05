#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhckit/partition.hpp"
#include "dhckit/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace dhckit;

namespace {

CycloNum CN(long long v) { return CycloNum::rational(Rat(v)); }

BaseFactor S(int n) { return BaseFactor{BaseFactor::Kind::symmetric, n}; }
BaseFactor C(int n) { return BaseFactor{BaseFactor::Kind::cyclic, n}; }

// base^points with a single full cycle on the points (trivial top for points=1)
WreathSpec wr_cycle(BaseFactor f, int points) {
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
}

// base^4 with C2 x C2 in its regular action on the points
WreathSpec wr_klein(BaseFactor f) {
  WreathSpec s;
  s.points = 4;
  s.base.assign(4, f);
  s.b_orders = {2, 2};
  s.b_action = {{1, 0, 3, 2}, {2, 3, 0, 1}};
  return s;
}

int perm_code(const WreathGroup& w, int point, const std::vector<int>& perm) {
  const auto& elems = w.factor(point).elems;
  auto it = std::lower_bound(elems.begin(), elems.end(), perm);
  if (it == elems.end() || *it != perm) throw std::runtime_error("perm_code: not found");
  return static_cast<int>(it - elems.begin());
}

bool is_integer(const CycloNum& v) {
  return v.is_rational() && denominator(v.rat_value()) == 1;
}

std::vector<long long> sorted_degrees(const std::vector<GammaChar>& fam) {
  std::vector<long long> d;
  for (const auto& g : fam) d.push_back(g.degree);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("group structure of a small wreath product") {
  WreathGroup w(wr_cycle(S(2), 2));
  CHECK(w.order() == 8);
  CHECK(w.base_order() == 4);
  CHECK(w.b_count() == 2);
  CHECK(w.points() == 2);
  CHECK(w.classes().reps.size() == 5);  // dihedral of order 8
  CHECK(w.exponent() == 4);

  // full associativity and inverse sweep
  for (long long x = 0; x < 8; ++x) {
    CHECK(w.compose(x, w.inverse(x)) == 0);
    CHECK(w.compose(0, x) == x);
    CHECK(w.compose(x, 0) == x);
    for (long long y = 0; y < 8; ++y) {
      CHECK(w.inverse(w.compose(x, y)) == w.compose(w.inverse(y), w.inverse(x)));
      for (long long z = 0; z < 8; ++z)
        CHECK(w.compose(w.compose(x, y), z) == w.compose(x, w.compose(y, z)));
    }
  }

  // class sizes partition the group
  long long total = 0;
  for (long long s : w.classes().sizes) total += s;
  CHECK(total == 8);
}

TEST_CASE("factor tables agree with the symmetric-group character oracle") {
  WreathGroup w(wr_cycle(S(3), 2));
  const auto& f = w.factor(0);
  CHECK(f.size == 6);
  CHECK(f.irr.size() == 3);
  // labels follow partitions_of(3): [1,1,1] < [1,2] < [3]
  CHECK(f.irr_degree == std::vector<long long>{1, 2, 1});
  CHECK(w.base_char_degree(BaseChar{{1, 1}}) == 4);
  CHECK(w.base_char_degree(BaseChar{{0, 2}}) == 1);

  // sign character on a transposition
  int t01 = perm_code(w, 0, {1, 0, 2});
  CHECK(f.irr[0][static_cast<size_t>(t01)] == CN(-1));
  CHECK(f.irr[2][static_cast<size_t>(t01)] == CN(1));
  CHECK(f.irr[1][static_cast<size_t>(t01)] == CN(0));

  WreathGroup wc(wr_cycle(C(3), 2));
  const auto& g = wc.factor(0);
  CHECK(g.size == 3);
  for (int j = 0; j < 3; ++j)
    for (int x = 0; x < 3; ++x)
      CHECK(g.irr[static_cast<size_t>(j)][static_cast<size_t>(x)] ==
            CycloNum::root_power(3, static_cast<long long>(j) * x));
}

TEST_CASE("canonical extension values on the swap coset of S2 wr C2") {
  WreathGroup w(wr_cycle(S(2), 2));
  BaseChar sgn2{{0, 0}};  // sign (x) sign
  CHECK(w.stabilizer_b(sgn2) == std::vector<int>{0, 1});

  // at the identity tuple the value is the factor degree
  CHECK(canonical_extension_value(w, sgn2, 0, 1) == CN(1));
  // one transposition: cyclic product is a transposition, sign -1
  CHECK(canonical_extension_value(w, sgn2, w.encode({1, 0}, 0), 1) == CN(-1));
  CHECK(canonical_extension_value(w, sgn2, w.encode({0, 1}, 0), 1) == CN(-1));
  // two transpositions multiply to the identity
  CHECK(canonical_extension_value(w, sgn2, w.encode({1, 1}, 0), 1) == CN(1));

  // restriction to the base group is the plain character
  for (long long t = 0; t < w.base_order(); ++t)
    CHECK(canonical_extension_value(w, sgn2, w.w0_element(t), 0) ==
          w.base_char_value(sgn2, w.w0_element(t)));

  // a character moved by the swap has no extension there
  BaseChar mixed{{0, 1}};
  CHECK(w.stabilizer_b(mixed) == std::vector<int>{0});
  CHECK_THROWS_AS(canonical_extension_value(w, mixed, 0, 1), std::invalid_argument);
}

TEST_CASE("canonical extension takes positive integer values at the top elements") {
  WreathGroup w(wr_cycle(S(3), 2));
  BaseChar diag{{1, 1}};  // two-dimensional label on both points
  // frozen: single swap orbit, value = chi(identity product) = 2
  CHECK(canonical_extension_value(w, diag, 0, 1) == CN(2));
  for (int b : w.stabilizer_b(diag)) {
    CycloNum v = canonical_extension_value(w, diag, 0, b);
    CHECK(is_integer(v));
    CHECK(v.rat_value() > 0);
    // all coset values of a symmetric-base extension are integers
    for (const CycloNum& cv : canonical_extension_on_coset(w, diag, b).values)
      CHECK(is_integer(cv));
  }
}

TEST_CASE("canonical extension on a cyclic base") {
  // (C3 x C3) . C2: ext(chi_j (x) chi_j, (a,b) swap) = zeta_3^(j(a+b))
  WreathSpec s;
  s.points = 2;
  s.base = {C(3), C(3)};
  s.b_orders = {2};
  s.b_action = {{1, 0}};
  WreathGroup w(s);
  CHECK(w.order() == 18);
  for (int j = 0; j < 3; ++j) {
    BaseChar chi{{j, j}};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(canonical_extension_value(w, chi, w.encode({a, b}, 0), 1) ==
              CycloNum::root_power(3, static_cast<long long>(j) * (a + b)));
  }
}

TEST_CASE("coset class counts equal the number of fixed base characters") {
  std::vector<WreathSpec> specs = {wr_cycle(S(2), 2), wr_cycle(S(3), 2), wr_cycle(S(2), 3),
                                   wr_cycle(S(2), 4), wr_klein(S(2))};
  for (const auto& spec : specs) {
    WreathGroup w(spec);
    for (int b = 0; b < w.b_count(); ++b) {
      long long fixed = 0;
      for (long long i = 0; i < w.base_char_count(); ++i)
        if (w.b_conjugate_char(w.base_char(i), b) == w.base_char(i)) ++fixed;
      const CosetClasses& cc = w.coset_classes(b);
      CHECK(static_cast<long long>(cc.reps.size()) == fixed);
      long long total = 0;
      for (long long sz : cc.sizes) total += sz;
      CHECK(total == w.base_order());
    }
  }
}

TEST_CASE("extensions of the fixed characters are an orthonormal basis on each coset") {
  std::vector<WreathSpec> specs = {wr_cycle(S(2), 2), wr_cycle(S(3), 2)};
  {
    WreathSpec s;
    s.points = 2;
    s.base = {C(3), C(3)};
    s.b_orders = {2};
    s.b_action = {{1, 0}};
    specs.push_back(s);
  }
  for (const auto& spec : specs) {
    WreathGroup w(spec);
    for (int b = 0; b < w.b_count(); ++b) {
      std::vector<CosetClassFunction> basis;
      for (long long i = 0; i < w.base_char_count(); ++i) {
        BaseChar chi = w.base_char(i);
        if (w.b_conjugate_char(chi, b) == chi)
          basis.push_back(canonical_extension_on_coset(w, chi, b));
      }
      CHECK(basis.size() == w.coset_classes(b).reps.size());
      for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
          CHECK(coset_inner_product(w, basis[i], basis[j]) == CN(i == j ? 1 : 0));
    }
  }
}

TEST_CASE("gamma family of S2 wr C2: frozen table") {
  WreathGroup w(wr_cycle(S(2), 2));
  auto fam = gamma_family(w);
  REQUIRE(fam.size() == 5);
  CHECK(sorted_degrees(fam) == std::vector<long long>{1, 1, 1, 1, 2});

  auto tab = brute_force_table(w);
  REQUIRE(tab.rows.size() == 5);
  auto match = gamma_oracle_match(w, fam, tab);
  std::set<int> hit(match.begin(), match.end());
  CHECK(hit.size() == 5);
  CHECK(hit.count(-1) == 0);

  // the induced character vanishes off the stabilizer cosets
  BaseChar mixed{{0, 1}};
  for (long long x = 0; x < w.order(); ++x)
    if (w.b_part(x) == 1) CHECK(gamma_value(w, mixed, 0, x).is_zero());
}

TEST_CASE("gamma family of S3 wr C2: frozen degree multiset") {
  WreathGroup w(wr_cycle(S(3), 2));
  auto fam = gamma_family(w);
  REQUIRE(fam.size() == 9);
  CHECK(sorted_degrees(fam) == std::vector<long long>{1, 1, 1, 1, 2, 4, 4, 4, 4});
  long long sq = 0;
  for (const auto& g : fam) sq += g.degree * g.degree;
  CHECK(sq == 72);
}

TEST_CASE("mellin transform: support, value, and norm") {
  std::vector<WreathSpec> specs = {wr_cycle(S(2), 2), wr_cycle(S(3), 2), wr_cycle(S(2), 3)};
  for (const auto& spec : specs) {
    WreathGroup w(spec);
    for (const BaseChar& chi : w.base_char_orbit_reps()) {
      std::vector<int> stab = w.stabilizer_b(chi);
      const CharacterTable& bx = w.b_subgroup_characters(stab);
      int triv = trivial_character_index(bx);
      long long sz = static_cast<long long>(stab.size());
      for (int b : stab) {
        CosetClassFunction m = mellin(w, chi, b);
        const CosetClasses& cc = w.coset_classes(b);
        // equals |B_chi| times the theta-less gamma character on its coset
        for (size_t l = 0; l < cc.reps.size(); ++l)
          CHECK(m.values[l] == gamma_value(w, chi, triv, cc.reps[l]) * Rat(sz));
        // vanishes on every other coset
        for (long long t = 0; t < w.base_order(); t += std::max<long long>(1, w.base_order() / 3))
          for (int c = 0; c < w.b_count(); ++c)
            if (c != b) CHECK(mellin_value(w, chi, b, w.w0_element(t) + c).is_zero());
        // squared norm over the coset
        CHECK(coset_inner_product(w, m, m) == CN(sz * w.b_count()));
      }
    }
    // asking for the transform at a top element that moves the character fails
    BaseChar moved = w.base_char(w.base_char_count() - 2);  // (.., last-1): not diagonal
    if (w.stabilizer_b(moved).size() == 1)
      CHECK_THROWS_AS(mellin(w, moved, 1), std::invalid_argument);
  }
}

TEST_CASE("independent oracle on known tables") {
  // symmetric group on three letters, through its multiplication table only
  WreathGroup w(wr_cycle(S(3), 2));
  const auto& f = w.factor(0);
  GroupView gv;
  gv.n = 6;
  gv.mul = [&f](long long a, long long b) {
    return static_cast<long long>(f.mult[static_cast<size_t>(a)][static_cast<size_t>(b)]);
  };
  gv.inv = [&f](long long a) { return static_cast<long long>(f.inv[static_cast<size_t>(a)]); };
  for (long long e = 1; e < 6; ++e) gv.gens.push_back(e);
  CharacterTable tab = character_table_oracle(gv);
  REQUIRE(tab.rows.size() == 3);
  CHECK(tab.degrees == std::vector<long long>{1, 1, 2});
  CHECK(tab.exponent == 6);
  // rows coincide with the Murnaghan-Nakayama table on class representatives
  std::set<int> seen;
  for (const auto& row : tab.rows)
    for (int i = 0; i < 3; ++i) {
      bool same = true;
      for (size_t l = 0; l < tab.classes.reps.size(); ++l)
        if (!(row[l] == f.irr[static_cast<size_t>(i)]
                             [static_cast<size_t>(tab.classes.reps[l])])) {
          same = false;
          break;
        }
      if (same) seen.insert(i);
    }
  CHECK(seen.size() == 3);

  // cyclic group of order six
  GroupView cyc;
  cyc.n = 6;
  cyc.mul = [](long long a, long long b) { return (a + b) % 6; };
  cyc.inv = [](long long a) { return (6 - a) % 6; };
  cyc.gens = {1};
  CharacterTable ct = character_table_oracle(cyc);
  REQUIRE(ct.rows.size() == 6);
  CHECK(ct.exponent == 6);
  for (long long j = 0; j < 6; ++j) {
    bool found = false;
    for (const auto& row : ct.rows) {
      bool same = true;
      for (long long l = 0; l < 6 && same; ++l)
        if (!(row[static_cast<size_t>(l)] == CycloNum::root_power(6, j * l))) same = false;
      if (same) { found = true; break; }
    }
    CHECK(found);
  }
}

TEST_CASE("gamma parametrization matches the brute-force table across the sweep") {
  struct Entry {
    std::string name;
    WreathSpec spec;
    long long order;
    int irr;  // -1: not pinned by hand
  };
  std::vector<Entry> entries;
  entries.push_back({"S2 wr C2", wr_cycle(S(2), 2), 8, 5});
  entries.push_back({"S3 wr C2", wr_cycle(S(3), 2), 72, 9});
  entries.push_back({"S2 wr C3", wr_cycle(S(2), 3), 24, 8});
  entries.push_back({"S3 wr C3", wr_cycle(S(3), 3), 648, 17});
  entries.push_back({"S2 wr C4", wr_cycle(S(2), 4), 64, 13});
  entries.push_back({"S3 wr C4", wr_cycle(S(3), 4), 5184, 36});
  entries.push_back({"S2 wr V4", wr_klein(S(2)), 64, 16});
  entries.push_back({"S3 wr V4", wr_klein(S(3)), 5184, 45});
  {
    WreathSpec s;  // different factors on different orbits
    s.points = 3;
    s.base = {S(2), S(2), S(3)};
    s.b_orders = {2};
    s.b_action = {{1, 0, 2}};
    entries.push_back({"(S2,S2,S3).C2", s, 48, 15});
  }
  {
    WreathSpec s;  // direct product through a trivial action
    s.points = 1;
    s.base = {S(3)};
    s.b_orders = {3};
    s.b_action = {{0}};
    entries.push_back({"S3 x C3", s, 18, 9});
  }
  {
    WreathSpec s;  // cyclic factors, irrational character values
    s.points = 2;
    s.base = {C(3), C(3)};
    s.b_orders = {2};
    s.b_action = {{1, 0}};
    entries.push_back({"(C3,C3).C2", s, 18, 9});
  }
  {
    WreathSpec s;  // C4 acting through its quotient of order two
    s.points = 2;
    s.base = {S(2), S(2)};
    s.b_orders = {4};
    s.b_action = {{1, 0}};
    entries.push_back({"(S2,S2).C4", s, 16, 10});
  }

  for (const auto& entry : entries) {
    INFO("spec " << entry.name);
    WreathGroup w(entry.spec);
    CHECK(w.order() == entry.order);
    auto fam = gamma_family(w);
    auto tab = brute_force_table(w);
    CHECK(fam.size() == tab.rows.size());
    CHECK(fam.size() == w.classes().reps.size());
    if (entry.irr >= 0) CHECK(static_cast<int>(fam.size()) == entry.irr);

    long long sq = 0;
    for (const auto& g : fam) sq += g.degree * g.degree;
    CHECK(sq == w.order());

    auto match = gamma_oracle_match(w, fam, tab);
    std::set<int> hit;
    for (size_t i = 0; i < match.size(); ++i) {
      CHECK(match[i] >= 0);
      if (match[i] >= 0) {
        hit.insert(match[i]);
        CHECK(fam[i].degree == tab.degrees[static_cast<size_t>(match[i])]);
      }
    }
    CHECK(hit.size() == fam.size());  // bijective onto the oracle rows

    if (w.order() <= 100) {
      for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i; j < fam.size(); ++j)
          CHECK(class_inner_product(w.classes(), fam[i].class_values, fam[j].class_values,
                                    w.order()) == CN(i == j ? 1 : 0));
    }
  }
}

TEST_CASE("trivial action gives the tensor product of tables") {
  WreathSpec s;
  s.points = 1;
  s.base = {S(3)};
  s.b_orders = {3};
  s.b_action = {{0}};
  WreathGroup w(s);
  auto fam = gamma_family(w);
  REQUIRE(fam.size() == 9);
  CHECK(sorted_degrees(fam) == std::vector<long long>{1, 1, 1, 1, 1, 1, 2, 2, 2});
  // every value factors as chi(w0) theta(b)
  std::vector<int> whole{0, 1, 2};
  const CharacterTable& bt = w.b_subgroup_characters(whole);
  for (const auto& g : fam) {
    for (size_t l = 0; l < w.classes().reps.size(); ++l) {
      long long x = w.classes().reps[l];
      CycloNum expected = w.base_char_value(g.chi, w.w0_element(w.tuple_rank(x))) *
                          bt.rows[static_cast<size_t>(g.theta)][static_cast<size_t>(w.b_part(x))];
      CHECK(g.class_values[l] == expected);
    }
  }
}

TEST_CASE("sub-wreath embeddings land on the expected letters") {
  WreathGroup w(wr_cycle(S(3), 2));
  SubWreathGroup sv = sub_wreath(w, SubWreath{{2, 2}, {0, 1}});
  CHECK(sv.group.order() == 8);
  CHECK(sv.b_embed == std::vector<int>{0, 1});
  // the sub-factor swap acts on the last two of the three letters
  long long sub_el = sv.group.encode({1, 0}, 0);
  long long amb = sv.embed[static_cast<size_t>(sub_el)];
  CHECK(w.b_part(amb) == 0);
  CHECK(w.tuple_codes(w.tuple_rank(amb)) ==
        std::vector<int>{perm_code(w, 0, {0, 2, 1}), 0});

  // cyclic subgroup embeds along multiples
  WreathGroup wc(wr_cycle(C(4), 1));
  SubWreathGroup sc = sub_wreath(wc, SubWreath{{2}, {0}});
  CHECK(sc.group.order() == 2);
  CHECK(wc.tuple_codes(wc.tuple_rank(sc.embed[1])) == std::vector<int>{2});

  // mismatched sizes across an orbit are rejected
  CHECK_THROWS_AS(sub_wreath(w, SubWreath{{2, 3}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("restriction and induction identities") {
  WreathGroup w1(wr_cycle(S(2), 2));
  WreathGroup w2(wr_cycle(S(3), 2));
  WreathGroup w3(wr_cycle(S(2), 4));
  WreathGroup w4(wr_klein(S(2)));
  WreathGroup w5(wr_cycle(S(2), 3));

  auto theta_count = [](const WreathGroup& w, const BaseChar& chi) {
    return static_cast<int>(w.stabilizer_b(chi).size());
  };

  SUBCASE("restriction of an extension, and its conjugates") {
    struct K1 { const WreathGroup* w; BaseChar chi; std::vector<int> c; };
    std::vector<K1> cases = {
        {&w1, BaseChar{{0, 0}}, {0, 1}},  {&w1, BaseChar{{0, 0}}, {0}},
        {&w1, BaseChar{{1, 1}}, {0, 1}},  {&w2, BaseChar{{1, 1}}, {0, 1}},
        {&w2, BaseChar{{1, 1}}, {0}},     {&w3, BaseChar{{0, 1, 0, 1}}, {0, 2}},
        {&w4, BaseChar{{0, 0, 1, 1}}, {0, 2}},
    };
    for (const auto& k : cases) {
      MackeyInstance inst;
      inst.kind = 1;
      inst.chi = k.chi;
      inst.c = k.c;
      MackeyReport rep = mackey_check(*k.w, inst);
      CHECK(rep.equal);
      CHECK(!rep.lhs.empty());
    }
  }

  SUBCASE("induction in stages up the tower of top subgroups") {
    struct K2 { const WreathGroup* w; BaseChar chi; std::vector<int> c, d; };
    std::vector<K2> cases = {
        {&w1, BaseChar{{0, 1}}, {0}, {0, 1}},
        {&w1, BaseChar{{0, 0}}, {0, 1}, {0, 1}},
        {&w2, BaseChar{{0, 2}}, {0}, {0, 1}},
        {&w3, BaseChar{{0, 1, 0, 1}}, {0, 2}, {0, 1, 2, 3}},
        {&w4, BaseChar{{0, 0, 1, 1}}, {0, 2}, {0, 1, 2, 3}},
        {&w5, BaseChar{{0, 0, 1}}, {0}, {0, 1, 2}},
    };
    for (const auto& k : cases) {
      for (int theta = 0; theta < theta_count(*k.w, k.chi); ++theta) {
        MackeyInstance inst;
        inst.kind = 2;
        inst.chi = k.chi;
        inst.theta = theta;
        inst.c = k.c;
        inst.d = k.d;
        MackeyReport rep = mackey_check(*k.w, inst);
        CHECK(rep.equal);
      }
    }
  }

  SUBCASE("twisting by a top character, and coset decomposition of a restriction") {
    struct K3 { const WreathGroup* w; BaseChar chi; std::vector<int> c; };
    std::vector<K3> cases = {
        {&w1, BaseChar{{0, 0}}, {0}},
        {&w1, BaseChar{{0, 1}}, {0, 1}},
        {&w2, BaseChar{{2, 2}}, {0}},
        {&w3, BaseChar{{0, 1, 0, 1}}, {0, 2}},
        {&w4, BaseChar{{0, 0, 1, 1}}, {0, 1}},
        {&w5, BaseChar{{0, 0, 0}}, {0}},
    };
    for (const auto& k : cases) {
      for (int theta = 0; theta < theta_count(*k.w, k.chi); ++theta)
        for (int psi = 0; psi < k.w->b_count(); ++psi) {
          MackeyInstance inst;
          inst.kind = 3;
          inst.chi = k.chi;
          inst.theta = theta;
          inst.psi = psi;
          inst.c = k.c;
          MackeyReport rep = mackey_check(*k.w, inst);
          CHECK(rep.equal);
        }
    }
  }

  SUBCASE("inner products against a sub-wreath through double cosets") {
    struct K4 { const WreathGroup* w; BaseChar chi; SubWreath v; BaseChar zeta; };
    std::vector<K4> cases = {
        {&w1, BaseChar{{0, 0}}, SubWreath{{1, 1}, {0, 1}}, BaseChar{{0, 0}}},
        {&w1, BaseChar{{0, 1}}, SubWreath{{1, 1}, {0, 1}}, BaseChar{{0, 0}}},
        {&w1, BaseChar{{0, 0}}, SubWreath{{2, 2}, {0, 1}}, BaseChar{{0, 0}}},
        {&w1, BaseChar{{0, 0}}, SubWreath{{2, 2}, {0, 1}}, BaseChar{{0, 1}}},
        {&w1, BaseChar{{0, 0}}, SubWreath{{2, 1}, {0}}, BaseChar{{1, 0}}},
        {&w2, BaseChar{{1, 1}}, SubWreath{{2, 2}, {0, 1}}, BaseChar{{1, 1}}},
        {&w2, BaseChar{{1, 1}}, SubWreath{{2, 2}, {0, 1}}, BaseChar{{0, 1}}},
        {&w3, BaseChar{{0, 0, 0, 0}}, SubWreath{{1, 1, 1, 1}, {0, 1, 2, 3}},
         BaseChar{{0, 0, 0, 0}}},
    };
    for (const auto& k : cases) {
      SubWreathGroup sv = sub_wreath(*k.w, k.v);
      int npsi = static_cast<int>(sv.group.stabilizer_b(k.zeta).size());
      for (int theta = 0; theta < theta_count(*k.w, k.chi); ++theta)
        for (int psi = 0; psi < npsi; ++psi) {
          MackeyInstance inst;
          inst.kind = 4;
          inst.chi = k.chi;
          inst.theta = theta;
          inst.psi = psi;
          inst.v = k.v;
          inst.zeta = k.zeta;
          MackeyReport rep = mackey_check(*k.w, inst);
          CHECK(rep.equal);
          CHECK(rep.well_defined);
        }
    }
  }
}

TEST_CASE("scalar descent at r=1 is single-strip branching") {
  for (int n = 2; n <= 6; ++n) {
    WreathGroup w(wr_cycle(S(n), 1));
    auto labels = partitions_of(n);
    for (int delta = 1; delta <= n; ++delta) {
      for (int m = 1; m * delta <= n; ++m) {
        if (m > 2) break;
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int c = 0; c < m; ++c)
          for (int i = 0; i < delta; ++i)
            perm[static_cast<size_t>(c * delta + i)] = c * delta + (i + 1) % delta;
        long long v_id = w.encode({perm_code(w, 0, perm)}, 0);
        std::vector<int> type_parts(static_cast<size_t>(n - m * delta), 1);
        for (int c = 0; c < m; ++c) type_parts.push_back(delta);
        std::sort(type_parts.begin(), type_parts.end());
        PartitionShape type(type_parts);

        for (size_t li = 0; li < labels.size(); ++li) {
          INFO("n=" << n << " delta=" << delta << " m=" << m << " label=" << li);
          TwistedRestrictionReport tr = twisted_restriction(
              w, BaseChar{{static_cast<int>(li)}}, v_id,
              SubWreath{{n - m * delta}, {0}}, 0);
          CHECK(tr.equal);
          // value at the identity coset class is the character at v itself
          CHECK(tr.lhs.values[0] == CycloNum::rational(Rat(mn_value(labels[li], type))));
          if (m == 1 && delta > 1) {
            // single-hook multiplicities are signs
            for (const auto& [zeta, t] : tr.constituents) {
              CHECK(is_integer(t));
              CHECK((t.rat_value() == 1 || t.rat_value() == -1));
              CHECK(zeta.labels.size() == 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("scalar descent on the swap coset of S3 wr C2: frozen values") {
  WreathGroup w(wr_cycle(S(3), 2));
  int t01 = perm_code(w, 0, {1, 0, 2});
  long long v_id = w.encode({t01, t01}, 0);
  SubWreath v{{1, 1}, {0, 1}};

  // two-dimensional diagonal: v0^2 = 1, single constituent with weight 2
  TwistedRestrictionReport tr = twisted_restriction(w, BaseChar{{1, 1}}, v_id, v, 1);
  CHECK(tr.equal);
  REQUIRE(tr.constituents.size() == 1);
  CHECK(tr.constituents[0].second == CN(2));
  CHECK(tr.constituents[0].first.labels == std::vector<int>{0, 0});
  REQUIRE(tr.lhs.values.size() == 1);
  CHECK(tr.lhs.values[0] == CN(2));

  // sign and trivial diagonals: weight 1
  for (int lab : {0, 2}) {
    TwistedRestrictionReport t2 =
        twisted_restriction(w, BaseChar{{lab, lab}}, v_id, v, 1);
    CHECK(t2.equal);
    REQUIRE(t2.constituents.size() == 1);
    CHECK(t2.constituents[0].second == CN(1));
  }

  // three-cycle pair: v0^2 is again a three-cycle, weight chi(3-cycle) = -1
  int c012 = perm_code(w, 0, {1, 2, 0});
  TwistedRestrictionReport t3 = twisted_restriction(
      w, BaseChar{{1, 1}}, w.encode({c012, c012}, 0), SubWreath{{0, 0}, {0, 1}}, 1);
  CHECK(t3.equal);
  REQUIRE(t3.constituents.size() == 1);
  CHECK(t3.constituents[0].second == CN(-1));

  // trivial v: the descent is the identity decomposition
  TwistedRestrictionReport t4 =
      twisted_restriction(w, BaseChar{{1, 1}}, 0, SubWreath{{3, 3}, {0, 1}}, 1);
  CHECK(t4.equal);
  REQUIRE(t4.constituents.size() == 1);
  CHECK(t4.constituents[0].second == CN(1));
  CHECK(t4.constituents[0].first.labels == std::vector<int>{1, 1});
}

TEST_CASE("scalar descent across cycle counts and factor kinds") {
  SUBCASE("four letters, two points") {
    WreathGroup w(wr_cycle(S(4), 2));
    int v0 = perm_code(w, 0, {1, 0, 2, 3});
    SubWreath v{{2, 2}, {0, 1}};
    for (int lab = 0; lab < 5; ++lab) {
      TwistedRestrictionReport tr =
          twisted_restriction(w, BaseChar{{lab, lab}}, w.encode({v0, v0}, 0), v, 1);
      CHECK(tr.equal);
    }
    // the full row: restriction of the trivial label is the trivial character
    TwistedRestrictionReport tt =
        twisted_restriction(w, BaseChar{{4, 4}}, w.encode({v0, v0}, 0), v, 1);
    REQUIRE(tt.constituents.size() == 1);
    CHECK(tt.constituents[0].first.labels == std::vector<int>{1, 1});
    CHECK(tt.constituents[0].second == CN(1));

    // two disjoint transpositions per factor, empty sub-factor
    int dd = perm_code(w, 0, {1, 0, 3, 2});
    for (int lab = 0; lab < 5; ++lab) {
      TwistedRestrictionReport tr = twisted_restriction(
          w, BaseChar{{lab, lab}}, w.encode({dd, dd}, 0), SubWreath{{0, 0}, {0, 1}}, 1);
      CHECK(tr.equal);
      REQUIRE(tr.constituents.size() == 1);
      CHECK(tr.constituents[0].second ==
            CN(w.factor(0).irr_degree[static_cast<size_t>(lab)]));
    }
    // three-cycle per factor
    int c3 = perm_code(w, 0, {1, 2, 0, 3});
    for (int lab = 0; lab < 5; ++lab)
      CHECK(twisted_restriction(w, BaseChar{{lab, lab}}, w.encode({c3, c3}, 0),
                                SubWreath{{1, 1}, {0, 1}}, 1)
                .equal);
  }

  SUBCASE("three points: odd power of the transposition survives") {
    WreathGroup w(wr_cycle(S(3), 3));
    int t01 = perm_code(w, 0, {1, 0, 2});
    SubWreath v{{1, 1, 1}, {0, 1, 2}};
    long long v_id = w.encode({t01, t01, t01}, 0);
    // v^3 = v0: weights are chi(transposition): +1, 0, -1
    std::vector<long long> expect_count{1, 0, 1};
    std::vector<long long> expect_val{-1, 0, 1};
    for (int lab = 0; lab < 3; ++lab) {
      TwistedRestrictionReport tr =
          twisted_restriction(w, BaseChar{{lab, lab, lab}}, v_id, v, 1);
      CHECK(tr.equal);
      CHECK(static_cast<long long>(tr.constituents.size()) == expect_count[lab]);
      if (!tr.constituents.empty())
        CHECK(tr.constituents[0].second == CN(expect_val[lab]));
    }
  }

  SUBCASE("four points") {
    WreathGroup w(wr_cycle(S(2), 4));
    long long v_id = w.encode({1, 1, 1, 1}, 0);
    for (int lab = 0; lab < 2; ++lab) {
      TwistedRestrictionReport tr = twisted_restriction(
          w, BaseChar{{lab, lab, lab, lab}}, v_id, SubWreath{{0, 0, 0, 0}, {0, 1, 2, 3}}, 1);
      CHECK(tr.equal);
      REQUIRE(tr.constituents.size() == 1);
      CHECK(tr.constituents[0].second == CN(1));  // v^4 = 1
    }
  }

  SUBCASE("cyclic factors") {
    WreathGroup w(wr_cycle(C(4), 2));
    for (int j = 0; j < 4; ++j) {
      TwistedRestrictionReport tr = twisted_restriction(
          w, BaseChar{{j, j}}, w.encode({2, 2}, 0), SubWreath{{2, 2}, {0, 1}}, 1);
      CHECK(tr.equal);
      REQUIRE(tr.constituents.size() == 1);
      CHECK(tr.constituents[0].second == CN(1));
      CHECK(tr.constituents[0].first.labels == std::vector<int>{j % 2, j % 2});
    }
  }
}

TEST_CASE("argument validation and resource bounds") {
  // order past the bound is rejected before any table is built
  WreathSpec big;
  big.points = 6;
  big.base.assign(6, S(3));
  CHECK_THROWS_AS(WreathGroup{big}, std::length_error);

  WreathSpec bad_action = wr_cycle(S(2), 3);
  bad_action.b_orders = {2};  // the 3-cycle does not square to the identity
  CHECK_THROWS_AS(WreathGroup{bad_action}, std::invalid_argument);

  WreathSpec nc;
  nc.points = 3;
  nc.base.assign(3, S(2));
  nc.b_orders = {2, 2};
  nc.b_action = {{1, 0, 2}, {0, 2, 1}};  // adjacent swaps do not commute
  CHECK_THROWS_AS(WreathGroup{nc}, std::invalid_argument);

  WreathSpec uneven;
  uneven.points = 2;
  uneven.base = {S(2), S(3)};
  uneven.b_orders = {2};
  uneven.b_action = {{1, 0}};
  CHECK_THROWS_AS(WreathGroup{uneven}, std::invalid_argument);

  WreathGroup w(wr_cycle(S(2), 2));
  CHECK_THROWS_AS(w.encode({0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(w.encode({0, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(w.encode({0, 0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(w.base_char_value(BaseChar{{0, 0}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(mellin(w, BaseChar{{0, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(gamma_char(w, BaseChar{{0, 0}}, 7), std::invalid_argument);

  CosetClassFunction a = canonical_extension_on_coset(w, BaseChar{{0, 0}}, 0);
  CosetClassFunction b = canonical_extension_on_coset(w, BaseChar{{0, 0}}, 1);
  CHECK_THROWS_AS(coset_inner_product(w, a, b), std::invalid_argument);

  // scalar descent preconditions
  CHECK_THROWS_AS(
      twisted_restriction(w, BaseChar{{0, 1}}, 0, SubWreath{{1, 1}, {0, 1}}, 1),
      std::invalid_argument);  // character moved by phi
  CHECK_THROWS_AS(
      twisted_restriction(w, BaseChar{{0, 0}}, 0, SubWreath{{1, 1}, {0, 1}}, 0),
      std::invalid_argument);  // phi does not generate the top group
  CHECK_THROWS_AS(
      twisted_restriction(w, BaseChar{{0, 0}}, w.encode({1, 0}, 0),
                          SubWreath{{1, 1}, {0, 1}}, 1),
      std::invalid_argument);  // v not fixed by phi
}
