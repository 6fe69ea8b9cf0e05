#pragma once
// Character calculus for wreath-like products W = W0 . B: a base group
// W0 = prod_beta W_beta (one factor per point, constant along B-orbits) with
// an abelian group B permuting the points. Canonical extensions of B-stable
// base characters, the induced parametrization of Irr(W), its Mellin
// transform, restriction/induction identities, and a scalar-descent rule for
// coset values, all in exact cyclotomic arithmetic and all checkable against
// an independent brute-force character table.

#include "dhckit/group.hpp"
#include "dhckit/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dhckit {

struct BaseFactor {
  enum class Kind { symmetric, cyclic };
  Kind kind = Kind::symmetric;
  int size = 1;  // S_size (letters) or C_size (order)
  bool operator==(const BaseFactor&) const = default;
};

struct WreathSpec {
  int points = 1;
  std::vector<int> b_orders;               // cyclic factor orders of B
  std::vector<std::vector<int>> b_action;  // one permutation of the points per factor generator
  std::vector<BaseFactor> base;            // one factor per point
};

// irreducible of W0: one label per point (symmetric factor: index into
// partitions_of(k); cyclic factor: exponent)
struct BaseChar {
  std::vector<int> labels;
  bool operator==(const BaseChar&) const = default;
  bool operator<(const BaseChar& o) const { return labels < o.labels; }
};

// W0-conjugacy structure of one coset W0*b, ordered by minimal representative
struct CosetClasses {
  int b = 0;
  std::vector<long long> reps;   // full-group element ids lying in W0*b
  std::vector<long long> sizes;
  std::vector<int> class_of_tuple;  // base-tuple rank -> class index
};

// exact class function on one coset, indexed parallel to CosetClasses::reps
struct CosetClassFunction {
  int b = 0;
  std::vector<CycloNum> values;
};

namespace detail {
struct FactorData {
  BaseFactor kind;
  int size = 0;  // number of elements
  std::vector<std::vector<int>> elems;  // symmetric factors: the permutations, lex order
  std::vector<std::vector<int>> mult;
  std::vector<int> inv;
  std::vector<std::vector<CycloNum>> irr;  // irr[i][x] = chi_i(x), per element
  std::vector<long long> irr_degree;
};
}  // namespace detail

class WreathGroup {
 public:
  explicit WreathGroup(const WreathSpec& spec, long long bound = 10000);

  const WreathSpec& spec() const { return spec_; }
  int points() const { return spec_.points; }
  long long order() const { return order_; }
  long long base_order() const { return base_order_; }

  // ---- elements: id = tuple_rank * |B| + b ----
  long long compose(long long x, long long y) const;
  long long inverse(long long x) const;
  long long encode(const std::vector<int>& codes, int b) const;
  const std::vector<int>& tuple_codes(long long tuple_rank) const;
  long long tuple_rank(long long id) const { return id / b_count_; }
  int b_part(long long id) const { return static_cast<int>(id % b_count_); }
  long long w0_element(long long tuple_rank) const { return tuple_rank * b_count_; }
  long long b_element(int b) const { return b; }

  // ---- top group B ----
  int b_count() const { return b_count_; }
  int b_mul(int x, int y) const { return b_mult_[x][y]; }
  int b_inv(int x) const { return b_inv_[x]; }
  const std::vector<int>& b_perm(int b) const { return b_perm_[b]; }
  std::vector<std::vector<int>> b_subgroups() const;  // all subgroups, each sorted
  // linear characters of a subgroup of B (independent oracle on the subgroup);
  // row values are indexed by position in the sorted subgroup list
  const CharacterTable& b_subgroup_characters(const std::vector<int>& subgroup) const;

  // ---- irreducibles of W0 ----
  long long base_char_count() const { return base_char_count_; }
  BaseChar base_char(long long index) const;
  long long base_char_index(const BaseChar& chi) const;
  long long base_char_degree(const BaseChar& chi) const;
  CycloNum base_char_value(const BaseChar& chi, long long w0_id) const;
  BaseChar b_conjugate_char(const BaseChar& chi, int b) const;  // chi^b
  std::vector<int> stabilizer_b(const BaseChar& chi) const;     // B_chi, sorted
  std::vector<BaseChar> base_char_orbit_reps() const;           // minimal per B-orbit

  // ---- conjugacy ----
  GroupView group_view() const;
  const ClassData& classes() const { return classes_; }
  long long exponent() const { return exponent_; }
  const CosetClasses& coset_classes(int b) const;

  const detail::FactorData& factor(int point) const { return factors_[point]; }

 private:
  WreathSpec spec_;
  std::vector<detail::FactorData> factors_;
  std::vector<long long> stride_;
  long long base_order_ = 1;
  long long order_ = 1;
  long long base_char_count_ = 1;
  std::vector<long long> char_stride_;

  int b_count_ = 1;
  std::vector<std::vector<int>> b_mult_;
  std::vector<int> b_inv_;
  std::vector<std::vector<int>> b_perm_;

  std::vector<std::vector<int>> tuples_;  // tuple_rank -> factor codes
  ClassData classes_;
  long long exponent_ = 1;

  mutable std::map<int, CosetClasses> coset_cache_;
  mutable std::map<std::vector<int>, CharacterTable> b_char_cache_;
};

// ---- canonical extension ----
// (chi x| b)(w b): product over <b>-orbits of the points of the label value at
// the orbit's cyclic product; requires b to fix chi
CycloNum canonical_extension_value(const WreathGroup& w, const BaseChar& chi,
                                   long long w0_id, int b);
CosetClassFunction canonical_extension_on_coset(const WreathGroup& w, const BaseChar& chi,
                                                int b);

// ---- parametrization of Irr(W) ----
struct GammaChar {
  BaseChar chi;                      // orbit representative
  int theta = 0;                     // index into Irr(B_chi)
  long long degree = 0;
  std::vector<CycloNum> class_values;  // on classes() reps of the full group
};
GammaChar gamma_char(const WreathGroup& w, const BaseChar& chi, int theta);
std::vector<GammaChar> gamma_family(const WreathGroup& w);  // ordered by (orbit rep, theta)

// value of the gamma character at one element
CycloNum gamma_value(const WreathGroup& w, const BaseChar& chi, int theta, long long x);

// ---- Mellin transform ----
// sum_theta theta(b^-1) Gamma(chi * theta), supported on the coset W0*b
CosetClassFunction mellin(const WreathGroup& w, const BaseChar& chi, int b);
CycloNum mellin_value(const WreathGroup& w, const BaseChar& chi, int b, long long x);

// hermitian inner product of two class functions on the same coset,
// normalized by |W0|
CycloNum coset_inner_product(const WreathGroup& w, const CosetClassFunction& f,
                             const CosetClassFunction& g);

// ---- sub-wreath products ----
struct SubWreath {
  // per point: for a symmetric factor S_k, the sub-symmetric group S_j on the
  // last j letters (0 <= j <= k); for a cyclic factor C_m, the subgroup of
  // order j (j | m)
  std::vector<int> sub_size;
  std::vector<int> b_v;  // subgroup of B
};
struct SubWreathGroup {
  WreathGroup group;
  std::vector<long long> embed;  // sub element id -> ambient element id
  std::vector<int> b_embed;      // sub b index -> ambient b index
};
SubWreathGroup sub_wreath(const WreathGroup& w, const SubWreath& v);

// ---- restriction / induction identities ----
struct MackeyInstance {
  int kind = 1;  // 1: extension restriction/conjugation, 2: induction tower,
                 // 3: twist and coset decomposition, 4: sub-wreath inner product
  BaseChar chi;
  int theta = 0;              // index into Irr(B_chi)
  std::vector<int> c, d;      // subgroups of B (kind 1: C <= B_chi; 2: B_chi <= C <= D; 3: any C)
  int psi = 0;                // kind 3: index into Irr(B); kind 4: index into Irr(B_{V,zeta})
  std::optional<SubWreath> v;     // kind 4
  std::optional<BaseChar> zeta;   // kind 4: irreducible of V0, in V-group labels
};
struct MackeyReport {
  bool equal = false;
  bool well_defined = true;  // kind 4: summand constant on the double cosets
  std::string domain;
  std::vector<CycloNum> lhs, rhs;
};
MackeyReport mackey_check(const WreathGroup& w, const MackeyInstance& inst);

// ---- scalar descent of coset values ----
// For B = <phi> cyclic of order r = |points| acting with a single cycle,
// v in W0 fixed by phi and centralized by V0: the coset values of chi x| phi
// at h v phi, h in V0, decompose through the restriction of the single-factor
// character along v0^r, with diagonal constituents.
struct TwistedRestrictionReport {
  bool equal = false;
  CosetClassFunction lhs, rhs;  // on the V-group coset V0 * phi; entry l is the
                                // value at (twisted class rep of h) * v * phi
  std::vector<std::pair<BaseChar, CycloNum>> constituents;  // nonzero t(zeta)
};
TwistedRestrictionReport twisted_restriction(const WreathGroup& w, const BaseChar& chi,
                                             long long v_w0_id, const SubWreath& v, int phi);

// ---- independent oracle ----
CharacterTable brute_force_table(const WreathGroup& w);

// match each gamma character to the oracle row it equals (-1 when none)
std::vector<int> gamma_oracle_match(const WreathGroup& w, const std::vector<GammaChar>& fam,
                                    const CharacterTable& tab);

}  // namespace dhckit
