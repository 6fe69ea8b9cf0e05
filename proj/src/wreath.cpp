#include "dhckit/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace dhckit {

namespace {

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
  return r;
}

std::vector<int> perm_identity(int n) {
  std::vector<int> r(static_cast<size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

std::vector<int> perm_inverse(const std::vector<int>& a) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
  return r;
}

bool is_permutation(const std::vector<int>& a, int n) {
  if (static_cast<int>(a.size()) != n) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : a) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

PartitionShape cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<size_t>(perm[j]);
      ++len;
    }
    lens.push_back(len);
  }
  return PartitionShape(lens);
}

const detail::FactorData& factor_data(const BaseFactor& f) {
  static std::map<std::pair<int, int>, detail::FactorData> cache;
  auto key = std::make_pair(static_cast<int>(f.kind), f.size);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  detail::FactorData fd;
  fd.kind = f;
  if (f.kind == BaseFactor::Kind::symmetric) {
    if (f.size < 0) throw std::invalid_argument("symmetric factor needs size >= 0");
    long long fact = 1;
    for (int i = 2; i <= f.size; ++i) fact *= i;
    if (fact > 720) throw std::length_error("symmetric factor too large");
    std::vector<int> p = perm_identity(f.size);
    do {
      fd.elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    fd.size = static_cast<int>(fd.elems.size());
    fd.mult.assign(fd.size, std::vector<int>(fd.size, 0));
    fd.inv.assign(fd.size, 0);
    auto index_of = [&fd](const std::vector<int>& q) {
      auto pos = std::lower_bound(fd.elems.begin(), fd.elems.end(), q);
      return static_cast<int>(pos - fd.elems.begin());
    };
    for (int a = 0; a < fd.size; ++a) {
      fd.inv[a] = index_of(perm_inverse(fd.elems[a]));
      for (int b = 0; b < fd.size; ++b)
        fd.mult[a][b] = index_of(perm_compose(fd.elems[a], fd.elems[b]));
    }
    std::vector<PartitionShape> irr_labels = partitions_of(f.size);
    std::vector<PartitionShape> types;
    types.reserve(fd.elems.size());
    for (const auto& e : fd.elems) types.push_back(cycle_type(e));
    for (const PartitionShape& lam : irr_labels) {
      std::vector<CycloNum> row;
      row.reserve(types.size());
      for (const PartitionShape& t : types)
        row.push_back(CycloNum::rational(Rat(mn_value(lam, t))));
      fd.irr_degree.push_back(static_cast<long long>(Int(mn_value(
          lam, PartitionShape(std::vector<int>(static_cast<size_t>(f.size), 1))))));
      fd.irr.push_back(std::move(row));
    }
  } else {
    if (f.size < 1) throw std::invalid_argument("cyclic factor needs size >= 1");
    if (f.size > 720) throw std::length_error("cyclic factor too large");
    fd.size = f.size;
    fd.mult.assign(fd.size, std::vector<int>(fd.size, 0));
    fd.inv.assign(fd.size, 0);
    for (int a = 0; a < fd.size; ++a) {
      fd.inv[a] = (fd.size - a) % fd.size;
      for (int b = 0; b < fd.size; ++b) fd.mult[a][b] = (a + b) % fd.size;
    }
    for (int j = 0; j < fd.size; ++j) {
      std::vector<CycloNum> row;
      row.reserve(fd.size);
      for (int t = 0; t < fd.size; ++t)
        row.push_back(CycloNum::root_power(fd.size, static_cast<long long>(j) * t));
      fd.irr.push_back(std::move(row));
      fd.irr_degree.push_back(1);
    }
  }
  return cache.emplace(key, std::move(fd)).first->second;
}

}  // namespace

WreathGroup::WreathGroup(const WreathSpec& spec, long long bound) : spec_(spec) {
  if (spec.points < 1) throw std::invalid_argument("wreath spec needs at least one point");
  if (static_cast<int>(spec.base.size()) != spec.points)
    throw std::invalid_argument("wreath spec needs one base factor per point");
  if (spec.b_orders.size() != spec.b_action.size())
    throw std::invalid_argument("wreath spec: one action permutation per generator");

  // abelian top group from its cyclic factor orders
  size_t ngen = spec.b_orders.size();
  std::vector<std::vector<int>> gen_perm;
  for (size_t i = 0; i < ngen; ++i) {
    if (spec.b_orders[i] < 1) throw std::invalid_argument("generator order must be positive");
    if (!is_permutation(spec.b_action[i], spec.points))
      throw std::invalid_argument("generator action is not a permutation of the points");
    gen_perm.push_back(spec.b_action[i]);
  }
  for (size_t i = 0; i < ngen; ++i) {
    std::vector<int> pw = perm_identity(spec.points);
    for (int t = 0; t < spec.b_orders[i]; ++t) pw = perm_compose(pw, gen_perm[i]);
    if (pw != perm_identity(spec.points))
      throw std::invalid_argument("generator action order does not divide the stated order");
    for (size_t j = i + 1; j < ngen; ++j)
      if (perm_compose(gen_perm[i], gen_perm[j]) != perm_compose(gen_perm[j], gen_perm[i]))
        throw std::invalid_argument("top group actions do not commute");
  }
  b_count_ = 1;
  for (int o : spec.b_orders) {
    if (b_count_ > bound / o || b_count_ * o > 1024)
      throw std::length_error("top group order exceeds bound");
    b_count_ *= o;
  }
  // element = exponent tuple, mixed radix with the last generator innermost
  std::vector<int> b_stride(ngen, 1);
  for (size_t i = ngen; i-- > 1;) b_stride[i - 1] = b_stride[i] * spec.b_orders[i];
  auto b_decode = [&](int x) {
    std::vector<int> e(ngen);
    for (size_t i = 0; i < ngen; ++i) {
      e[i] = x / b_stride[i];
      x %= b_stride[i];
    }
    return e;
  };
  b_mult_.assign(static_cast<size_t>(b_count_), std::vector<int>(static_cast<size_t>(b_count_), 0));
  b_inv_.assign(static_cast<size_t>(b_count_), 0);
  b_perm_.resize(static_cast<size_t>(b_count_));
  for (int x = 0; x < b_count_; ++x) {
    std::vector<int> ex = b_decode(x);
    std::vector<int> pw = perm_identity(spec.points);
    int invx = 0;
    for (size_t i = 0; i < ngen; ++i) {
      for (int t = 0; t < ex[i]; ++t) pw = perm_compose(pw, gen_perm[i]);
      invx += ((spec.b_orders[i] - ex[i]) % spec.b_orders[i]) * b_stride[i];
    }
    b_perm_[x] = std::move(pw);
    b_inv_[x] = invx;
    for (int y = 0; y < b_count_; ++y) {
      std::vector<int> ey = b_decode(y);
      int z = 0;
      for (size_t i = 0; i < ngen; ++i) z += ((ex[i] + ey[i]) % spec.b_orders[i]) * b_stride[i];
      b_mult_[x][y] = z;
    }
  }

  // base factors, constant along B-orbits of the points
  for (int p = 0; p < spec.points; ++p) factors_.push_back(factor_data(spec.base[p]));
  for (int p = 0; p < spec.points; ++p)
    for (int b = 0; b < b_count_; ++b)
      if (!(spec.base[static_cast<size_t>(b_perm_[b][p])] == spec.base[p]))
        throw std::invalid_argument("base factor not constant on an orbit of the points");

  stride_.assign(static_cast<size_t>(spec.points), 1);
  char_stride_.assign(static_cast<size_t>(spec.points), 1);
  for (int p = spec.points - 1; p-- > 0;) {
    if (stride_[p + 1] > bound / factors_[static_cast<size_t>(p + 1)].size)
      throw std::length_error("wreath order exceeds bound");
    stride_[p] = stride_[p + 1] * factors_[static_cast<size_t>(p + 1)].size;
    char_stride_[p] = char_stride_[p + 1] *
                      static_cast<long long>(factors_[static_cast<size_t>(p + 1)].irr.size());
  }
  if (stride_[0] > bound / factors_[0].size)
    throw std::length_error("wreath order exceeds bound");
  base_order_ = stride_[0] * factors_[0].size;
  base_char_count_ = char_stride_[0] * static_cast<long long>(factors_[0].irr.size());
  if (base_order_ > bound / b_count_) throw std::length_error("wreath order exceeds bound");
  order_ = base_order_ * b_count_;

  tuples_.reserve(static_cast<size_t>(base_order_));
  std::vector<int> cur(static_cast<size_t>(spec.points), 0);
  for (long long r = 0; r < base_order_; ++r) {
    tuples_.push_back(cur);
    for (int p = spec.points - 1; p >= 0; --p) {
      if (++cur[p] < factors_[static_cast<size_t>(p)].size) break;
      cur[p] = 0;
    }
  }

  classes_ = conjugacy_classes(group_view());
  GroupView gv = group_view();
  for (long long rep : classes_.reps) exponent_ = std::lcm(exponent_, element_order(gv, rep));
}

long long WreathGroup::compose(long long x, long long y) const {
  long long rx = x / b_count_, ry = y / b_count_;
  int bx = static_cast<int>(x % b_count_), by = static_cast<int>(y % b_count_);
  const std::vector<int>& cx = tuples_[static_cast<size_t>(rx)];
  const std::vector<int>& cy = tuples_[static_cast<size_t>(ry)];
  const std::vector<int>& pinv = b_perm_[static_cast<size_t>(b_inv_[bx])];
  long long rank = 0;
  for (int p = 0; p < spec_.points; ++p) {
    int code = factors_[static_cast<size_t>(p)]
                   .mult[static_cast<size_t>(cx[p])][static_cast<size_t>(cy[pinv[p]])];
    rank += stride_[static_cast<size_t>(p)] * code;
  }
  return rank * b_count_ + b_mult_[bx][by];
}

long long WreathGroup::inverse(long long x) const {
  long long rx = x / b_count_;
  int bx = static_cast<int>(x % b_count_);
  const std::vector<int>& cx = tuples_[static_cast<size_t>(rx)];
  const std::vector<int>& pb = b_perm_[static_cast<size_t>(bx)];
  long long rank = 0;
  for (int p = 0; p < spec_.points; ++p) {
    const detail::FactorData& f = factors_[static_cast<size_t>(p)];
    rank += stride_[static_cast<size_t>(p)] * f.inv[static_cast<size_t>(cx[pb[p]])];
  }
  return rank * b_count_ + b_inv_[bx];
}

long long WreathGroup::encode(const std::vector<int>& codes, int b) const {
  if (static_cast<int>(codes.size()) != spec_.points)
    throw std::invalid_argument("encode: one code per point");
  if (b < 0 || b >= b_count_) throw std::invalid_argument("encode: bad top element");
  long long rank = 0;
  for (int p = 0; p < spec_.points; ++p) {
    if (codes[p] < 0 || codes[p] >= factors_[static_cast<size_t>(p)].size)
      throw std::invalid_argument("encode: bad factor code");
    rank += stride_[static_cast<size_t>(p)] * codes[p];
  }
  return rank * b_count_ + b;
}

const std::vector<int>& WreathGroup::tuple_codes(long long tuple_rank) const {
  return tuples_[static_cast<size_t>(tuple_rank)];
}

GroupView WreathGroup::group_view() const {
  GroupView gv;
  gv.n = order_;
  gv.mul = [this](long long a, long long b) { return compose(a, b); };
  gv.inv = [this](long long a) { return inverse(a); };
  for (int p = 0; p < spec_.points; ++p) {
    const detail::FactorData& f = factors_[static_cast<size_t>(p)];
    for (int e = 1; e < f.size; ++e)
      gv.gens.push_back(stride_[static_cast<size_t>(p)] * e * b_count_);
  }
  for (int b = 1; b < b_count_; ++b) gv.gens.push_back(b);
  if (gv.gens.empty()) gv.gens.push_back(0);
  return gv;
}

BaseChar WreathGroup::base_char(long long index) const {
  if (index < 0 || index >= base_char_count_) throw std::invalid_argument("base_char: bad index");
  BaseChar chi;
  chi.labels.resize(static_cast<size_t>(spec_.points));
  for (int p = 0; p < spec_.points; ++p) {
    chi.labels[p] = static_cast<int>(index / char_stride_[static_cast<size_t>(p)]);
    index %= char_stride_[static_cast<size_t>(p)];
  }
  return chi;
}

long long WreathGroup::base_char_index(const BaseChar& chi) const {
  if (static_cast<int>(chi.labels.size()) != spec_.points)
    throw std::invalid_argument("base char: one label per point");
  long long index = 0;
  for (int p = 0; p < spec_.points; ++p) {
    long long nirr = static_cast<long long>(factors_[static_cast<size_t>(p)].irr.size());
    if (chi.labels[p] < 0 || chi.labels[p] >= nirr)
      throw std::invalid_argument("base char: bad label");
    index += char_stride_[static_cast<size_t>(p)] * chi.labels[p];
  }
  return index;
}

long long WreathGroup::base_char_degree(const BaseChar& chi) const {
  base_char_index(chi);  // validate
  long long d = 1;
  for (int p = 0; p < spec_.points; ++p)
    d *= factors_[static_cast<size_t>(p)].irr_degree[static_cast<size_t>(chi.labels[p])];
  return d;
}

CycloNum WreathGroup::base_char_value(const BaseChar& chi, long long w0_id) const {
  if (w0_id % b_count_ != 0) throw std::invalid_argument("base_char_value: not a base element");
  const std::vector<int>& codes = tuples_[static_cast<size_t>(w0_id / b_count_)];
  CycloNum v = CycloNum::rational(Rat(1));
  for (int p = 0; p < spec_.points; ++p) {
    const detail::FactorData& f = factors_[static_cast<size_t>(p)];
    v = v * f.irr[static_cast<size_t>(chi.labels[p])][static_cast<size_t>(codes[p])];
  }
  return v;
}

BaseChar WreathGroup::b_conjugate_char(const BaseChar& chi, int b) const {
  base_char_index(chi);  // validate
  const std::vector<int>& pinv = b_perm_[static_cast<size_t>(b_inv_[b])];
  BaseChar out;
  out.labels.resize(chi.labels.size());
  for (int p = 0; p < spec_.points; ++p) out.labels[p] = chi.labels[pinv[p]];
  return out;
}

std::vector<int> WreathGroup::stabilizer_b(const BaseChar& chi) const {
  std::vector<int> stab;
  for (int b = 0; b < b_count_; ++b)
    if (b_conjugate_char(chi, b) == chi) stab.push_back(b);
  return stab;
}

std::vector<BaseChar> WreathGroup::base_char_orbit_reps() const {
  std::vector<BaseChar> reps;
  for (long long i = 0; i < base_char_count_; ++i) {
    BaseChar chi = base_char(i);
    bool minimal = true;
    for (int b = 1; b < b_count_ && minimal; ++b)
      if (base_char_index(b_conjugate_char(chi, b)) < i) minimal = false;
    if (minimal) reps.push_back(chi);
  }
  return reps;
}

std::vector<std::vector<int>> WreathGroup::b_subgroups() const {
  if (b_count_ > 16) throw std::length_error("top group too large to enumerate subgroups");
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << b_count_); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    std::vector<int> elems;
    for (int b = 0; b < b_count_; ++b)
      if (mask & (1 << b)) elems.push_back(b);
    bool closed = true;
    for (size_t i = 0; i < elems.size() && closed; ++i)
      for (size_t j = 0; j < elems.size() && closed; ++j)
        if (!(mask & (1 << b_mult_[elems[i]][elems[j]]))) closed = false;
    if (closed) out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

const CharacterTable& WreathGroup::b_subgroup_characters(const std::vector<int>& subgroup) const {
  auto it = b_char_cache_.find(subgroup);
  if (it != b_char_cache_.end()) return it->second;
  if (subgroup.empty() || subgroup[0] != 0 || !std::is_sorted(subgroup.begin(), subgroup.end()))
    throw std::invalid_argument("subgroup must be sorted and contain the identity");
  for (int x : subgroup)
    for (int y : subgroup)
      if (!std::binary_search(subgroup.begin(), subgroup.end(), b_mult_[x][y]))
        throw std::invalid_argument("not a subgroup of the top group");
  auto pos = [&subgroup](int amb) {
    return static_cast<long long>(std::lower_bound(subgroup.begin(), subgroup.end(), amb) -
                                  subgroup.begin());
  };
  GroupView gv;
  gv.n = static_cast<long long>(subgroup.size());
  gv.mul = [this, subgroup, pos](long long a, long long b) {
    return pos(b_mult_[subgroup[static_cast<size_t>(a)]][subgroup[static_cast<size_t>(b)]]);
  };
  gv.inv = [this, subgroup, pos](long long a) {
    return pos(b_inv_[subgroup[static_cast<size_t>(a)]]);
  };
  for (long long i = 0; i < gv.n; ++i) gv.gens.push_back(i);
  return b_char_cache_.emplace(subgroup, character_table_oracle(gv)).first->second;
}

const CosetClasses& WreathGroup::coset_classes(int b) const {
  auto it = coset_cache_.find(b);
  if (it != coset_cache_.end()) return it->second;
  if (b < 0 || b >= b_count_) throw std::invalid_argument("coset_classes: bad top element");
  CosetClasses cc;
  cc.b = b;
  cc.class_of_tuple.assign(static_cast<size_t>(base_order_), -1);
  std::vector<long long> w0_gens;
  for (int p = 0; p < spec_.points; ++p)
    for (int e = 1; e < factors_[static_cast<size_t>(p)].size; ++e)
      w0_gens.push_back(stride_[static_cast<size_t>(p)] * e * b_count_);
  for (long long t = 0; t < base_order_; ++t) {
    if (cc.class_of_tuple[static_cast<size_t>(t)] != -1) continue;
    int id = static_cast<int>(cc.reps.size());
    std::vector<long long> orbit{t};
    cc.class_of_tuple[static_cast<size_t>(t)] = id;
    for (size_t head = 0; head < orbit.size(); ++head) {
      long long x = orbit[head] * b_count_ + b;
      for (long long g : w0_gens) {
        long long z = compose(g, compose(x, inverse(g)));
        long long rank = z / b_count_;
        if (cc.class_of_tuple[static_cast<size_t>(rank)] == -1) {
          cc.class_of_tuple[static_cast<size_t>(rank)] = id;
          orbit.push_back(rank);
        }
      }
    }
    cc.reps.push_back(t * b_count_ + b);
    cc.sizes.push_back(static_cast<long long>(orbit.size()));
  }
  return coset_cache_.emplace(b, std::move(cc)).first->second;
}

// ---------------------------------------------------------------------------

CycloNum canonical_extension_value(const WreathGroup& w, const BaseChar& chi,
                                   long long w0_id, int b) {
  if (!(w.b_conjugate_char(chi, b) == chi))
    throw std::invalid_argument("canonical extension: top element does not fix the character");
  if (w0_id % w.b_count() != 0)
    throw std::invalid_argument("canonical extension: expects a base element");
  const std::vector<int>& codes = w.tuple_codes(w0_id / w.b_count());
  const std::vector<int>& perm = w.b_perm(b);
  std::vector<bool> seen(static_cast<size_t>(w.points()), false);
  CycloNum v = CycloNum::rational(Rat(1));
  for (int alpha = 0; alpha < w.points(); ++alpha) {
    if (seen[static_cast<size_t>(alpha)]) continue;
    std::vector<int> orbit;
    int q = alpha;
    while (!seen[static_cast<size_t>(q)]) {
      seen[static_cast<size_t>(q)] = true;
      orbit.push_back(q);
      q = perm[static_cast<size_t>(q)];
    }
    const detail::FactorData& f = w.factor(alpha);
    int prod = 0;  // identity; orbit[j] = perm^j(alpha), highest power leftmost
    for (size_t j = orbit.size(); j-- > 0;)
      prod = f.mult[static_cast<size_t>(prod)][static_cast<size_t>(codes[orbit[j]])];
    v = v * f.irr[static_cast<size_t>(chi.labels[alpha])][static_cast<size_t>(prod)];
  }
  return v;
}

CosetClassFunction canonical_extension_on_coset(const WreathGroup& w, const BaseChar& chi,
                                                int b) {
  const CosetClasses& cc = w.coset_classes(b);
  CosetClassFunction f;
  f.b = b;
  f.values.reserve(cc.reps.size());
  for (long long rep : cc.reps)
    f.values.push_back(canonical_extension_value(w, chi, rep - b, b));
  return f;
}

namespace {

std::vector<int> coset_reps(const WreathGroup& w, const std::vector<int>& subgroup) {
  std::vector<bool> seen(static_cast<size_t>(w.b_count()), false);
  std::vector<int> reps;
  for (int b = 0; b < w.b_count(); ++b) {
    if (seen[static_cast<size_t>(b)]) continue;
    reps.push_back(b);
    for (int u : subgroup) seen[static_cast<size_t>(w.b_mul(b, u))] = true;
  }
  return reps;
}

long long subgroup_pos(const std::vector<int>& subgroup, int amb) {
  auto it = std::lower_bound(subgroup.begin(), subgroup.end(), amb);
  if (it == subgroup.end() || *it != amb)
    throw std::invalid_argument("element outside subgroup");
  return it - subgroup.begin();
}

int find_row_by_values(const CharacterTable& tab, const std::vector<CycloNum>& values) {
  for (size_t r = 0; r < tab.rows.size(); ++r)
    if (tab.rows[r] == values) return static_cast<int>(r);
  return -1;
}

}  // namespace

CycloNum gamma_value(const WreathGroup& w, const BaseChar& chi, int theta, long long x) {
  std::vector<int> stab = w.stabilizer_b(chi);
  const CharacterTable& bx = w.b_subgroup_characters(stab);
  if (theta < 0 || theta >= static_cast<int>(bx.rows.size()))
    throw std::invalid_argument("gamma: bad character index for the stabilizer");
  int b = w.b_part(x);
  if (!std::binary_search(stab.begin(), stab.end(), b)) return CycloNum();
  const std::vector<int>& codes = w.tuple_codes(w.tuple_rank(x));
  CycloNum acc;
  for (int rep : coset_reps(w, stab)) {
    const std::vector<int>& pr = w.b_perm(rep);
    std::vector<int> moved(codes.size());
    for (size_t p = 0; p < codes.size(); ++p) moved[p] = codes[pr[p]];
    acc = acc + canonical_extension_value(w, chi, w.encode(moved, 0), b);
  }
  return bx.rows[static_cast<size_t>(theta)][static_cast<size_t>(subgroup_pos(stab, b))] * acc;
}

GammaChar gamma_char(const WreathGroup& w, const BaseChar& chi, int theta) {
  GammaChar g;
  g.chi = chi;
  g.theta = theta;
  const ClassData& cd = w.classes();
  g.class_values.reserve(cd.reps.size());
  for (long long rep : cd.reps) g.class_values.push_back(gamma_value(w, chi, theta, rep));
  std::vector<int> stab = w.stabilizer_b(chi);
  g.degree = (w.b_count() / static_cast<long long>(stab.size())) * w.base_char_degree(chi);
  if (!(g.class_values[0] == CycloNum::rational(Rat(g.degree))))
    throw std::logic_error("gamma: degree mismatch");
  return g;
}

std::vector<GammaChar> gamma_family(const WreathGroup& w) {
  std::vector<GammaChar> fam;
  for (const BaseChar& chi : w.base_char_orbit_reps()) {
    const CharacterTable& bx = w.b_subgroup_characters(w.stabilizer_b(chi));
    for (int theta = 0; theta < static_cast<int>(bx.rows.size()); ++theta)
      fam.push_back(gamma_char(w, chi, theta));
  }
  return fam;
}

CycloNum mellin_value(const WreathGroup& w, const BaseChar& chi, int b, long long x) {
  std::vector<int> stab = w.stabilizer_b(chi);
  if (!std::binary_search(stab.begin(), stab.end(), b))
    throw std::invalid_argument("mellin: top element does not fix the character");
  const CharacterTable& bx = w.b_subgroup_characters(stab);
  long long binv_pos = subgroup_pos(stab, w.b_inv(b));
  CycloNum acc;
  for (size_t theta = 0; theta < bx.rows.size(); ++theta)
    acc = acc + bx.rows[theta][static_cast<size_t>(binv_pos)] *
                    gamma_value(w, chi, static_cast<int>(theta), x);
  return acc;
}

CosetClassFunction mellin(const WreathGroup& w, const BaseChar& chi, int b) {
  const CosetClasses& cc = w.coset_classes(b);
  CosetClassFunction f;
  f.b = b;
  f.values.reserve(cc.reps.size());
  for (long long rep : cc.reps) f.values.push_back(mellin_value(w, chi, b, rep));
  return f;
}

CycloNum coset_inner_product(const WreathGroup& w, const CosetClassFunction& f,
                             const CosetClassFunction& g) {
  if (f.b != g.b) throw std::invalid_argument("coset inner product: different cosets");
  const CosetClasses& cc = w.coset_classes(f.b);
  if (f.values.size() != cc.reps.size() || g.values.size() != cc.reps.size())
    throw std::invalid_argument("coset inner product: size mismatch");
  CycloNum acc;
  for (size_t l = 0; l < cc.reps.size(); ++l)
    acc = acc + f.values[l] * g.values[l].conj() * Rat(cc.sizes[l]);
  return acc / Rat(w.base_order());
}

// ---------------------------------------------------------------------------
// sub-wreath products

namespace {

// cyclic decomposition of a subgroup of the top group: generators whose
// cyclic spans stack as a direct product
std::vector<int> abelian_cyclic_generators(const WreathGroup& w, std::vector<int> subgroup) {
  std::vector<int> gens;
  std::vector<int> span{0};
  auto close = [&w](std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int x : cur)
        for (int y : cur)
          if (s.insert(w.b_mul(x, y)).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
  };
  while (span.size() < subgroup.size()) {
    int best = -1;
    long long best_order = 0;
    for (int x : subgroup) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      long long o = 1;
      for (int y = x; y != 0; y = w.b_mul(y, x)) ++o;
      // need the cyclic span of x to meet the current span trivially
      bool direct = true;
      for (int y = x; y != 0; y = w.b_mul(y, x))
        if (std::binary_search(span.begin(), span.end(), y)) { direct = false; break; }
      if (direct && o > best_order) {
        best_order = o;
        best = x;
      }
    }
    if (best < 0) throw std::logic_error("abelian decomposition failed");
    gens.push_back(best);
    std::vector<int> seed = span;
    seed.push_back(best);
    span = close(seed);
  }
  return gens;
}

}  // namespace

SubWreathGroup sub_wreath(const WreathGroup& w, const SubWreath& v) {
  if (static_cast<int>(v.sub_size.size()) != w.points())
    throw std::invalid_argument("sub wreath: one subgroup size per point");
  std::vector<int> bv = v.b_v;
  std::sort(bv.begin(), bv.end());
  if (bv.empty() || bv[0] != 0) throw std::invalid_argument("sub wreath: top subgroup needs identity");
  for (int x : bv)
    for (int y : bv)
      if (!std::binary_search(bv.begin(), bv.end(), w.b_mul(x, y)))
        throw std::invalid_argument("sub wreath: top part is not a subgroup");

  WreathSpec sub_spec;
  sub_spec.points = w.points();
  for (int p = 0; p < w.points(); ++p) {
    const BaseFactor& f = w.spec().base[static_cast<size_t>(p)];
    int j = v.sub_size[static_cast<size_t>(p)];
    if (f.kind == BaseFactor::Kind::symmetric) {
      if (j < 0 || j > f.size)
        throw std::invalid_argument("sub wreath: bad symmetric subgroup size");
    } else {
      if (j < 1 || f.size % j != 0)
        throw std::invalid_argument("sub wreath: cyclic subgroup order must divide");
    }
    sub_spec.base.push_back(BaseFactor{f.kind, j});
  }
  std::vector<int> gens = abelian_cyclic_generators(w, bv);
  for (int g : gens) {
    long long o = 1;
    for (int y = g; y != 0; y = w.b_mul(y, g)) ++o;
    sub_spec.b_orders.push_back(static_cast<int>(o));
    sub_spec.b_action.push_back(w.b_perm(g));
  }

  SubWreathGroup out{WreathGroup(sub_spec, w.order()), {}, {}};
  const WreathGroup& sg = out.group;

  // top embedding: exponent tuple -> product of the ambient generators
  out.b_embed.resize(static_cast<size_t>(sg.b_count()));
  {
    std::vector<int> strides(gens.size(), 1);
    for (size_t i = gens.size(); i-- > 1;)
      strides[i - 1] = strides[i] * sub_spec.b_orders[i];
    for (int x = 0; x < sg.b_count(); ++x) {
      int rem = x, amb = 0;
      for (size_t i = 0; i < gens.size(); ++i) {
        int e = rem / strides[i];
        rem %= strides[i];
        for (int t = 0; t < e; ++t) amb = w.b_mul(amb, gens[i]);
      }
      out.b_embed[static_cast<size_t>(x)] = amb;
    }
  }

  // factor embeddings: S_j on the last j letters, or the index-(m/j) subgroup
  std::vector<std::vector<int>> code_map(static_cast<size_t>(w.points()));
  for (int p = 0; p < w.points(); ++p) {
    const detail::FactorData& sub_f = sg.factor(p);
    const detail::FactorData& amb_f = w.factor(p);
    const BaseFactor& f = w.spec().base[static_cast<size_t>(p)];
    std::vector<int>& cm = code_map[static_cast<size_t>(p)];
    cm.resize(static_cast<size_t>(sub_f.size));
    if (f.kind == BaseFactor::Kind::symmetric) {
      int j = v.sub_size[static_cast<size_t>(p)];
      for (int e = 0; e < sub_f.size; ++e) {
        std::vector<int> big = perm_identity(f.size);
        for (int t = 0; t < j; ++t)
          big[static_cast<size_t>(f.size - j + t)] = f.size - j + sub_f.elems[e][t];
        auto pos = std::lower_bound(amb_f.elems.begin(), amb_f.elems.end(), big);
        cm[static_cast<size_t>(e)] = static_cast<int>(pos - amb_f.elems.begin());
      }
    } else {
      int j = v.sub_size[static_cast<size_t>(p)];
      for (int e = 0; e < sub_f.size; ++e) cm[static_cast<size_t>(e)] = e * (f.size / j);
    }
  }

  out.embed.resize(static_cast<size_t>(sg.order()));
  std::vector<int> amb_codes(static_cast<size_t>(w.points()));
  for (long long x = 0; x < sg.order(); ++x) {
    const std::vector<int>& codes = sg.tuple_codes(sg.tuple_rank(x));
    for (int p = 0; p < w.points(); ++p)
      amb_codes[static_cast<size_t>(p)] = code_map[static_cast<size_t>(p)][codes[p]];
    out.embed[static_cast<size_t>(x)] =
        w.encode(amb_codes, out.b_embed[static_cast<size_t>(sg.b_part(x))]);
  }

  // the embedding must be a homomorphism on generators
  GroupView sv = sg.group_view();
  for (long long a : sv.gens)
    for (long long b : sv.gens)
      if (out.embed[static_cast<size_t>(sg.compose(a, b))] !=
          w.compose(out.embed[static_cast<size_t>(a)], out.embed[static_cast<size_t>(b)]))
        throw std::logic_error("sub wreath embedding is not a homomorphism");
  return out;
}

// ---------------------------------------------------------------------------
// identity checks

namespace {

// value vector of an ambient top-subgroup character transported to the
// corresponding subgroup of another wreath group via an embedding of top
// groups, then located in that group's character list
int transport_b_char(const WreathGroup&, const std::vector<int>& amb_sub,
                     const std::vector<CycloNum>& amb_values, const WreathGroup& tgt,
                     const std::vector<int>& tgt_sub, const std::vector<int>& tgt_to_amb) {
  std::vector<CycloNum> tgt_values(tgt_sub.size());
  for (size_t i = 0; i < tgt_sub.size(); ++i) {
    int amb_elem = tgt_to_amb[static_cast<size_t>(tgt_sub[i])];
    tgt_values[i] = amb_values[static_cast<size_t>(subgroup_pos(amb_sub, amb_elem))];
  }
  return find_row_by_values(tgt.b_subgroup_characters(tgt_sub), tgt_values);
}

std::vector<int> full_base(const WreathGroup& w) {
  std::vector<int> s(static_cast<size_t>(w.points()));
  for (int p = 0; p < w.points(); ++p) {
    const BaseFactor& f = w.spec().base[static_cast<size_t>(p)];
    s[static_cast<size_t>(p)] = f.size;
  }
  return s;
}

bool is_b_subgroup(const WreathGroup& w, const std::vector<int>& s) {
  if (s.empty() || s[0] != 0 || !std::is_sorted(s.begin(), s.end())) return false;
  for (int x : s)
    for (int y : s)
      if (!std::binary_search(s.begin(), s.end(), w.b_mul(x, y))) return false;
  return true;
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  for (int x : small)
    if (!std::binary_search(big.begin(), big.end(), x)) return false;
  return true;
}

void push_pair(MackeyReport& rep, const CycloNum& l, const CycloNum& r) {
  rep.lhs.push_back(l);
  rep.rhs.push_back(r);
  if (!(l == r)) rep.equal = false;
}

MackeyReport check_extension_restriction(const WreathGroup& w, const MackeyInstance& inst) {
  MackeyReport rep;
  rep.equal = true;
  std::vector<int> stab = w.stabilizer_b(inst.chi);
  if (!is_b_subgroup(w, inst.c) || !contains_all(stab, inst.c))
    throw std::invalid_argument("extension restriction: C must sit inside the stabilizer");
  SubWreathGroup wc = sub_wreath(w, SubWreath{full_base(w), inst.c});
  rep.domain = "coset classes of the C-part, then the conjugation sweep";
  for (int cb = 0; cb < wc.group.b_count(); ++cb) {
    const CosetClasses& cc = wc.group.coset_classes(cb);
    for (long long r : cc.reps) {
      // restriction: evaluate the ambient extension at the embedded element
      long long amb = wc.embed[static_cast<size_t>(r)];
      push_pair(rep,
                canonical_extension_value(w, inst.chi, w.w0_element(w.tuple_rank(amb)),
                                          w.b_part(amb)),
                canonical_extension_value(wc.group, inst.chi,
                                          wc.group.w0_element(wc.group.tuple_rank(r)), cb));
    }
  }
  // (chi x| B_chi)^b = chi^b x| B_chi
  for (int b = 0; b < w.b_count(); ++b) {
    BaseChar conj = w.b_conjugate_char(inst.chi, b);
    const std::vector<int>& pb = w.b_perm(b);
    for (int cb : stab) {
      const CosetClasses& cc = w.coset_classes(cb);
      for (long long r : cc.reps) {
        const std::vector<int>& codes = w.tuple_codes(w.tuple_rank(r));
        std::vector<int> moved(codes.size());
        for (size_t p = 0; p < codes.size(); ++p) moved[p] = codes[pb[p]];
        push_pair(rep, canonical_extension_value(w, inst.chi, w.encode(moved, 0), cb),
                  canonical_extension_value(w, conj, w.w0_element(w.tuple_rank(r)), cb));
      }
    }
  }
  return rep;
}

MackeyReport check_induction_tower(const WreathGroup& w, const MackeyInstance& inst) {
  MackeyReport rep;
  rep.equal = true;
  std::vector<int> stab = w.stabilizer_b(inst.chi);
  if (!is_b_subgroup(w, inst.c) || !is_b_subgroup(w, inst.d))
    throw std::invalid_argument("induction tower: C and D must be subgroups");
  if (!contains_all(inst.c, stab) || !contains_all(inst.d, inst.c))
    throw std::invalid_argument("induction tower: need B_chi <= C <= D");
  SubWreathGroup wc = sub_wreath(w, SubWreath{full_base(w), inst.c});
  SubWreathGroup wd = sub_wreath(w, SubWreath{full_base(w), inst.d});
  const CharacterTable& amb_tab = w.b_subgroup_characters(stab);
  if (inst.theta < 0 || inst.theta >= static_cast<int>(amb_tab.rows.size()))
    throw std::invalid_argument("induction tower: bad character of the stabilizer");

  // theta lives on B_chi; both sub-wreaths see the same stabilizer
  std::vector<int> stab_c = wc.group.stabilizer_b(inst.chi);
  std::vector<int> stab_d = wd.group.stabilizer_b(inst.chi);
  int theta_c = transport_b_char(w, stab, amb_tab.rows[static_cast<size_t>(inst.theta)],
                                 wc.group, stab_c, wc.b_embed);
  int theta_d = transport_b_char(w, stab, amb_tab.rows[static_cast<size_t>(inst.theta)],
                                 wd.group, stab_d, wd.b_embed);
  if (theta_c < 0 || theta_d < 0)
    throw std::logic_error("induction tower: transported character not found");

  GammaChar gc = gamma_char(wc.group, inst.chi, theta_c);
  GammaChar gd = gamma_char(wd.group, inst.chi, theta_d);

  // ambient id -> id in the D-group, to conjugate by transversal elements there;
  // C-membership of a D-element is membership of its ambient top part in C
  std::unordered_map<long long, long long> amb_to_c;
  for (long long x = 0; x < wc.group.order(); ++x)
    amb_to_c.emplace(wc.embed[static_cast<size_t>(x)], x);
  std::vector<int> c_in_d;  // C as a subgroup of the D-group's top part
  for (int db = 0; db < wd.group.b_count(); ++db)
    if (std::binary_search(inst.c.begin(), inst.c.end(), wd.b_embed[static_cast<size_t>(db)]))
      c_in_d.push_back(db);
  rep.domain = "classes of the D-group";
  for (size_t l = 0; l < wd.group.classes().reps.size(); ++l) {
    long long g = wd.group.classes().reps[l];
    CycloNum ind;
    for (int t : coset_reps(wd.group, c_in_d)) {
      long long tt = wd.group.b_element(t);
      long long conj = wd.group.compose(wd.group.compose(wd.group.inverse(tt), g), tt);
      auto it = amb_to_c.find(wd.embed[static_cast<size_t>(conj)]);
      if (it == amb_to_c.end()) continue;
      ind = ind + gc.class_values[static_cast<size_t>(
                      wc.group.classes().class_of[static_cast<size_t>(it->second)])];
    }
    push_pair(rep, ind, gd.class_values[l]);
  }
  return rep;
}

MackeyReport check_twist_and_cosets(const WreathGroup& w, const MackeyInstance& inst) {
  MackeyReport rep;
  rep.equal = true;
  std::vector<int> stab = w.stabilizer_b(inst.chi);
  const CharacterTable& stab_tab = w.b_subgroup_characters(stab);
  if (inst.theta < 0 || inst.theta >= static_cast<int>(stab_tab.rows.size()))
    throw std::invalid_argument("twist: bad character of the stabilizer");
  std::vector<int> whole(static_cast<size_t>(w.b_count()));
  std::iota(whole.begin(), whole.end(), 0);
  const CharacterTable& b_tab = w.b_subgroup_characters(whole);
  if (inst.psi < 0 || inst.psi >= static_cast<int>(b_tab.rows.size()))
    throw std::invalid_argument("twist: bad character of the top group");
  const std::vector<CycloNum>& psi = b_tab.rows[static_cast<size_t>(inst.psi)];

  // twisting the parametrized character by a top character moves the second label
  std::vector<CycloNum> twisted(stab.size());
  for (size_t i = 0; i < stab.size(); ++i)
    twisted[i] = psi[static_cast<size_t>(stab[i])] *
                 stab_tab.rows[static_cast<size_t>(inst.theta)][i];
  int theta2 = find_row_by_values(stab_tab, twisted);
  if (theta2 < 0) throw std::logic_error("twist: product character not found");
  GammaChar g1 = gamma_char(w, inst.chi, inst.theta);
  GammaChar g2 = gamma_char(w, inst.chi, theta2);
  rep.domain = "classes of the full group, then classes of the C-group";
  for (size_t l = 0; l < w.classes().reps.size(); ++l) {
    int b = w.b_part(w.classes().reps[l]);
    push_pair(rep, psi[static_cast<size_t>(b)] * g1.class_values[l], g2.class_values[l]);
  }

  // restriction to W0 . C: one C-group character per double coset, i.e. per
  // coset of the product subgroup C * B_chi, with the stabilizer character
  // restricted to C Pi B_chi
  if (!is_b_subgroup(w, inst.c))
    throw std::invalid_argument("twist: C must be a subgroup");
  SubWreathGroup wc = sub_wreath(w, SubWreath{full_base(w), inst.c});
  std::vector<int> c_chi;  // C intersect B_chi, ambient ids
  for (int x : inst.c)
    if (std::binary_search(stab.begin(), stab.end(), x)) c_chi.push_back(x);
  std::vector<CycloNum> rho(c_chi.size());
  for (size_t i = 0; i < c_chi.size(); ++i)
    rho[i] = stab_tab.rows[static_cast<size_t>(inst.theta)][static_cast<size_t>(
        subgroup_pos(stab, c_chi[i]))];

  std::vector<int> c_stab;  // the product subgroup C * B_chi
  {
    std::set<int> s;
    for (int x : inst.c)
      for (int y : stab) s.insert(w.b_mul(x, y));
    c_stab.assign(s.begin(), s.end());
  }
  std::vector<GammaChar> pieces;
  for (int b : coset_reps(w, c_stab)) {
    BaseChar conj = w.b_conjugate_char(inst.chi, b);
    std::vector<int> stab_conj = wc.group.stabilizer_b(conj);
    int rho_idx = transport_b_char(w, c_chi, rho, wc.group, stab_conj, wc.b_embed);
    if (rho_idx < 0) throw std::logic_error("twist: restricted character not found");
    pieces.push_back(gamma_char(wc.group, conj, rho_idx));
  }
  for (size_t l = 0; l < wc.group.classes().reps.size(); ++l) {
    long long amb = wc.embed[static_cast<size_t>(wc.group.classes().reps[l])];
    CycloNum sum;
    for (const GammaChar& piece : pieces) sum = sum + piece.class_values[l];
    push_pair(rep, g1.class_values[static_cast<size_t>(
                       w.classes().class_of[static_cast<size_t>(amb)])], sum);
  }
  return rep;
}

MackeyReport check_subwreath_inner_product(const WreathGroup& w, const MackeyInstance& inst) {
  MackeyReport rep;
  rep.equal = true;
  if (!inst.v || !inst.zeta)
    throw std::invalid_argument("sub-wreath inner product: needs a sub-wreath and its character");
  SubWreathGroup sv = sub_wreath(w, *inst.v);
  const WreathGroup& vg = sv.group;

  std::vector<int> stab_chi = w.stabilizer_b(inst.chi);
  std::vector<int> stab_zeta_v = vg.stabilizer_b(*inst.zeta);  // B_{V,zeta} in V ids
  std::vector<int> stab_zeta;                                  // ambient ids, sorted
  for (int x : stab_zeta_v) stab_zeta.push_back(sv.b_embed[static_cast<size_t>(x)]);
  std::sort(stab_zeta.begin(), stab_zeta.end());

  GammaChar gw = gamma_char(w, inst.chi, inst.theta);
  GammaChar gv = gamma_char(vg, *inst.zeta, inst.psi);

  // left side: <Res Gamma, Gamma_V> over the sub-wreath
  std::vector<CycloNum> res(vg.classes().reps.size());
  for (size_t l = 0; l < res.size(); ++l)
    res[l] = gw.class_values[static_cast<size_t>(w.classes().class_of[static_cast<size_t>(
        sv.embed[static_cast<size_t>(vg.classes().reps[l])])])];
  CycloNum lhs = class_inner_product(vg.classes(), res, gv.class_values, vg.order());

  // right side: double-coset sum of base-character multiplicities times the
  // compatibility of the two stabilizer characters on the intersection
  std::vector<int> prod_set;  // B_chi * B_{V,zeta}
  {
    std::set<int> s;
    for (int x : stab_chi)
      for (int y : stab_zeta) s.insert(w.b_mul(x, y));
    prod_set.assign(s.begin(), s.end());
  }
  std::vector<int> inter;
  for (int x : stab_chi)
    if (std::binary_search(stab_zeta.begin(), stab_zeta.end(), x)) inter.push_back(x);

  const CharacterTable& chi_tab = w.b_subgroup_characters(stab_chi);
  const CharacterTable& zeta_tab = vg.b_subgroup_characters(stab_zeta_v);
  const std::vector<CycloNum>& theta_vals = chi_tab.rows[static_cast<size_t>(inst.theta)];
  const std::vector<CycloNum>& psi_vals = zeta_tab.rows[static_cast<size_t>(inst.psi)];
  CycloNum ip2;
  for (int x : inter) {
    int xv = -1;  // position of x in the V top group
    for (size_t i = 0; i < sv.b_embed.size(); ++i)
      if (sv.b_embed[i] == x) { xv = static_cast<int>(i); break; }
    ip2 = ip2 + theta_vals[static_cast<size_t>(subgroup_pos(stab_chi, x))] *
                    psi_vals[static_cast<size_t>(subgroup_pos(stab_zeta_v, xv))].conj();
  }
  ip2 = ip2 / Rat(static_cast<long long>(inter.size()));

  // <Res_{V0} chi^b, zeta> for every b, then constancy on each double coset
  std::vector<CycloNum> summand(static_cast<size_t>(w.b_count()));
  for (int b = 0; b < w.b_count(); ++b) {
    BaseChar conj = w.b_conjugate_char(inst.chi, b);
    CycloNum ip1;
    for (long long t = 0; t < vg.base_order(); ++t) {
      long long amb = sv.embed[static_cast<size_t>(vg.w0_element(t))];
      ip1 = ip1 + w.base_char_value(conj, amb) * vg.base_char_value(*inst.zeta,
                                                                    vg.w0_element(t)).conj();
    }
    summand[static_cast<size_t>(b)] = ip1 / Rat(vg.base_order()) * ip2;
  }
  for (int b = 0; b < w.b_count(); ++b)
    for (int u : prod_set)
      if (!(summand[static_cast<size_t>(w.b_mul(b, u))] == summand[static_cast<size_t>(b)]))
        rep.well_defined = false;
  CycloNum rhs;
  for (int b : coset_reps(w, prod_set)) rhs = rhs + summand[static_cast<size_t>(b)];

  rep.domain = "inner products over the sub-wreath";
  push_pair(rep, lhs, rhs);
  return rep;
}

}  // namespace

MackeyReport mackey_check(const WreathGroup& w, const MackeyInstance& inst) {
  w.base_char_index(inst.chi);  // validate
  switch (inst.kind) {
    case 1: return check_extension_restriction(w, inst);
    case 2: return check_induction_tower(w, inst);
    case 3: return check_twist_and_cosets(w, inst);
    case 4: return check_subwreath_inner_product(w, inst);
    default: throw std::invalid_argument("mackey_check: kind must be 1..4");
  }
}

// ---------------------------------------------------------------------------
// scalar descent on a coset

TwistedRestrictionReport twisted_restriction(const WreathGroup& w, const BaseChar& chi,
                                             long long v_w0_id, const SubWreath& v, int phi) {
  // the top group must be a single cycle generated by phi
  std::vector<int> span{0};
  for (int y = phi; y != 0; y = w.b_mul(y, phi)) span.push_back(y);
  if (static_cast<int>(span.size()) != w.b_count())
    throw std::invalid_argument("scalar descent: phi must generate the top group");
  int r = w.points();
  if (w.b_count() != r)
    throw std::invalid_argument("scalar descent: top order must equal the point count");
  {
    std::vector<bool> seen(static_cast<size_t>(r), false);
    int q = 0, len = 0;
    while (!seen[static_cast<size_t>(q)]) {
      seen[static_cast<size_t>(q)] = true;
      q = w.b_perm(phi)[static_cast<size_t>(q)];
      ++len;
    }
    if (len != r) throw std::invalid_argument("scalar descent: phi must act with a single cycle");
  }
  if (!(w.b_conjugate_char(chi, phi) == chi))
    throw std::invalid_argument("scalar descent: character must be fixed by phi");
  if (v_w0_id % w.b_count() != 0 || v_w0_id < 0 || v_w0_id >= w.order())
    throw std::invalid_argument("scalar descent: v must be a base element");
  {  // v must be fixed by phi: phi . v = v
    const std::vector<int>& codes = w.tuple_codes(w.tuple_rank(v_w0_id));
    const std::vector<int>& pinv = w.b_perm(w.b_inv(phi));
    for (int p = 0; p < r; ++p)
      if (codes[pinv[p]] != codes[p])
        throw std::invalid_argument("scalar descent: v must be fixed by phi");
  }
  std::vector<int> bv = v.b_v;
  std::sort(bv.begin(), bv.end());
  std::vector<int> whole(static_cast<size_t>(w.b_count()));
  std::iota(whole.begin(), whole.end(), 0);
  if (bv != whole)
    throw std::invalid_argument("scalar descent: the sub-wreath keeps the whole top group");

  SubWreathGroup sv = sub_wreath(w, v);
  const WreathGroup& vg = sv.group;
  int phi_v = -1;
  for (size_t i = 0; i < sv.b_embed.size(); ++i)
    if (sv.b_embed[i] == phi) phi_v = static_cast<int>(i);
  if (phi_v < 0) throw std::logic_error("scalar descent: phi lost in the sub-wreath");

  // V0 must centralize v, elementwise through the embedding
  for (long long t = 0; t < vg.base_order(); ++t) {
    long long amb = sv.embed[static_cast<size_t>(vg.w0_element(t))];
    if (w.compose(amb, v_w0_id) != w.compose(v_w0_id, amb))
      throw std::invalid_argument("scalar descent: V0 must centralize v");
  }

  // phi transitive on the points forces the fixed character to be a diagonal
  // c^(x)r and the fixed v a constant tuple (v0, ..., v0). The coset value at
  // h v phi collapses along the orbit to chi_c(H v0^r) with H the cyclic
  // product of the h-codes, so the decomposition happens in ONE factor: the
  // coefficients are <chi_c(. v0^r), z> over the sub-factor, and the
  // constituents are the diagonal characters z^(x)r.
  const detail::FactorData& amb_f = w.factor(0);
  const detail::FactorData& sub_f = vg.factor(0);
  int v0 = w.tuple_codes(w.tuple_rank(v_w0_id))[0];
  int v0r = 0;
  for (int t = 0; t < r; ++t)
    v0r = amb_f.mult[static_cast<size_t>(v0r)][static_cast<size_t>(v0)];

  // ambient code of each sub-factor element, read off the embedding at point 0
  std::vector<int> code_map(static_cast<size_t>(sub_f.size));
  for (int e = 0; e < sub_f.size; ++e) {
    std::vector<int> codes(static_cast<size_t>(r), 0);
    codes[0] = e;
    long long amb = sv.embed[static_cast<size_t>(vg.encode(codes, 0))];
    code_map[static_cast<size_t>(e)] = w.tuple_codes(w.tuple_rank(amb))[0];
  }

  TwistedRestrictionReport report;
  std::vector<std::pair<BaseChar, CycloNum>> constituents;
  int c_label = chi.labels[0];
  std::vector<CycloNum> t_single(sub_f.irr.size());
  for (size_t z = 0; z < sub_f.irr.size(); ++z) {
    CycloNum acc;
    for (int e = 0; e < sub_f.size; ++e) {
      int prod = amb_f.mult[static_cast<size_t>(code_map[static_cast<size_t>(e)])]
                           [static_cast<size_t>(v0r)];
      acc = acc + amb_f.irr[static_cast<size_t>(c_label)][static_cast<size_t>(prod)] *
                      sub_f.irr[z][static_cast<size_t>(e)].conj();
    }
    acc = acc / Rat(sub_f.size);
    t_single[z] = acc;
    if (!acc.is_zero()) {
      BaseChar zeta;
      zeta.labels.assign(static_cast<size_t>(r), static_cast<int>(z));
      constituents.emplace_back(zeta, acc);
    }
  }

  const CosetClasses& cc = vg.coset_classes(phi_v);
  report.lhs.b = phi_v;
  report.rhs.b = phi_v;
  report.equal = true;
  for (long long rep_el : cc.reps) {
    long long t = vg.tuple_rank(rep_el);
    long long amb_h = sv.embed[static_cast<size_t>(vg.w0_element(t))];
    CycloNum lhs = canonical_extension_value(w, chi, w.compose(amb_h, v_w0_id), phi);
    CycloNum rhs;
    for (const auto& [zeta, tz] : constituents)
      rhs = rhs + tz * canonical_extension_value(vg, zeta, vg.w0_element(t), phi_v);
    report.lhs.values.push_back(lhs);
    report.rhs.values.push_back(rhs);
    if (!(lhs == rhs)) report.equal = false;
  }
  // the identity is pointwise on the whole coset, not only on representatives
  for (long long t = 0; t < vg.base_order() && report.equal; ++t) {
    long long amb_h = sv.embed[static_cast<size_t>(vg.w0_element(t))];
    CycloNum lhs = canonical_extension_value(w, chi, w.compose(amb_h, v_w0_id), phi);
    CycloNum rhs;
    for (const auto& [zeta, tz] : constituents)
      rhs = rhs + tz * canonical_extension_value(vg, zeta, vg.w0_element(t), phi_v);
    if (!(lhs == rhs)) report.equal = false;
  }
  // the multiplicities themselves descend: pairing the restricted coset values
  // against each z^(x)r x| phi over the sub-coset recovers the one-factor t(z)
  for (size_t z = 0; z < sub_f.irr.size() && report.equal; ++z) {
    BaseChar zeta;
    zeta.labels.assign(static_cast<size_t>(r), static_cast<int>(z));
    CosetClassFunction ez = canonical_extension_on_coset(vg, zeta, phi_v);
    if (!(coset_inner_product(vg, report.lhs, ez) == t_single[z])) report.equal = false;
  }
  report.constituents = std::move(constituents);
  return report;
}

// ---------------------------------------------------------------------------

CharacterTable brute_force_table(const WreathGroup& w) {
  return character_table_oracle(w.group_view());
}

std::vector<int> gamma_oracle_match(const WreathGroup& w, const std::vector<GammaChar>& fam,
                                    const CharacterTable& tab) {
  std::vector<int> match(fam.size(), -1);
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t r = 0; r < tab.rows.size(); ++r) {
      bool same = true;
      for (size_t l = 0; l < tab.rows[r].size() && same; ++l)
        if (!(fam[i].class_values[l] == tab.rows[r][l])) same = false;
      if (same) { match[i] = static_cast<int>(r); break; }
    }
  (void)w;
  return match;
}

}  // namespace dhckit
