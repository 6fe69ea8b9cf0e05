// Character-table oracle: simultaneous eigenvectors of the class matrices over
// a prime field F_p with p = 1 (mod exp(G)), then exact recovery of the
// character values as integer combinations of roots of unity via the discrete
// Fourier transform over each element's power classes. Self-checks the exact
// first orthogonality relations before returning.

#include "dhckit/group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace dhckit {

namespace {

using u64 = std::uint64_t;
using Mat = std::vector<std::vector<u64>>;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_ll(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

long long pick_prime(long long exponent, long long order, long long num_classes) {
  long long bound = num_classes;
  while (bound * bound < 4 * order) ++bound;  // also want p > 2 sqrt(|G|)
  for (long long p = exponent + 1;; p += exponent) {
    if (p <= bound) continue;
    if (order % p == 0) continue;
    if (is_prime_ll(p)) return p;
  }
}

u64 primitive_root(u64 p) {
  std::vector<u64> prime_factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("primitive root not found");
}

// det(xI - H) for upper Hessenberg H, coefficients low-first, monic
std::vector<u64> hessenberg_charpoly(Mat h, u64 p) {
  size_t d = h.size();
  // reduce to upper Hessenberg by similarity transformations
  for (size_t j = 0; j + 2 < d; ++j) {
    size_t r = j + 1;
    while (r < d && h[r][j] == 0) ++r;
    if (r == d) continue;
    if (r != j + 1) {
      std::swap(h[r], h[j + 1]);
      for (size_t i = 0; i < d; ++i) std::swap(h[i][r], h[i][j + 1]);
    }
    u64 piv_inv = invmod(h[j + 1][j], p);
    for (size_t i = j + 2; i < d; ++i) {
      u64 f = mulmod(h[i][j], piv_inv, p);
      if (f == 0) continue;
      for (size_t c = 0; c < d; ++c)
        h[i][c] = (h[i][c] + p - mulmod(f, h[j + 1][c], p)) % p;
      for (size_t rr = 0; rr < d; ++rr)
        h[rr][j + 1] = (h[rr][j + 1] + mulmod(f, h[rr][i], p)) % p;
    }
  }
  std::vector<std::vector<u64>> dets(d + 1);  // dets[m] = det(xI - H_m)
  dets[0] = {1};
  for (size_t m = 1; m <= d; ++m) {
    const std::vector<u64>& prev = dets[m - 1];
    std::vector<u64> cur(m + 1, 0);
    for (size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] = (cur[t + 1] + prev[t]) % p;  // x * prev
      cur[t] = (cur[t] + p - mulmod(h[m - 1][m - 1], prev[t], p)) % p;
    }
    u64 prod = 1;
    for (size_t i = m - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      u64 f = mulmod(h[i][m - 1], prod, p);
      if (f == 0) continue;
      const std::vector<u64>& di = dets[i];
      for (size_t t = 0; t < di.size(); ++t)
        cur[t] = (cur[t] + p - mulmod(f, di[t], p)) % p;
    }
    dets[m] = std::move(cur);
  }
  return dets[d];
}

u64 poly_eval(const std::vector<u64>& c, u64 x, u64 p) {
  u64 v = 0;
  for (size_t t = c.size(); t-- > 0;) v = (mulmod(v, x, p) + c[t]) % p;
  return v;
}

// columns of the returned matrix span ker(m - lambda I)
std::vector<std::vector<u64>> kernel_basis(Mat m, u64 lambda, u64 p) {
  size_t d = m.size();
  for (size_t i = 0; i < d; ++i) m[i][i] = (m[i][i] + p - lambda) % p;
  std::vector<int> pivot_col_of_row(d, -1);
  std::vector<bool> is_pivot(d, false);
  size_t row = 0;
  for (size_t col = 0; col < d && row < d; ++col) {
    size_t r = row;
    while (r < d && m[r][col] == 0) ++r;
    if (r == d) continue;
    std::swap(m[r], m[row]);
    u64 inv = invmod(m[row][col], p);
    for (size_t c = 0; c < d; ++c) m[row][c] = mulmod(m[row][c], inv, p);
    for (size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      u64 f = m[i][col];
      for (size_t c = 0; c < d; ++c)
        m[i][c] = (m[i][c] + p - mulmod(f, m[row][c], p)) % p;
    }
    pivot_col_of_row[row] = static_cast<int>(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<u64>> basis;
  for (size_t col = 0; col < d; ++col) {
    if (is_pivot[col]) continue;
    std::vector<u64> v(d, 0);
    v[col] = 1;
    for (size_t r = 0; r < d; ++r) {
      if (pivot_col_of_row[r] < 0) break;
      v[static_cast<size_t>(pivot_col_of_row[r])] = (p - m[r][col]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Splitter {
  u64 p;
  size_t k;
  // subspaces of F_p^k, as lists of column vectors
  std::vector<std::vector<std::vector<u64>>> spaces;

  bool done() const {
    for (const auto& s : spaces)
      if (s.size() > 1) return false;
    return true;
  }

  // restrict the k x k matrix a to the span of s: solve s * m = a * s
  Mat restrict_to(const Mat& a, const std::vector<std::vector<u64>>& s) const {
    size_t d = s.size();
    // aug = [s | a*s] as k x 2d, then eliminate
    std::vector<std::vector<u64>> aug(k, std::vector<u64>(2 * d, 0));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < d; ++j) {
        aug[i][j] = s[j][i];
        u64 acc = 0;
        for (size_t t = 0; t < k; ++t) acc = (acc + mulmod(a[i][t], s[j][t], p)) % p;
        aug[i][d + j] = acc;
      }
    size_t row = 0;
    std::vector<size_t> pivot_rows;
    for (size_t col = 0; col < d && row < k; ++col) {
      size_t r = row;
      while (r < k && aug[r][col] == 0) ++r;
      if (r == k) throw std::logic_error("oracle: basis not independent");
      std::swap(aug[r], aug[row]);
      u64 inv = invmod(aug[row][col], p);
      for (size_t c = 0; c < 2 * d; ++c) aug[row][c] = mulmod(aug[row][c], inv, p);
      for (size_t i = 0; i < k; ++i) {
        if (i == row || aug[i][col] == 0) continue;
        u64 f = aug[i][col];
        for (size_t c = 0; c < 2 * d; ++c)
          aug[i][c] = (aug[i][c] + p - mulmod(f, aug[row][c], p)) % p;
      }
      pivot_rows.push_back(row);
      ++row;
    }
    Mat m(d, std::vector<u64>(d, 0));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) m[i][j] = aug[pivot_rows[i]][d + j];
    // rows without pivots must have zero residual or the span was not invariant
    for (size_t i = row; i < k; ++i)
      for (size_t j = 0; j < d; ++j)
        if (aug[i][d + j] != 0) throw std::logic_error("oracle: span not invariant");
    return m;
  }

  void split_by(const Mat& a) {
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& s : spaces) {
      size_t d = s.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      Mat m = restrict_to(a, s);
      std::vector<u64> cp = hessenberg_charpoly(m, p);
      size_t found = 0;
      for (u64 lam = 0; lam < p && found < d; ++lam) {
        if (poly_eval(cp, lam, p) != 0) continue;
        auto kb = kernel_basis(m, lam, p);
        if (kb.empty()) continue;
        std::vector<std::vector<u64>> sub;
        for (const auto& v : kb) {
          std::vector<u64> w(k, 0);
          for (size_t j = 0; j < d; ++j)
            if (v[j] != 0)
              for (size_t i = 0; i < k; ++i)
                w[i] = (w[i] + mulmod(v[j], s[j][i], p)) % p;
          sub.push_back(std::move(w));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw std::logic_error("oracle: eigenspaces did not fill subspace");
    }
    spaces = std::move(next);
  }
};

}  // namespace

CharacterTable character_table_oracle(const GroupView& g) {
  CharacterTable tab;
  tab.classes = conjugacy_classes(g);
  const ClassData& cd = tab.classes;
  size_t k = cd.reps.size();

  std::vector<long long> rep_order(k);
  long long exponent = 1;
  for (size_t l = 0; l < k; ++l) {
    rep_order[l] = element_order(g, cd.reps[l]);
    exponent = std::lcm(exponent, rep_order[l]);
  }
  tab.exponent = exponent;

  if (g.n == 1) {
    tab.rows = {{CycloNum::rational(Rat(1))}};
    tab.degrees = {1};
    return tab;
  }

  u64 p = static_cast<u64>(pick_prime(exponent, g.n, static_cast<long long>(k)));
  u64 theta = powmod(primitive_root(p), (p - 1) / static_cast<u64>(exponent), p);

  // power classes: pow_class[l][s] = class of rep(l)^s, s < order
  std::vector<std::vector<int>> pow_class(k);
  for (size_t l = 0; l < k; ++l) {
    long long x = 0;
    for (long long s = 0; s < rep_order[l]; ++s) {
      pow_class[l].push_back(cd.class_of[x]);
      x = g.mul(x, cd.reps[l]);
    }
  }

  Splitter sp{p, k, {}};
  {
    std::vector<std::vector<u64>> full;
    for (size_t i = 0; i < k; ++i) {
      std::vector<u64> e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    sp.spaces.push_back(std::move(full));
  }
  for (size_t i = 1; i < k && !sp.done(); ++i) {
    Mat a(k, std::vector<u64>(k, 0));
    for (size_t l = 0; l < k; ++l)
      for (long long x : cd.members[i]) {
        int j = cd.class_of[g.mul(g.inv(x), cd.reps[l])];
        a[static_cast<size_t>(j)][l] = (a[static_cast<size_t>(j)][l] + 1) % p;
      }
    sp.split_by(a);
  }
  if (!sp.done()) throw std::logic_error("oracle: class matrices failed to separate");

  // normalized central characters omega, then degrees and mod-p values
  struct RawRow {
    long long degree;
    std::vector<u64> values;  // chi(rep_l) mod p
  };
  std::vector<RawRow> raw;
  for (const auto& s : sp.spaces) {
    const std::vector<u64>& u = s[0];
    if (u[0] == 0) throw std::logic_error("oracle: eigenvector vanishes at identity");
    u64 norm = invmod(u[0], p);
    std::vector<u64> omega(k);
    for (size_t l = 0; l < k; ++l) omega[l] = mulmod(u[l], norm, p);
    u64 ssum = 0;
    for (size_t l = 0; l < k; ++l) {
      u64 t = mulmod(omega[l], omega[static_cast<size_t>(cd.inverse_class[l])], p);
      ssum = (ssum + mulmod(t, invmod(static_cast<u64>(cd.sizes[l] % p), p), p)) % p;
    }
    u64 d2 = mulmod(static_cast<u64>(g.n % p), invmod(ssum, p), p);
    long long degree = -1;
    for (u64 t = 1; 2 * t < p; ++t)
      if (mulmod(t, t, p) == d2) { degree = static_cast<long long>(t); break; }
    if (degree < 0) throw std::logic_error("oracle: degree not recovered");
    RawRow row;
    row.degree = degree;
    row.values.resize(k);
    for (size_t l = 0; l < k; ++l)
      row.values[l] = mulmod(mulmod(omega[l], static_cast<u64>(degree % p), p),
                             invmod(static_cast<u64>(cd.sizes[l] % p), p), p);
    raw.push_back(std::move(row));
  }
  std::sort(raw.begin(), raw.end(), [](const RawRow& a, const RawRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });

  // exact lift: chi(g) = sum_t c_t zeta_o^t with c_t the eigenvalue counts
  for (const RawRow& row : raw) {
    std::vector<CycloNum> exact(k);
    for (size_t l = 0; l < k; ++l) {
      long long o = rep_order[l];
      u64 theta_o = powmod(theta, static_cast<u64>(exponent / o), p);
      u64 inv_o = invmod(static_cast<u64>(o % p), p);
      CycloNum val;
      long long total = 0;
      for (long long t = 0; t < o; ++t) {
        u64 acc = 0;
        for (long long s = 0; s < o; ++s) {
          u64 term = mulmod(row.values[static_cast<size_t>(pow_class[l][s])],
                            powmod(theta_o, static_cast<u64>(((o - t) * s) % o), p), p);
          acc = (acc + term) % p;
        }
        u64 c_t = mulmod(acc, inv_o, p);
        if (c_t == 0) continue;
        if (c_t > static_cast<u64>(row.degree))
          throw std::logic_error("oracle: multiplicity lift out of range");
        total += static_cast<long long>(c_t);
        val = val + CycloNum::root_power(static_cast<int>(o), t) * Rat(c_t);
      }
      if (total != row.degree) throw std::logic_error("oracle: multiplicities do not sum to degree");
      exact[l] = val;
    }
    tab.rows.push_back(std::move(exact));
    tab.degrees.push_back(row.degree);
  }

  // exact first orthogonality before anyone trusts the table
  for (size_t i = 0; i < tab.rows.size(); ++i)
    for (size_t j = i; j < tab.rows.size(); ++j) {
      CycloNum ip = class_inner_product(cd, tab.rows[i], tab.rows[j], g.n);
      if (!(ip == CycloNum::rational(Rat(i == j ? 1 : 0))))
        throw std::logic_error("oracle: orthogonality self-check failed");
    }
  return tab;
}

}  // namespace dhckit
