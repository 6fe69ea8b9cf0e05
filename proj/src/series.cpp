#include "dhckit/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dhckit {

long long ennola_delta(const EllParams& p, Sign eps) {
  if (eps == Sign::plus) return p.d;
  long long r = ((-p.q) % p.ell + p.ell) % p.ell;
  if (r == 1) return 1;
  return order_mod(r, p.ell);
}

std::vector<SeriesLabelA> series_partition_A(int n, int delta) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (delta < 1) throw std::invalid_argument("delta must be >= 1");
  std::map<PartitionShape, std::vector<PartitionShape>> by_core;
  for (const auto& lambda : partitions_of(n))
    by_core[d_core(lambda, delta)].push_back(lambda);
  std::vector<SeriesLabelA> out;
  for (auto& [core, members] : by_core) {
    std::sort(members.begin(), members.end());
    SeriesLabelA label;
    label.weight = static_cast<int>((n - core.size()) / delta);
    label.core = core;
    label.delta = delta;
    label.ambient = n;
    label.members = std::move(members);
    out.push_back(std::move(label));
  }
  return out;
}

std::vector<BlockShadowGL> unipotent_blocks_GL(int n, long long q, long long ell,
                                               Sign eps) {
  EllParams p(q, ell);
  long long delta = ennola_delta(p, eps);
  std::vector<BlockShadowGL> out;
  for (auto& label : series_partition_A(n, static_cast<int>(delta))) {
    Int weight_part = 1;
    for (long long i = 1; i <= label.weight * delta; ++i) {
      Int term = 1;
      for (long long k = 0; k < i; ++k) term *= q;
      term -= (i % 2 == 0 ? 1 : sign_value(eps));
      weight_part *= term;
    }
    out.push_back({std::move(label), ell_part(weight_part, ell)});
  }
  return out;
}

namespace {

void alpha_multisets(long long budget, long long power, long long ell,
                     std::vector<int>& cur, int alpha,
                     std::vector<std::vector<int>>& out) {
  if (power > budget) {
    out.push_back(cur);
    return;
  }
  size_t base = cur.size();
  for (long long used = 0; used <= budget; used += power) {
    if (used > 0) cur.push_back(alpha);
    alpha_multisets(budget - used, power * ell, ell, cur, alpha + 1, out);
  }
  cur.resize(base);
}

}  // namespace

std::vector<LeviShadowGL> esplit_levi_shadows_GL(int n, long long q, long long ell,
                                                 Sign eps) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  EllParams p(q, ell);
  long long d = ennola_delta(p, eps);
  std::vector<std::vector<int>> multisets;
  std::vector<int> cur;
  alpha_multisets(n / d, 1, ell, cur, 0, multisets);
  std::vector<LeviShadowGL> out;
  for (auto& alphas : multisets) {
    LeviShadowGL shadow;
    long long total = 0;
    IntPoly torus = IntPoly::constant(1);
    for (int a : alphas) {
      long long epow = 1;
      for (int i = 0; i < a; ++i) epow *= ell;
      total += epow;
      torus = torus * IntPoly::x_power_minus(static_cast<int>(d * epow), eps);
    }
    shadow.N = static_cast<int>(n - d * total);
    shadow.alphas = std::move(alphas);
    shadow.torus_poly = std::move(torus);
    shadow.divided_torus_order = (shadow.N == 0);
    out.push_back(std::move(shadow));
  }
  std::sort(out.begin(), out.end(), [](const LeviShadowGL& a, const LeviShadowGL& b) {
    if (a.N != b.N) return a.N > b.N;
    return a.alphas < b.alphas;
  });
  return out;
}

CoxeterCheck coxeter_condition_check(long long n, long long q, long long ell,
                                     Sign eps) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (!is_prime(ell) || ell == 2) throw std::invalid_argument("ell must be an odd prime");
  if (q % ell == 0) throw std::invalid_argument("ell must not divide q");
  long long t = q - sign_value(eps);
  std::ostringstream w;
  if (t % ell != 0) {
    w << ell << " does not divide q - eps = " << t;
    return {false, w.str()};
  }
  Int lp = ell_part(Int(t), ell);
  if (lp % n != 0) {
    w << "n = " << n << " does not divide the " << ell << "-part " << lp
      << " of q - eps = " << t;
    return {false, w.str()};
  }
  w << ell << " divides q - eps = " << t << " and n = " << n << " divides its "
    << ell << "-part " << lp;
  return {true, w.str()};
}

PartitionShape minimal_series_element_A(const SeriesLabelA& label) {
  if (label.weight == 0) return label.core;
  BetaSet beta = beta_of(label.core, std::max(label.core.rows(), 1));
  std::vector<int> entries = beta.entries();
  entries.back() += label.weight * label.delta;
  return BetaSet(std::move(entries)).partition();
}

}  // namespace dhckit
