#pragma once
// d-Harish-Chandra series and unipotent block shadows for GL_n(eps q):
// partitions of n grouped by delta-core, defect-group orders, E-split Levi
// torus shapes, the Coxeter-torus criterion, and the d <-> delta translation
// between the twisted and untwisted groups.

#include "dhckit/intpoly.hpp"
#include "dhckit/partition.hpp"

#include <string>
#include <vector>

namespace dhckit {

// order of eps*q mod ell.  For eps = + this is p.d; for eps = - the value
// delta satisfies d = delta, delta/2, 2*delta according as
// delta = 0, 2, odd (mod 4).
long long ennola_delta(const EllParams& p, Sign eps);

struct SeriesLabelA {
  PartitionShape core;
  int weight = 0;  // m with ambient = size(core) + m*delta
  int delta = 1;
  int ambient = 0;
  std::vector<PartitionShape> members;

  bool operator==(const SeriesLabelA&) const = default;
};

// all partitions of n grouped by delta-core; disjoint and exhaustive
std::vector<SeriesLabelA> series_partition_A(int n, int delta);

struct BlockShadowGL {
  SeriesLabelA label;
  Int defect_order;  // a power of ell
};

// one block per delta-core reachable from a partition of n; defect order is
// the ell-part of prod_{i<=m*delta} (q^i - eps^i)
std::vector<BlockShadowGL> unipotent_blocks_GL(int n, long long q, long long ell,
                                               Sign eps);

struct LeviShadowGL {
  int N = 0;                // rank of the linear/unitary factor
  std::vector<int> alphas;  // multiset of exponents, sorted increasing
  IntPoly torus_poly;       // prod_j (X^{d*ell^alpha(j)} - eps^(same))
  bool divided_torus_order = false;  // N = 0: |S^F| carries a 1/(q - eps)
};

// all decompositions n = N + d*sum_j ell^alpha(j), N descending
std::vector<LeviShadowGL> esplit_levi_shadows_GL(int n, long long q, long long ell,
                                                 Sign eps);

struct CoxeterCheck {
  bool holds = false;
  std::string witness;  // the failing clause, or the passing arithmetic
};

// ell | (q - eps) and n | (q - eps)_ell: when the Coxeter torus of
// SL_n(eps q) has central ell-part
CoxeterCheck coxeter_condition_check(long long n, long long q, long long ell,
                                     Sign eps);

// unique member of minimal hook_degree_valuation: the core's beta-set with
// the top entry raised by weight*delta
PartitionShape minimal_series_element_A(const SeriesLabelA& label);

}  // namespace dhckit
