#pragma once
// Partition and beta-set calculus: hooks, d-cores, signed removal paths,
// Murnaghan-Nakayama character values of symmetric groups, and the
// q-exponent valuation attached to a beta-set.

#include "dhckit/intpoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dhckit {

class PartitionShape {
 public:
  PartitionShape() = default;  // empty partition
  explicit PartitionShape(std::vector<int> parts);

  long long size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // weakly increasing, no zero parts
  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> parts_decreasing() const;
  PartitionShape conjugate() const;

  bool operator==(const PartitionShape& o) const = default;
  bool operator<(const PartitionShape& o) const { return parts_ < o.parts_; }

  std::string display() const;  // "(2,1)" decreasing convention

 private:
  std::vector<int> parts_;
  long long size_ = 0;
};

class BetaSet {
 public:
  explicit BetaSet(std::vector<int> entries);

  int m() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  bool contains(int b) const;

  PartitionShape partition() const;  // lambda_j = b_j - (j-1)
  BetaSet shifted(int k) const;      // {0..k-1} together with entries+k
  BetaSet canonical() const;         // reverse shifts as far as possible
  bool shift_equivalent(const BetaSet& o) const;

  bool operator==(const BetaSet& o) const = default;

 private:
  std::vector<int> entries_;  // strictly increasing, >= 0
};

// entries are { lambda_j + j - 1 } after zero-padding lambda to length m
BetaSet beta_of(const PartitionShape& lambda, int m);

// entries b with b >= d and b - d not an entry
std::vector<int> removable_hooks(const BetaSet& beta, int d);
// number of entries strictly between b - d and b (the leg length)
int hook_leg_length(const BetaSet& beta, int b, int d);
BetaSet remove_hook(const BetaSet& beta, int b, int d);

PartitionShape d_core(const PartitionShape& lambda, int d);

struct SignedPathCount {
  Int value;
  // entries removed, in order, when a path exists
  std::optional<std::vector<int>> witness_path;
};

// signed count of ordered d-hook removal sequences lambda -> kappa, each
// step weighted (-1)^{leg length}; the multiplicity shadow of the series
// decomposition (zero exactly when the d-cores differ)
SignedPathCount signed_removal_count(const PartitionShape& lambda,
                                     const PartitionShape& kappa, int d);

// symmetric group character value chi^lambda on the class of cycle type mu
Int mn_value(const PartitionShape& lambda, const PartitionShape& mu);

// q-exponent of a beta-set: evaluates the 1-based formula
// sum_{j<m} (m-j) b_j - sum_{j<m-1} C(m-j,2) on entries shifted up by one
long long v_valuation(const BetaSet& beta);

// n(lambda) = sum_i (i-1) lambda_i over decreasing parts; the q-exponent of
// the unipotent character degree, used as the independent padding oracle
long long hook_degree_valuation(const PartitionShape& lambda);

std::vector<PartitionShape> partitions_of(int n);

}  // namespace dhckit
