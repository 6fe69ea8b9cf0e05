#include "dhckit/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace dhckit {

PartitionShape::PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("negative part in partition");
  std::sort(parts_.begin(), parts_.end());
  while (!parts_.empty() && parts_.front() == 0) parts_.erase(parts_.begin());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::vector<int> PartitionShape::parts_decreasing() const {
  std::vector<int> v(parts_.rbegin(), parts_.rend());
  return v;
}

PartitionShape PartitionShape::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.back(), 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) conj[i] += 1;
  return PartitionShape(std::move(conj));
}

std::string PartitionShape::display() const {
  std::ostringstream out;
  out << "(";
  auto dec = parts_decreasing();
  for (size_t i = 0; i < dec.size(); ++i) {
    if (i) out << ",";
    out << dec[i];
  }
  out << ")";
  return out.str();
}

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) throw std::invalid_argument("negative beta-set entry");
    if (i > 0 && entries_[i] == entries_[i - 1])
      throw std::invalid_argument("duplicate beta-set entry");
  }
}

bool BetaSet::contains(int b) const {
  return std::binary_search(entries_.begin(), entries_.end(), b);
}

PartitionShape BetaSet::partition() const {
  std::vector<int> parts(entries_.size());
  for (size_t j = 0; j < entries_.size(); ++j)
    parts[j] = entries_[j] - static_cast<int>(j);
  return PartitionShape(std::move(parts));
}

BetaSet BetaSet::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be non-negative");
  std::vector<int> v;
  for (int i = 0; i < k; ++i) v.push_back(i);
  for (int e : entries_) v.push_back(e + k);
  return BetaSet(std::move(v));
}

BetaSet BetaSet::canonical() const {
  size_t k = 0;
  while (k < entries_.size() && entries_[k] == static_cast<int>(k)) ++k;
  std::vector<int> v(entries_.begin() + k, entries_.end());
  for (int& e : v) e -= static_cast<int>(k);
  return BetaSet(std::move(v));
}

bool BetaSet::shift_equivalent(const BetaSet& o) const {
  return canonical() == o.canonical();
}

BetaSet beta_of(const PartitionShape& lambda, int m) {
  if (m < lambda.rows())
    throw std::invalid_argument("beta-set length smaller than number of parts");
  std::vector<int> padded(m - lambda.rows(), 0);
  padded.insert(padded.end(), lambda.parts().begin(), lambda.parts().end());
  std::vector<int> entries(m);
  for (int j = 0; j < m; ++j) entries[j] = padded[j] + j;
  return BetaSet(std::move(entries));
}

std::vector<int> removable_hooks(const BetaSet& beta, int d) {
  std::vector<int> out;
  for (int b : beta.entries())
    if (b >= d && !beta.contains(b - d)) out.push_back(b);
  return out;
}

int hook_leg_length(const BetaSet& beta, int b, int d) {
  int leg = 0;
  for (int e : beta.entries())
    if (e > b - d && e < b) ++leg;
  return leg;
}

BetaSet remove_hook(const BetaSet& beta, int b, int d) {
  if (d < 1) throw std::invalid_argument("hook length must be positive");
  if (!beta.contains(b) || b < d || beta.contains(b - d))
    throw std::invalid_argument("no such hook");
  std::vector<int> v;
  for (int e : beta.entries()) v.push_back(e == b ? b - d : e);
  return BetaSet(std::move(v));
}

PartitionShape d_core(const PartitionShape& lambda, int d) {
  if (d < 1) throw std::invalid_argument("core length must be positive");
  BetaSet beta = beta_of(lambda, std::max(lambda.rows(), 1));
  while (true) {
    auto hooks = removable_hooks(beta, d);
    if (hooks.empty()) break;
    beta = remove_hook(beta, hooks.back(), d);
  }
  return beta.partition();
}

namespace {

Int signed_paths(const BetaSet& beta, const std::vector<int>& target, int d,
                 std::map<std::vector<int>, Int>& memo) {
  if (beta.entries() == target) return 1;
  auto it = memo.find(beta.entries());
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (int b : removable_hooks(beta, d)) {
    Int sub = signed_paths(remove_hook(beta, b, d), target, d, memo);
    if (hook_leg_length(beta, b, d) % 2 != 0) sub = -sub;
    total += sub;
  }
  memo.emplace(beta.entries(), total);
  return total;
}

bool witness_dfs(const BetaSet& beta, const std::vector<int>& target, int d,
                 std::vector<int>& steps) {
  if (beta.entries() == target) return true;
  long long here = beta.partition().size();
  long long want = BetaSet(target).partition().size();
  if (here <= want) return false;
  for (int b : removable_hooks(beta, d)) {
    steps.push_back(b);
    if (witness_dfs(remove_hook(beta, b, d), target, d, steps)) return true;
    steps.pop_back();
  }
  return false;
}

}  // namespace

SignedPathCount signed_removal_count(const PartitionShape& lambda,
                                     const PartitionShape& kappa, int d) {
  if (!(d_core(kappa, d) == kappa))
    throw std::invalid_argument("target is not a d-core");
  long long diff = lambda.size() - kappa.size();
  if (diff < 0 || diff % d != 0)
    throw std::invalid_argument("size difference not a multiple of d");
  int m = std::max({lambda.rows(), kappa.rows(), 1});
  BetaSet start = beta_of(lambda, m);
  BetaSet target = beta_of(kappa, m);
  std::map<std::vector<int>, Int> memo;
  SignedPathCount out{signed_paths(start, target.entries(), d, memo), std::nullopt};
  std::vector<int> steps;
  if (witness_dfs(start, target.entries(), d, steps)) out.witness_path = steps;
  return out;
}

namespace {

Int mn_rec(const BetaSet& beta, const std::vector<int>& cycles, size_t idx,
           std::map<std::pair<std::vector<int>, size_t>, Int>& memo) {
  if (idx == cycles.size()) return 1;
  auto key = std::make_pair(beta.entries(), idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int t = cycles[idx];
  Int total = 0;
  for (int b : removable_hooks(beta, t)) {
    Int sub = mn_rec(remove_hook(beta, b, t), cycles, idx + 1, memo);
    if (hook_leg_length(beta, b, t) % 2 != 0) sub = -sub;
    total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int mn_value(const PartitionShape& lambda, const PartitionShape& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("partition and cycle type have different sizes");
  if (lambda.empty()) return 1;
  // consume cycles largest first
  std::vector<int> cycles = mu.parts_decreasing();
  BetaSet beta = beta_of(lambda, lambda.rows());
  std::map<std::pair<std::vector<int>, size_t>, Int> memo;
  return mn_rec(beta, cycles, 0, memo);
}

long long v_valuation(const BetaSet& beta) {
  const auto& e = beta.entries();
  long long m = beta.m();
  long long v = 0;
  for (long long j = 1; j <= m - 1; ++j) v += (m - j) * (e[j - 1] + 1);
  for (long long j = 1; j <= m - 2; ++j) v -= (m - j) * (m - j - 1) / 2;
  return v;
}

long long hook_degree_valuation(const PartitionShape& lambda) {
  auto dec = lambda.parts_decreasing();
  long long n = 0;
  for (size_t i = 0; i < dec.size(); ++i) n += static_cast<long long>(i) * dec[i];
  return n;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<PartitionShape>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PartitionShape> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<PartitionShape> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dhckit
