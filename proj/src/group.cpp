#include "dhckit/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dhckit {

ClassData conjugacy_classes(const GroupView& g) {
  ClassData cd;
  cd.class_of.assign(static_cast<size_t>(g.n), -1);
  for (long long x = 0; x < g.n; ++x) {
    if (cd.class_of[x] != -1) continue;
    int id = static_cast<int>(cd.reps.size());
    std::vector<long long> orbit{x};
    cd.class_of[x] = id;
    for (size_t head = 0; head < orbit.size(); ++head) {
      long long y = orbit[head];
      for (long long s : g.gens) {
        long long z = g.mul(s, g.mul(y, g.inv(s)));
        if (cd.class_of[z] == -1) {
          cd.class_of[z] = id;
          orbit.push_back(z);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cd.reps.push_back(orbit[0]);
    cd.sizes.push_back(static_cast<long long>(orbit.size()));
    cd.members.push_back(std::move(orbit));
  }
  cd.inverse_class.reserve(cd.reps.size());
  for (long long r : cd.reps) cd.inverse_class.push_back(cd.class_of[g.inv(r)]);
  return cd;
}

long long element_order(const GroupView& g, long long x) {
  long long ord = 1;
  long long y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++ord;
    if (ord > g.n) throw std::logic_error("element_order: not a group");
  }
  return ord;
}

CycloNum class_inner_product(const ClassData& cd, const std::vector<CycloNum>& f,
                             const std::vector<CycloNum>& h, long long order) {
  if (f.size() != cd.reps.size() || h.size() != cd.reps.size())
    throw std::invalid_argument("class_inner_product: size mismatch");
  CycloNum acc;
  for (size_t l = 0; l < f.size(); ++l)
    acc = acc + f[l] * h[l].conj() * Rat(cd.sizes[l]);
  return acc / Rat(order);
}

int trivial_character_index(const CharacterTable& tab) {
  CycloNum one = CycloNum::rational(Rat(1));
  for (size_t i = 0; i < tab.rows.size(); ++i) {
    bool all_one = true;
    for (const CycloNum& v : tab.rows[i])
      if (!(v == one)) { all_one = false; break; }
    if (all_one) return static_cast<int>(i);
  }
  throw std::logic_error("trivial character missing from table");
}

}  // namespace dhckit
