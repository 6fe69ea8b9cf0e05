#pragma once
// Generic finite-group utilities on elements encoded as 0..n-1 (identity 0):
// conjugacy classes by orbit refinement, and an independent character-table
// oracle (class-matrix eigenvector method over a prime field, with exact
// cyclotomic lifting). The oracle never touches the extension/induction
// machinery it is used to validate.

#include "dhckit/cyclo.hpp"

#include <functional>
#include <vector>

namespace dhckit {

struct GroupView {
  long long n = 1;
  std::function<long long(long long, long long)> mul;
  std::function<long long(long long)> inv;
  std::vector<long long> gens;  // generating set (identity allowed)
};

struct ClassData {
  std::vector<long long> reps;                 // class representatives, minimal first
  std::vector<long long> sizes;
  std::vector<int> class_of;                   // element -> class index
  std::vector<std::vector<long long>> members;
  std::vector<int> inverse_class;
};

ClassData conjugacy_classes(const GroupView& g);

struct CharacterTable {
  ClassData classes;
  long long exponent = 1;  // lcm of element orders; conductor of the values
  std::vector<std::vector<CycloNum>> rows;  // rows[i][l] = chi_i(reps[l])
  std::vector<long long> degrees;           // rows[i][0], as integers
};

// Exact character table of an arbitrary finite group (sizes in the thousands).
CharacterTable character_table_oracle(const GroupView& g);

// <f, h>_G = (1/|G|) sum_l |C_l| f(l) conj(h(l)) for class functions given by
// their values on class representatives.
CycloNum class_inner_product(const ClassData& cd, const std::vector<CycloNum>& f,
                             const std::vector<CycloNum>& h, long long order);

long long element_order(const GroupView& g, long long x);

// index of the trivial character (all values 1) in a table
int trivial_character_index(const CharacterTable& tab);

}  // namespace dhckit
