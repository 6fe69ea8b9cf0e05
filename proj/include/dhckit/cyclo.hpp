#pragma once
// Exact arithmetic in cyclotomic fields: an element of Q(zeta_N) is stored on
// the power basis 1, zeta, ..., zeta^{phi(N)-1}, reduced modulo the N-th
// cyclotomic polynomial. Mixed conductors promote to the lcm on the fly.

#include "dhckit/intpoly.hpp"

#include <string>
#include <vector>

namespace dhckit {

class CycloNum {
 public:
  CycloNum() : n_(1) {}  // zero
  static CycloNum rational(const Rat& r);
  static CycloNum root_power(int n, long long t);  // zeta_n^t

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rat rat_value() const;  // throws when not rational

  CycloNum promoted(int m) const;  // embed into Q(zeta_m), conductor | m

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator-() const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator*(const Rat& r) const;
  CycloNum operator/(const Rat& r) const;
  CycloNum conj() const;  // zeta -> zeta^{-1}
  bool operator==(const CycloNum& o) const;

  std::string display() const;  // "1/2 + z8^2 - z8^3"

 private:
  int n_;                // conductor
  std::vector<Rat> c_;   // power basis, no trailing zeros; empty = 0
  void trim();
};

}  // namespace dhckit
