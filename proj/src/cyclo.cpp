#include "dhckit/cyclo.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dhckit {

namespace {

struct FieldData {
  int degree = 1;                          // phi(n)
  std::vector<Rat> phi;                    // cyclotomic polynomial, monic
  std::vector<std::vector<Rat>> zeta_pow;  // zeta^j on the power basis, j < n
};

// reduce poly modulo the monic polynomial phi, in place
void reduce_mod(std::vector<Rat>& a, const std::vector<Rat>& phi) {
  int d = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= d; --k) {
    Rat c = a[k];
    if (c == 0) continue;
    a[k] = 0;
    for (int i = 0; i < d; ++i) a[k - d + i] -= c * phi[i];
  }
  if (static_cast<int>(a.size()) > d) a.resize(d);
}

const FieldData& field(int n) {
  static std::map<int, FieldData> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  FieldData fd;
  IntPoly phi = cyclotomic(n);
  fd.degree = phi.degree();
  fd.phi.reserve(fd.degree + 1);
  for (const Int& c : phi.coeffs()) fd.phi.emplace_back(c);
  std::vector<Rat> cur{Rat(1)};
  for (int j = 0; j < n; ++j) {
    fd.zeta_pow.push_back(cur);
    cur.insert(cur.begin(), Rat(0));  // multiply by zeta
    reduce_mod(cur, fd.phi);
  }
  return cache.emplace(n, std::move(fd)).first->second;
}

}  // namespace

void CycloNum::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) n_ = 1;
}

CycloNum CycloNum::rational(const Rat& r) {
  CycloNum z;
  if (r != 0) z.c_.push_back(r);
  return z;
}

CycloNum CycloNum::root_power(int n, long long t) {
  if (n < 1) throw std::invalid_argument("root_power: order must be positive");
  long long j = ((t % n) + n) % n;
  CycloNum z;
  z.n_ = n;
  z.c_ = field(n).zeta_pow[static_cast<size_t>(j)];
  z.trim();
  return z;
}

Rat CycloNum::rat_value() const {
  if (!is_rational()) throw std::domain_error("rat_value: not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

CycloNum CycloNum::promoted(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("promoted: conductor must divide target");
  const FieldData& fd = field(m);
  std::vector<Rat> acc(fd.degree, Rat(0));
  int step = m / n_;  // zeta_n = zeta_m^step
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rat>& pw = fd.zeta_pow[(k * step) % m];
    for (size_t i = 0; i < pw.size(); ++i) acc[i] += c_[k] * pw[i];
  }
  CycloNum z;
  z.n_ = m;
  z.c_ = std::move(acc);
  z.trim();
  return z;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  int m = std::lcm(n_, o.n_);
  CycloNum a = promoted(m), b = o.promoted(m);
  a.n_ = m;  // promoting zero trims the conductor back down
  if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), Rat(0));
  for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.trim();
  return a;
}

CycloNum CycloNum::operator-() const {
  CycloNum z = *this;
  for (Rat& r : z.c_) r = -r;
  return z;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (is_zero() || o.is_zero()) return CycloNum();
  int m = std::lcm(n_, o.n_);
  CycloNum a = promoted(m), b = o.promoted(m);
  std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  reduce_mod(prod, field(m).phi);
  CycloNum z;
  z.n_ = m;
  z.c_ = std::move(prod);
  z.trim();
  return z;
}

CycloNum CycloNum::operator*(const Rat& r) const {
  if (r == 0) return CycloNum();
  CycloNum z = *this;
  for (Rat& c : z.c_) c *= r;
  return z;
}

CycloNum CycloNum::operator/(const Rat& r) const {
  if (r == 0) throw std::domain_error("division by zero");
  return *this * (Rat(1) / r);
}

CycloNum CycloNum::conj() const {
  if (is_rational()) return *this;
  const FieldData& fd = field(n_);
  std::vector<Rat> acc(fd.degree, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<Rat>& pw = fd.zeta_pow[(n_ - k) % n_];
    for (size_t i = 0; i < pw.size(); ++i) acc[i] += c_[k] * pw[i];
  }
  CycloNum z;
  z.n_ = n_;
  z.c_ = std::move(acc);
  z.trim();
  return z;
}

bool CycloNum::operator==(const CycloNum& o) const {
  int m = std::lcm(n_, o.n_);
  return promoted(m).c_ == o.promoted(m).c_;
}

std::string CycloNum::display() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat v = c_[k];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    bool unit_coeff = (v == 1 && k > 0);
    if (!unit_coeff) os << v;
    if (k > 0) {
      if (!unit_coeff) os << "*";
      os << "z" << n_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace dhckit
