#include "dhckit/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace dhckit {

Sign sign_parse(const std::string& s) {
  if (s == "+" || s == "plus" || s == "1" || s == "+1") return Sign::plus;
  if (s == "-" || s == "minus" || s == "-1") return Sign::minus;
  throw std::invalid_argument("sign must be one of +, -, plus, minus");
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(int deg, Int c) {
  std::vector<Int> v(deg + 1, Int(0));
  v[deg] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_power_minus(int k, Sign eps) {
  std::vector<Int> v(k + 1, Int(0));
  v[0] = -sign_value(sign_pow(eps, k));
  v[k] = 1;
  return IntPoly(std::move(v));
}

Int IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Int IntPoly::leading() const {
  if (is_zero()) return 0;
  return c_.back();
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Int> rem = num.c_;
  std::vector<Int> quot(num.degree() - den.degree() + 1, Int(0));
  const Int& lead = den.c_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Int top = rem[k + den.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int q = top / lead;
    quot[k] = q;
    for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= q * den.c_[i];
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

std::string IntPoly::display() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Int c = c_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || k == 0) out << a.str();
    if (k > 0) {
      if (a != 1) out << "*";
      out << "X";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

namespace {

void cyclotomic_into(int a, std::map<int, IntPoly>& memo) {
  if (memo.count(a)) return;
  if (a == 1) {
    memo.emplace(1, IntPoly({-1, 1}));
    return;
  }
  IntPoly prod = IntPoly::constant(1);
  for (int e = 1; e < a; ++e) {
    if (a % e != 0) continue;
    cyclotomic_into(e, memo);
    prod = prod * memo.at(e);
  }
  auto q = IntPoly::divide_exact(IntPoly::x_power_minus(a, Sign::plus), prod);
  if (!q) throw std::logic_error("cyclotomic division not exact");
  memo.emplace(a, std::move(*q));
}

}  // namespace

IntPoly cyclotomic(int a) {
  if (a < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  std::map<int, IntPoly> memo;
  cyclotomic_into(a, memo);
  return memo.at(a);
}

long long order_mod(long long q, long long ell) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (ell < 2) throw std::invalid_argument("modulus must be >= 2");
  long long r = q % ell;
  if (r == 0) throw std::invalid_argument("ell divides q: order undefined");
  long long cur = r, d = 1;
  while (cur != 1) {
    cur = (cur * r) % ell;
    ++d;
    if (d > ell) throw std::logic_error("order computation did not terminate");
  }
  return d;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_prime_power(long long n) {
  if (n < 2) return false;
  long long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;  // prime
  while (n % p == 0) n /= p;
  return n == 1;
}

EllParams::EllParams(long long q_, long long ell_) : q(q_), ell(ell_) {
  if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power >= 2");
  if (!is_prime(ell) || ell == 2) throw std::invalid_argument("ell must be an odd prime");
  if (q % ell == 0) throw std::invalid_argument("ell must not divide q");
  d = order_mod(q, ell);
}

bool in_E(long long n, const EllParams& p) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  long long m = n;
  while (m % p.ell == 0) m /= p.ell;
  return m == p.d;
}

IntPoly gl_order_pprime(int n, Sign eps) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  IntPoly prod = IntPoly::constant(1);
  for (int i = 1; i <= n; ++i) prod = prod * IntPoly::x_power_minus(i, eps);
  return prod;
}

IntPoly gl_order(int n, Sign eps) {
  return IntPoly::monomial(n * (n - 1) / 2) * gl_order_pprime(n, eps);
}

Int ell_part(const Int& value, long long ell) {
  if (value == 0) throw std::invalid_argument("ell_part of zero");
  if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
  Int v = abs(value), part = 1;
  while (v % ell == 0) {
    v /= ell;
    part *= ell;
  }
  return part;
}

int ell_valuation(const Int& value, long long ell) {
  if (value == 0) throw std::invalid_argument("ell_valuation of zero");
  Int v = abs(value);
  int k = 0;
  while (v % ell == 0) {
    v /= ell;
    ++k;
  }
  return k;
}

int phi_multiplicity(const IntPoly& poly, int a) {
  if (poly.is_zero()) throw std::invalid_argument("phi_multiplicity of zero polynomial");
  IntPoly phi = cyclotomic(a);
  IntPoly cur = poly;
  int mult = 0;
  while (true) {
    auto q = IntPoly::divide_exact(cur, phi);
    if (!q) return mult;
    cur = std::move(*q);
    ++mult;
  }
}

CycloFactorization cyclotomic_factorization(const IntPoly& poly) {
  if (poly.is_zero()) throw std::invalid_argument("factorization of zero polynomial");
  CycloFactorization f;
  IntPoly cur = poly;
  while (cur.coeff(0) == 0) {
    auto q = IntPoly::divide_exact(cur, IntPoly::monomial(1));
    cur = std::move(*q);
    ++f.x_power;
  }
  // phi(a) >= sqrt(a/2), so indices with deg(phi_a) <= D are below 2 D^2 + 1
  auto totient = [](int a) {
    int t = a;
    for (int p = 2; p * p <= a; ++p) {
      if (a % p) continue;
      t -= t / p;
      while (a % p == 0) a /= p;
    }
    if (a > 1) t -= t / a;
    return t;
  };
  const long long max_a = 2LL * cur.degree() * cur.degree() + 1;
  for (long long a = 1; a <= max_a && cur.degree() >= 1; ++a) {
    if (totient(static_cast<int>(a)) > cur.degree()) continue;
    IntPoly phi = cyclotomic(static_cast<int>(a));
    while (true) {
      auto q = IntPoly::divide_exact(cur, phi);
      if (!q) break;
      cur = std::move(*q);
      f.phi_mult[static_cast<int>(a)] += 1;
    }
  }
  f.cofactor = cur;
  return f;
}

std::string factored_display(const IntPoly& poly) {
  CycloFactorization f = cyclotomic_factorization(poly);
  std::ostringstream out;
  bool first = true;
  auto sep = [&]() {
    if (!first) out << "*";
    first = false;
  };
  if (f.x_power > 0) {
    sep();
    out << "X";
    if (f.x_power > 1) out << "^" << f.x_power;
  }
  for (const auto& [a, m] : f.phi_mult) {
    sep();
    out << "phi" << a;
    if (m > 1) out << "^" << m;
  }
  if (f.cofactor.degree() > 0 || f.cofactor.leading() != 1 || first) {
    sep();
    out << "(" << f.cofactor.display() << ")";
  }
  return out.str();
}

}  // namespace dhckit
