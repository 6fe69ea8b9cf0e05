#pragma once
// Exact integer polynomial arithmetic, cyclotomic polynomials, generic
// orders of general linear groups, and the arithmetic of the set
// E = { n : prime-to-ell part of n equals d }.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhckit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// epsilon in GL_n(eps q): plus = untwisted, minus = unitary twist
enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline Sign sign_pow(Sign s, long long e) {
  return (s == Sign::plus || e % 2 == 0) ? Sign::plus : Sign::minus;
}
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
Sign sign_parse(const std::string& s);

class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(int deg, Int c = 1);
  static IntPoly x_power_minus(int k, Sign eps);  // X^k - eps^k

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const;
  Int leading() const;
  Int eval(const Int& x) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const = default;

  // quotient when the division is exact over Z, nullopt otherwise
  static std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

  std::string display() const;  // "X^4 - X^3 + 1"

 private:
  std::vector<Int> c_;  // lowest degree first, no trailing zeros
};

IntPoly cyclotomic(int a);

long long order_mod(long long q, long long ell);

bool is_prime(long long n);
bool is_prime_power(long long n);

struct EllParams {
  long long q;    // prime power >= 2
  long long ell;  // odd prime not dividing q
  long long d;    // order of q mod ell

  EllParams(long long q_, long long ell_);
};

bool in_E(long long n, const EllParams& p);

// full polynomial order X^{n(n-1)/2} * prod_{i<=n} (X^i - eps^i)
IntPoly gl_order(int n, Sign eps);
// prime-to-p part prod_{i<=n} (X^i - eps^i)
IntPoly gl_order_pprime(int n, Sign eps);

// largest power of ell dividing value, as a number (ell_part(45,3) = 9)
Int ell_part(const Int& value, long long ell);
int ell_valuation(const Int& value, long long ell);

int phi_multiplicity(const IntPoly& poly, int a);

// factorization into X-power and cyclotomics, with whatever remains
struct CycloFactorization {
  int x_power = 0;
  std::map<int, int> phi_mult;  // a -> multiplicity of phi_a
  IntPoly cofactor;             // what is left (constant for group orders)
};
CycloFactorization cyclotomic_factorization(const IntPoly& poly);
std::string factored_display(const IntPoly& poly);  // "X^3*phi1^2*phi2"

}  // namespace dhckit
