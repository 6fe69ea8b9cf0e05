#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhckit/intpoly.hpp"

using namespace dhckit;

namespace {

// independent naive oracle: dense int64 polynomials, schoolbook arithmetic
using Naive = std::vector<long long>;

Naive naive_mul(const Naive& a, const Naive& b) {
  Naive r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

// exact long division, monic divisor; asserts exactness
Naive naive_div(Naive num, const Naive& den) {
  Naive q(num.size() - den.size() + 1, 0);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    long long c = num[k + den.size() - 1];
    q[k] = c;
    for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  for (long long c : num) REQUIRE(c == 0);
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

Naive naive_cyclotomic(int a) {
  Naive result{-1, 1};  // phi_1
  if (a == 1) return result;
  Naive xa_minus_1(a + 1, 0);
  xa_minus_1[0] = -1;
  xa_minus_1[a] = 1;
  Naive prod{1};
  for (int e = 1; e < a; ++e)
    if (a % e == 0) prod = naive_mul(prod, naive_cyclotomic(e));
  return naive_div(xa_minus_1, prod);
}

IntPoly from_naive(const Naive& n) {
  std::vector<Int> c(n.begin(), n.end());
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials match frozen values and the naive oracle") {
  CHECK(cyclotomic(1) == IntPoly({-1, 1}));
  CHECK(cyclotomic(2) == IntPoly({1, 1}));
  CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));  // X^2 - X + 1
  CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
  for (int a = 1; a <= 40; ++a) CHECK(cyclotomic(a) == from_naive(naive_cyclotomic(a)));
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("product of cyclotomics over divisors gives X^a - 1") {
  for (int a = 1; a <= 40; ++a) {
    IntPoly prod = IntPoly::constant(1);
    for (int e = 1; e <= a; ++e)
      if (a % e == 0) prod = prod * cyclotomic(e);
    CHECK(prod == IntPoly::x_power_minus(a, Sign::plus));
  }
}

TEST_CASE("order_mod") {
  CHECK(order_mod(2, 7) == 3);
  CHECK(order_mod(8, 7) == 1);
  CHECK(order_mod(2, 5) == 4);
  CHECK(order_mod(3, 7) == 6);
  CHECK_THROWS_AS(order_mod(14, 7), std::invalid_argument);
}

TEST_CASE("EllParams validates and computes the order") {
  EllParams p(2, 7);
  CHECK(p.d == 3);
  CHECK((7 - 1) % p.d == 0);
  CHECK_THROWS_AS(EllParams(6, 5), std::invalid_argument);   // 6 not a prime power
  CHECK_THROWS_AS(EllParams(4, 2), std::invalid_argument);   // ell must be odd
  CHECK_THROWS_AS(EllParams(9, 3), std::invalid_argument);   // ell | q
}

TEST_CASE("in_E recognizes d times powers of ell") {
  EllParams p(2, 7);  // d = 3
  CHECK(in_E(3, p));
  CHECK_FALSE(in_E(6, p));
  CHECK(in_E(21, p));
  CHECK(in_E(147, p));  // 3 * 7^2
  CHECK_FALSE(in_E(7, p));
}

TEST_CASE("gl_order expands the product definition") {
  CHECK(gl_order(1, Sign::plus) == IntPoly({-1, 1}));
  // X (X-1)(X^2-1) = X^4 - X^3 - X^2 + X
  CHECK(gl_order(2, Sign::plus) == IntPoly({0, 1, -1, -1, 1}));
  // X (X+1)(X^2-1) = X^4 + X^3 - X^2 - X
  CHECK(gl_order(2, Sign::minus) == IntPoly({0, -1, -1, 1, 1}));
  CHECK(gl_order_pprime(2, Sign::plus) == IntPoly({1, -1, -1, 1}));
  // value sanity: |GL_2(2)| = 6, |U_2(2)| = (2+1)(4-1)*2 = 18
  CHECK(gl_order(2, Sign::plus).eval(2) == 6);
  CHECK(gl_order(2, Sign::minus).eval(2) == 18);
}

TEST_CASE("ell_part and valuation") {
  CHECK(ell_part(45, 3) == 9);
  CHECK(ell_part(7, 3) == 1);
  Int prod = 1;
  for (int i = 1; i <= 4; ++i) prod *= (Int(1) << i) - 1;
  CHECK(prod == 315);
  CHECK(ell_part(prod, 3) == 9);
  CHECK(ell_valuation(prod, 3) == 2);
  CHECK_THROWS_AS(ell_part(Int(0), 3), std::invalid_argument);
}

TEST_CASE("phi_multiplicity by exact division") {
  CHECK(phi_multiplicity(IntPoly({-1, 0, 1}), 2) == 1);  // X^2 - 1
  IntPoly pprime = gl_order_pprime(4, Sign::plus);
  CHECK(phi_multiplicity(pprime, 1) == 4);
  CHECK(phi_multiplicity(pprime, 3) == 1);
  CHECK(phi_multiplicity(pprime, 2) == 2);
  CHECK(phi_multiplicity(pprime, 4) == 1);
  CHECK(phi_multiplicity(pprime, 5) == 0);
  CHECK_THROWS_AS(phi_multiplicity(IntPoly(), 1), std::invalid_argument);
}

TEST_CASE("divisibility law: ell | phi_a(q) iff a in E (small slice)") {
  for (long long q : {2, 3, 4}) {
    for (long long ell : {3, 5, 7, 11}) {
      if (q % ell == 0) continue;
      EllParams p(q, ell);
      for (int a = 1; a <= 20; ++a) {
        bool divides = cyclotomic(a).eval(q) % ell == 0;
        CHECK(divides == in_E(a, p));
      }
    }
  }
}

TEST_CASE("ell part of a group order is the product over factors in E") {
  for (int n : {3, 5, 8}) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      IntPoly order = gl_order(n, eps);
      auto fact = cyclotomic_factorization(order);
      CHECK(fact.cofactor == IntPoly::constant(1));
      for (long long q : {2, 3, 5}) {
        for (long long ell : {3, 5, 7}) {
          if (q % ell == 0) continue;
          EllParams p(q, ell);
          Int whole = ell_part(order.eval(q), ell);
          Int per_factor = 1;
          for (const auto& [a, mult] : fact.phi_mult) {
            Int piece = ell_part(cyclotomic(a).eval(q), ell);
            if (!in_E(a, p)) CHECK(piece == 1);
            for (int t = 0; t < mult; ++t) per_factor *= piece;
          }
          CHECK(whole == per_factor);
        }
      }
    }
  }
}

TEST_CASE("factored display") {
  CHECK(factored_display(gl_order(2, Sign::plus)) == "X*phi1^2*phi2");
  CHECK(factored_display(IntPoly::monomial(3)) == "X^3");
  CHECK(factored_display(IntPoly({1, -1, 1})) == "phi6");
}

TEST_CASE("polynomial arithmetic basics") {
  IntPoly a({1, 2, 1});   // (X+1)^2
  IntPoly b({1, 1});      // X+1
  CHECK(*IntPoly::divide_exact(a, b) == b);
  CHECK_FALSE(IntPoly::divide_exact(IntPoly({1, 0, 1}), b).has_value());
  CHECK((b * b) == a);
  CHECK((a - a).is_zero());
  CHECK(a.display() == "X^2 + 2*X + 1");
  CHECK(IntPoly({-1, 1}).display() == "X - 1");
  CHECK(IntPoly().display() == "0");
}
