#include <doctest.h>

#include <random>

#include "ncres/error.hpp"
#include "ncres/poly.hpp"

using namespace ncres;

namespace {

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), var(0, 5), exp(0, 2), count(0, 4);
  Poly p;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    for (int k = 0; k < 2; ++k) m.exp[var(rng)] += exp(rng);
    p += Poly::monomial(m, GaussRational(Rational(coeff(rng), 1 + exp(rng)), Rational(coeff(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("gaussian rationals") {
  const GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  CHECK((GaussRational(1) / i) == -i);
  CHECK(GaussRational(Rational(1, 2), Rational(3)).conj() == GaussRational(Rational(1, 2), Rational(-3)));
  CHECK(i.pow(4) == GaussRational(1));
  CHECK(GaussRational(Rational(2, 4)).re() == Rational(1, 2));
}

TEST_CASE("polynomial basics") {
  const Poly x = Poly::var(vars::xi(1)), y = Poly::var(vars::eta(1));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * x * y).deriv(vars::xi(1)) == Poly(2) * x * y);
  CHECK((x + y).pow(2).subs(vars::eta(1), Poly(1)) == x * x + Poly(2) * x + Poly(1));
  CHECK((x - x).is_zero());
  CHECK((x * x * y + x).degree(vars::xi(1)) == 2);
  auto parts = (x * x * y + x + y).split(vars::xi(1));
  CHECK(parts.size() == 3);
  CHECK(parts[0] == y);
  CHECK(parts[2] == y);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Poly() == a);
    CHECK(a * Poly(1) == a);
    CHECK((a - a).is_zero());
    // Leibniz rule
    const Var v = vars::xi(2);
    CHECK((a * b).deriv(v) == a.deriv(v) * b + a * b.deriv(v));
  }
}

TEST_CASE("derivatives commute on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng);
    CHECK(a.deriv(vars::xi(1)).deriv(vars::xi(3)) == a.deriv(vars::xi(3)).deriv(vars::xi(1)));
  }
}

TEST_CASE("evaluation") {
  const Poly p = Poly::var(vars::xi(1)) * GaussRational::i() + Poly(2);
  std::vector<std::complex<double>> pt(kMaxVars, 0.0);
  pt[vars::xi(1).index] = 3.0;
  CHECK(p.eval(pt) == std::complex<double>(2, 3));
}
