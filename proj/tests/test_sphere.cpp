#include <doctest.h>

#include "ncres/error.hpp"
#include "ncres/sphere_quadrature.hpp"

using namespace ncres;

namespace {
const Var sv[] = {vars::xi(1), vars::xi(2), vars::xi(3)};
ExactScalar pi_times(Rational q, int h1 = 0) { return ExactScalar::term(q, 1, h1); }
ExactScalar mono(std::vector<int> a) { return integrate_monomial(a); }
}  // namespace

TEST_CASE("monomial integrals on S^2") {
  CHECK(mono({0, 0, 0}) == pi_times(4));
  CHECK(mono({1, 0, 0}).is_zero());
  CHECK(mono({2, 1, 0}).is_zero());
  CHECK(mono({2, 0, 0}) == pi_times(Rational(4, 3)));
  CHECK(mono({2, 2, 0}) == pi_times(Rational(4, 15)));
  CHECK(mono({4, 0, 0}) == pi_times(Rational(4, 5)));
  CHECK(mono({2, 2, 2}) == pi_times(Rational(4, 105)));
}

TEST_CASE("other dimensions") {
  // S^1: int cos^2 = pi; S^3 area 2 pi^2.
  CHECK(integrate_monomial(std::vector<int>{2, 0}) == ExactScalar::term(1, 1, 0));
  CHECK(integrate_monomial(std::vector<int>{0, 0, 0, 0}) == ExactScalar::term(2, 2, 0));
}

TEST_CASE("polynomials") {
  Poly r2;
  for (Var v : sv) r2 += Poly::var(v).pow(2);
  for (int k = 0; k <= 4; ++k) CHECK(integrate_poly(r2.pow(k), sv) == to_complex(pi_times(4)));
  CHECK(integrate_poly(Poly::var(sv[0]) * Poly::var(sv[1]), sv).is_zero());
  CHECK(integrate_poly(Poly::var(vars::h1()) * Poly::var(sv[0]).pow(2), sv) ==
        to_complex(pi_times(Rational(4, 3), 1)));
  try {
    integrate_poly(Poly::var(vars::eta(1)), sv);
    FAIL("expected stray_variable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::stray_variable);
  }
}

TEST_CASE("exact scalar text is lossless") {
  const ExactScalar x = ExactScalar::term(Rational(-14), 2, 1) + pi_times(Rational(3, 7));
  CHECK(parse_exact(to_string(x)) == x);
  CHECK(to_string(ExactScalar()) == "0");
  CHECK(substitute_h1(ExactScalar::term(2, 2, 1), 0).is_zero());
  CHECK(substitute_h1(ExactScalar::term(2, 2, 1), Rational(1, 2)) == ExactScalar::term(1, 2, 0));
  CHECK(is_h1_linear(ExactScalar::term(2, 2, 1)));
  CHECK(!is_h1_linear(ExactScalar::term(2, 2, 0)));
  CHECK(divide_h1(ExactScalar::term(2, 2, 1)) == ExactScalar::term(2, 2, 0));
}

TEST_CASE("imaginary residue is an error") {
  ExactComplex z = ExactComplex::term(GaussRational(Rational(1), Rational(1)), 2, 1);
  try {
    real_part_checked(z, "test");
    FAIL("expected imaginary_residual");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::imaginary_residual);
  }
}
