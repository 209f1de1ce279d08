#include <doctest.h>

#include "ncres/error.hpp"
#include "ncres/symbolic_ring.hpp"

using namespace ncres;

namespace {
const SymbolFrame f;
const Var z = vars::xi(4), x1 = vars::xi(1);
RadialRational scalar(const Poly& p, int k, int d) { return RadialRational::scalar(p, k, d, f); }
}  // namespace

TEST_CASE("quotient rule") {
  const Poly Z = Poly::var(z), X = Poly::var(x1);
  CHECK(scalar(Poly(1), 1, -2).deriv(z) == scalar(Poly(-2) * Z, 2, -3));
  CHECK(scalar(X, 1, -1).deriv(x1) == scalar(Poly(1), 1, -2) - scalar(Poly(2) * X * X, 2, -2));
}

TEST_CASE("derivative of p(xi)/|xi|^2 by two routes") {
  const Covector xi = f.covector();
  const RadialRational s(p_op(xi), 1, 0, f);
  const Covector dn = Covector::basis(4, 4);
  const ExtOp dp = wedge_op(dn) * contract_op(xi) + wedge_op(xi) * contract_op(dn) -
                   contract_op(dn) * wedge_op(xi) - contract_op(xi) * wedge_op(dn);
  const RadialRational leibniz = RadialRational(dp, 0, 1, f) * scalar(Poly(1), 1, -2) +
                                 RadialRational(p_op(xi), 0, 2, f) * scalar(Poly(1), 1, -2).deriv(z);
  CHECK(s.deriv(z) == leibniz);
}

TEST_CASE("derivatives commute and track degree") {
  const RadialRational s(p_op(f.covector()), 1, 0, f);
  CHECK(s.deriv(x1).deriv(z) == s.deriv(z).deriv(x1));
  CHECK(s.deriv(x1).deriv(z).degree() == -2);
  CHECK(s.deriv(z, 3) == s.deriv(z).deriv(z).deriv(z));
  CHECK((s * s).degree() == 0);
  CHECK(s.with_k(3) == s);
}

TEST_CASE("constructor checks homogeneity") {
  try {
    RadialRational bad(ExtOp::scalar(4, Poly::var(x1) + Poly(1)), 0, 1, f);
    FAIL("expected homogeneity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::homogeneity);
  }
}

TEST_CASE("derivatives only in frame variables") {
  try {
    scalar(Poly(1), 1, -2).deriv(vars::eta(1));
    FAIL("expected stray_variable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::stray_variable);
  }
}

TEST_CASE("sphere restriction") {
  const Poly X = Poly::var(x1);
  const SphereRational r = restrict_sphere(scalar(X * X, 2, -2));
  CHECK(r.k == 2);
  CHECK(r.numerator == ExtOp::scalar(4, X * X));
  const SphereRational d = restrict_sphere(scalar(Poly(1), 1, -2).deriv(x1));
  CHECK(d.k == 2);
  CHECK(d.numerator == ExtOp::scalar(4, Poly(-2) * X));
}
