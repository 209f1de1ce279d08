#include <doctest.h>

#include "jet_oracle.hpp"
#include "ncres/error.hpp"
#include "ncres/symbols.hpp"

using namespace ncres;

TEST_CASE("principal symbol") {
  const RadialRational L = sigma_L();
  CHECK(L * L == RadialRational::scalar(Poly(1), 0, 0));
  CHECK(L.degree() == 0);
  for (int i = 1; i <= 3; ++i) CHECK(sigma_L_jet(x_unit(i)).is_zero());
  CHECK(sigma_L_jet(x_unit(4)) == dxn_sigma_L());
  CHECK_THROWS_AS(sigma_L_jet(XOrder{1, 0, 0, 1}), Error);
}

TEST_CASE("normal jets agree with the metric-path route") {
  CHECK(dxn_sigma_L() == jet_oracle::dxn_sigma_L());
  CHECK(sigma1_delta_jet(4) == jet_oracle::dxn_sigma1_delta());
  CHECK(sigma1_d_jet(4).is_zero());
  CHECK(sigma1_d_codiff() == jet_oracle::sigma1_d_codiff());
  CHECK(sigma1_codiff_d() == jet_oracle::sigma1_codiff_d());
  CHECK(sigma_minus3_lapinv() == jet_oracle::sigma_minus3_lapinv());
}

TEST_CASE("closed forms agree with composition") {
  CHECK(sigma1_d_codiff() == sigma1_d_codiff_composed());
  CHECK(sigma1_codiff_d() == sigma1_codiff_d_composed());
  CHECK(sigma_minus3_lapinv() == sigma_minus3_lapinv_composed());
  CHECK(sigma1_A() == sigma1_d_codiff() - sigma1_codiff_d());
  CHECK(sigma1_Delta() == sigma1_d_codiff() + sigma1_codiff_d());
}

TEST_CASE("order-zero parts") {
  CHECK(sigma0_d().shifts_degree_by(1));
  CHECK(sigma0_delta().shifts_degree_by(-1));
  CHECK(sigma0_d().subs(vars::h1(), Poly()).is_zero());
  CHECK(!sigma0_d().is_zero());
}

TEST_CASE("sigma_{-1}(F)") {
  const RadialRational F = sigma_minus1_F();
  CHECK(F.degree() == -1);
  CHECK(F == sigma_minus1_F_regrouped());
  CHECK(F.subs(vars::h1(), Poly()).is_zero());
  CHECK(!F.is_zero());
  CHECK(sigma_F(0) == sigma_L());
  CHECK(sigma_F(-1) == F);
  try {
    sigma_F(-2);
    FAIL("expected degree_out_of_range");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degree_out_of_range);
  }
}
