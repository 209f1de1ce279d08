#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "report.hpp"

using namespace ncres;

TEST_CASE("Cauchy-integral pi+ matches the closed form") {
  const Var z = vars::xi(4);
  for (double x : {-3.0, -0.5, 0.0, 0.7, 4.0}) {
    const std::complex<double> expected = 1.0 / (2.0 * (1.0 - std::complex<double>(0, 1) * x));
    CHECK(std::abs(oracle::pi_plus_scalar(Poly(1), 1, z, x) - expected) < 1e-12);
    // pi+ of 1/(xi_n+i)^2 is itself
    const std::complex<double> w = 1.0 / std::pow(std::complex<double>(x, 1), 2);
    const Poly num = Poly::var(z) * Poly::var(z) + Poly(-1) + Poly::var(z) * GaussRational(Rational(0), Rational(-2));
    CHECK(std::abs(oracle::pi_plus_scalar(num, 2, z, x) - w) < 1e-12);
  }
}

TEST_CASE("oracle agrees with the exact engine") {
  for (CaseId id : {CaseId::aII, CaseId::c}) {
    const CaseResult r = eval_case(id);
    const auto cmp = oracle::compare_case(r);
    CHECK(cmp.pass);
    CHECK(cmp.entries.size() == 9 + r.higher.size());
  }
}

TEST_CASE("oracle at another h1") {
  oracle::Options opt;
  opt.h1 = 0.25;
  CHECK(oracle::compare_case(eval_case(CaseId::aIII), opt).pass);
}

TEST_CASE("report document shape") {
  const report::Suite s = report::sphere_suite();
  const auto doc = report::document("identities", s, nullptr);
  for (const char* key : {"version", "mode", "suite", "results", "omega"}) CHECK(doc.contains(key));
  for (const auto& row : doc["results"]) {
    CHECK(row["status"] == "pass");
    CHECK(row["float"].is_null());
  }
  CHECK(doc.dump() == report::document("identities", report::sphere_suite(), nullptr).dump());
}
