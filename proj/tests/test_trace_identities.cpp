#include <doctest.h>

#include "ncres/error.hpp"
#include "ncres/trace_identities.hpp"

using namespace ncres;

TEST_CASE("binomials and alternating sums") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(alternating_coeff(4, 0) == 1);
  CHECK(alternating_coeff(4, 1) == 3);
  CHECK(alternating_coeff(4, 2) == 3);
}

TEST_CASE("a_1 and the recursion") {
  CHECK(check_a1(4).pass);
  CHECK(check_a1(5).pass);
  for (int n = 4; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(check_recursion(n, m).pass);
    }
  CHECK(check_a2_closed_form(4).pass);
  CHECK(check_a2_closed_form(5).pass);
}

TEST_CASE("trace constants of p(xi)p(eta)") {
  const TraceConstants c = pq_constants(4, 2);
  CHECK(c.a == 8);
  CHECK(c.b == -2);
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m <= n - 2; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const TraceConstants f = pq_constants_formula(n, m), b = pq_constants_brute(n, m);
      CHECK(f == b);
      CHECK(f.a + f.b == binomial(n, m));
    }
  // Outside the closed-form range only brute force applies.
  const TraceConstants edge = pq_constants(4, 1);
  CHECK(edge.a + edge.b == 4);
}

TEST_CASE("full normal-jet trace identity") {
  const auto checks = remark2_full();
  CHECK(checks.size() >= 5);
  for (const IdentityCheck& c : checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  CHECK_NOTHROW(require_all(checks));
}

TEST_CASE("require_all names the failing identity") {
  std::vector<IdentityCheck> checks{{"fine", true, "", ""}, {"broken one", false, "1", ""}};
  try {
    require_all(checks);
    FAIL("expected identity_violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::identity_violation);
    CHECK(std::string(e.what()).find("broken one") != std::string::npos);
  }
}
