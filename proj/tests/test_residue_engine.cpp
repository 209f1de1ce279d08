#include <doctest.h>

#include "ncres/error.hpp"
#include "ncres/residue_engine.hpp"

using namespace ncres;

namespace {
ExactScalar pi2h1(long q) { return ExactScalar::term(q, 2, 1); }
bool is_scalar_matrix(const CoeffMatrix& m, const ExactScalar& d) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(m[i][j] == (i == j ? d : ExactScalar()))) return false;
  return true;
}
}  // namespace

TEST_CASE("multi-indices") {
  CHECK(multi_indices(0).size() == 1);
  CHECK(multi_indices(1).size() == 3);
  CHECK(multi_indices(2).size() == 6);
  CHECK((MultiIndex::unit(1) + MultiIndex::unit(1)).str() == "x1^2");
  CHECK((MultiIndex::unit(1) + MultiIndex::unit(2)).factorial() == 1);
  CHECK((MultiIndex::unit(3) + MultiIndex::unit(3)).factorial() == 2);
  CHECK(MultiIndex{}.str() == "1");
}

TEST_CASE("star enumeration") {
  const auto cases = enumerate_cases(true);
  REQUIRE(cases.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(cases[i].id == kAllCases[i]);
    CHECK(-(cases[i].r + cases[i].l) + cases[i].alpha + cases[i].k + cases[i].j == 3);
  }
  CHECK(star_case(CaseId::b).r == -2);
  CHECK(star_case(CaseId::c).l == -2);
  CHECK(star_case(CaseId::aI).alpha == 1);
  CHECK(star_case(CaseId::aII).j == 1);
  CHECK(star_case(CaseId::aIII).k == 1);
  CHECK(parse_case_id("aIII") == CaseId::aIII);
  CHECK_THROWS_AS(parse_case_id("aIV"), Error);
}

TEST_CASE("general enumeration counts") {
  const EnumerationReport e = enumerate_general();
  CHECK(e.cases.size() == 24);
  CHECK(e.matching_convention == "(r,l,k,j,|alpha|,beta'',delta'')");
  try {
    case_integrands(e.cases.back());
    FAIL("expected unsupported_case");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::unsupported_case);
  }
}

TEST_CASE("prefactors") {
  const MultiIndex none, e1 = MultiIndex::unit(1), e11 = e1 + e1;
  const GaussRational mi(Rational(0), Rational(-1));
  // (-i)^{j+k+1+|alpha|+|beta'|+|delta'|} / (alpha! beta'! delta'! (j+k+1)!)
  CHECK(case_prefactor(star_case(CaseId::aI), e1, e1, e1) == mi.pow(4));
  CHECK(case_prefactor(star_case(CaseId::aII), none, e1, e1) == mi.pow(4) / GaussRational(2));
  CHECK(case_prefactor(star_case(CaseId::aIII), none, e1, e1) == mi.pow(4) / GaussRational(2));
  CHECK(case_prefactor(star_case(CaseId::b), none, e11, e1) == mi.pow(4) / GaussRational(2));
  CHECK(case_prefactor(star_case(CaseId::b), none, e1, e1) == mi.pow(3));
  CHECK(case_prefactor(star_case(CaseId::c), none, e1, e11) == mi.pow(4) / GaussRational(2));
}

TEST_CASE("integrand degrees") {
  for (CaseId id : kAllCases)
    for (const SlotTerm& t : case_integrands(id)) CHECK(t.term.degree() == -4);
}

TEST_CASE("exact case values") {
  const CaseResult aI = eval_case(CaseId::aI);
  CHECK(is_zero(aI.matrix));
  CHECK(aI.higher_vanish);
  CHECK(is_scalar_matrix(eval_case(CaseId::aII).matrix, pi2h1(2)));
  CHECK(is_scalar_matrix(eval_case(CaseId::aIII).matrix, pi2h1(-2)));
  const CaseResult b = eval_case(CaseId::b);
  CHECK(is_scalar_matrix(b.matrix, pi2h1(-14)));
  CHECK(b.higher.size() == 18);
  CHECK(b.higher_vanish);
  CHECK(is_scalar_matrix(eval_case(CaseId::c).matrix, pi2h1(14)));
}

TEST_CASE("assembled form") {
  const OmegaReport r = omega3();
  CHECK(r.h1_linear);
  CHECK(r.every_case_h1_linear);
  CHECK(r.higher_slots_vanish);
  CHECK(r.isotropic);
  CHECK(r.symmetric);
  CHECK(r.total_zero);
  CHECK(r.a.is_zero());
  CHECK(r.conjecture_zero);
  CHECK(is_zero(substitute_h1(r.total, 0)));
}

TEST_CASE("integration-by-parts chain") {
  for (auto [b, d] : {std::pair{0, 0}, std::pair{1, 1}, std::pair{3, 2}}) {
    const ChainReport r = remark1_chain(b, d);
    for (const IdentityCheck& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}
