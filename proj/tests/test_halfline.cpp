#include <doctest.h>

#include "ncres/halfline.hpp"
#include "ncres/symbols.hpp"

using namespace ncres;

namespace {

const Var z = vars::xi(4);
const GaussRational half_i(Rational(0), Rational(1, 2));

HalfDecomp<Poly> dec(const Poly& num, int k) { return decompose(num, k, z); }

}  // namespace

TEST_CASE("two-pole partial fractions") {
  const Poly Z = Poly::var(z);
  auto h = dec(Poly(1), 1);
  CHECK(h.constant.is_zero());
  CHECK(h.minus == std::vector<Poly>{Poly(-half_i)});
  CHECK(h.plus == std::vector<Poly>{Poly(half_i)});

  h = dec(Z * Z, 1);
  CHECK(h.constant == Poly(1));
  CHECK(h.minus == std::vector<Poly>{Poly(half_i)});
  CHECK(h.plus == std::vector<Poly>{Poly(-half_i)});

  h = dec(Z, 2);
  const GaussRational q(Rational(0), Rational(1, 4));
  CHECK(h == HalfDecomp<Poly>{Poly(), {Poly(), Poly(q)}, {Poly(), Poly(-q)}});
}

TEST_CASE("round trip on random numerators") {
  const Poly Z = Poly::var(z), x = Poly::var(vars::xi(1));
  for (int k = 1; k <= 4; ++k)
    for (int p = 0; p <= 2 * k; ++p) {
      const Poly num = Z.pow(p) * (x + Poly(p)) + Poly(k);
      const auto h = dec(num, k);
      const auto [back, K] = recombine(h, z);
      CHECK(back * pole_power_poly(k, k, z) == num * pole_power_poly(K, K, z));
    }
}

TEST_CASE("projections") {
  const auto h = dec(Poly::var(z).pow(2) + Poly(3), 2);
  const auto P = pi_plus(h), M = pi_minus(h);
  CHECK(pi_plus(P) == P);
  CHECK(pi_minus(M) == M);
  CHECK(P + M == h);
  CHECK(pi_plus(M) == HalfDecomp<Poly>{Poly(), {}, {}});
  CHECK(pi_plus(dec(Poly(1), 1)) == HalfDecomp<Poly>{Poly(), {Poly(half_i)}, {}});
  const HalfDecomp<Poly> sq{Poly(), {Poly(), Poly(1)}, {}};
  CHECK(pi_plus(sq) == sq);
  CHECK(deriv_xin(pi_plus(h)) == pi_plus(deriv_xin(h)));
}

TEST_CASE("derivative") {
  CHECK(deriv_xin(HalfDecomp<Poly>{Poly(), {Poly(1)}, {}}) ==
        HalfDecomp<Poly>{Poly(), {Poly(), Poly(-1)}, {}});
  CHECK(deriv_xin(HalfDecomp<Poly>{Poly(5), {}, {}}) == HalfDecomp<Poly>{Poly(), {}, {}});
}

TEST_CASE("line integrals as multiples of pi") {
  CHECK(integrate_line(dec(Poly(1), 1)) == Poly(1));
  CHECK(integrate_line(dec(Poly(1), 2)) == Poly(GaussRational(Rational(1, 2))));
  CHECK(integrate_line(dec(Poly::var(z).pow(2), 2)) == Poly(GaussRational(Rational(1, 2))));
  CHECK(integrate_line(HalfDecomp<Poly>{Poly(), {Poly(), Poly(1)}, {}}).is_zero());
  try {
    integrate_line(dec(Poly::var(z).pow(2), 1));
    FAIL("expected divergent_integral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::divergent_integral);
  }
  try {
    integrate_line(dec(Poly::var(z), 1));
    FAIL("expected divergent_integral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::divergent_integral);
  }
}

TEST_CASE("product rules and integration by parts") {
  const auto f = dec(Poly::var(z) + Poly(2), 2), g = dec(Poly(1) - Poly::var(z), 1);
  const auto [fn, fk] = recombine(f, z);
  const auto [gn, gk] = recombine(g, z);
  const auto fg = multiply(f, g);
  const auto [pn, pk] = recombine(fg, z);
  CHECK(pn * pole_power_poly(fk + gk, fk + gk, z) == fn * gn * pole_power_poly(pk, pk, z));
  CHECK(integrate_line(multiply(deriv_xin(f), g)) == -integrate_line(multiply(f, deriv_xin(g))));
  // ++ and -- products vanish
  CHECK(integrate_line(multiply(pi_plus(f), pi_plus(g))).is_zero());
  auto fm = pi_minus(f), gm = pi_minus(g);
  fm.constant = gm.constant = Poly();
  CHECK(integrate_line(multiply(fm, gm)).is_zero());
}

TEST_CASE("polynomial growth is rejected") {
  try {
    dec(Poly::var(z).pow(3), 1);
    FAIL("expected unbounded_symbol");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unbounded_symbol);
  }
}

TEST_CASE("matrix-valued decomposition of sigma_L") {
  const auto h = decompose(restrict_sphere(sigma_L()));
  CHECK(!h.constant.is_zero());
  const auto [num, K] = recombine(h, z);
  const SphereRational s = restrict_sphere(sigma_L());
  CHECK(num * pole_power_poly(s.k, s.k, z) == s.numerator * pole_power_poly(K, K, z));
}
