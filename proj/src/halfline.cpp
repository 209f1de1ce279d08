#include "ncres/halfline.hpp"

namespace ncres {

namespace {

GaussRational binomial(long n, long k) {
  if (k < 0 || k > n) return GaussRational(0);
  Rational r(1);
  for (long j = 1; j <= k; ++j) r = r * Rational(n - k + j) / Rational(j);
  return GaussRational(r);
}

// Coefficient of u^m in (1 + u/c)^{-k} c^{-k} = (u + c)^{-k}.
GaussRational neg_power_series(int k, int m, const GaussRational& c) {
  GaussRational sign = (m % 2 == 0) ? GaussRational(1) : GaussRational(-1);
  return sign * binomial(k + m - 1, m) * c.pow(-k - m);
}

// Coefficients of (u + c)^p.
std::vector<GaussRational> shifted_power(int p, const GaussRational& c) {
  std::vector<GaussRational> out(p + 1);
  for (int j = 0; j <= p; ++j) out[j] = binomial(p, j) * c.pow(p - j);
  return out;
}

// Principal part at a pole of order k where z^p (z - other)^{-k} is expanded
// in u = z - pole; returns coefficients of u^{-1}, ..., u^{-k}.
std::vector<GaussRational> principal_part(int p, int k, const GaussRational& pole,
                                          const GaussRational& other) {
  std::vector<GaussRational> num = shifted_power(p, pole);
  GaussRational gap = pole - other;
  std::vector<GaussRational> out(k);
  for (int s = 0; s < k; ++s) {
    GaussRational c(0);
    for (int j = 0; j <= std::min(s, p); ++j) c += num[j] * neg_power_series(k, s - j, gap);
    out[k - s - 1] = c;
  }
  return out;
}

}  // namespace

PowerFraction power_fraction(int p, int k) {
  const GaussRational i = GaussRational::i();
  PowerFraction pf;
  if (k == 0) {
    pf.polynomial.assign(p + 1, GaussRational(0));
    pf.polynomial[p] = GaussRational(1);
    return pf;
  }
  // Polynomial quotient of z^p by (z^2 + 1)^k.
  if (p >= 2 * k) {
    std::vector<GaussRational> rem(p + 1, GaussRational(0));
    rem[p] = GaussRational(1);
    std::vector<GaussRational> den(2 * k + 1, GaussRational(0));
    for (int j = 0; j <= k; ++j) den[2 * j] = binomial(k, j);
    pf.polynomial.assign(p - 2 * k + 1, GaussRational(0));
    for (int d = p - 2 * k; d >= 0; --d) {
      GaussRational q = rem[d + 2 * k];
      pf.polynomial[d] = q;
      if (q.is_zero()) continue;
      for (int j = 0; j <= 2 * k; ++j) rem[d + j] -= q * den[j];
    }
  }
  pf.minus = principal_part(p, k, i, -i);
  pf.plus = principal_part(p, k, -i, i);
  return pf;
}

PoleProduct pole_product(int a, int b) {
  const GaussRational i = GaussRational::i();
  PoleProduct pp;
  pp.plus.assign(a, GaussRational(0));
  pp.minus.assign(b, GaussRational(0));
  // Around -i: u^{-a} (u - 2i)^{-b}.
  for (int m = 0; m < a; ++m)
    pp.plus[a - m - 1] = b == 0 ? GaussRational(m == 0 ? 1 : 0)
                                : neg_power_series(b, m, GaussRational(-2) * i);
  // Around +i: u^{-b} (u + 2i)^{-a}.
  for (int m = 0; m < b; ++m)
    pp.minus[b - m - 1] = a == 0 ? GaussRational(m == 0 ? 1 : 0)
                                 : neg_power_series(a, m, GaussRational(2) * i);
  return pp;
}

Poly pole_power_poly(int a, int b, Var normal) {
  const Poly z = Poly::var(normal);
  const Poly i(GaussRational::i());
  return (z + i).pow(a) * (z - i).pow(b);
}

HalfDecomp<ExtOp> decompose(const SphereRational& s) {
  return decompose(s.numerator, s.k, s.normal);
}

}  // namespace ncres
