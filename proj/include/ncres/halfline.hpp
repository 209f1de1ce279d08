#pragma once

// Partial fractions in xi_n with poles at +-i, the half-line projections and
// exact line integrals by residues.
//
// Convention: pi_plus keeps the terms (xi_n + i)^{-k}, i.e. the part that
// extends holomorphically to the upper half-plane. It annihilates constants
// and (xi_n - i)^{-k} terms; pi_minus = id - pi_plus.

#include <algorithm>
#include <utility>
#include <vector>

#include "ncres/error.hpp"
#include "ncres/symbolic_ring.hpp"

namespace ncres {

inline Poly zero_like(const Poly&) { return Poly(); }
inline ExtOp zero_like(const ExtOp& x) { return ExtOp::zero(x.n()); }

template <class T>
struct HalfDecomp {
  T constant;
  std::vector<T> plus;   // plus[k-1] multiplies (xi_n + i)^{-k}
  std::vector<T> minus;  // minus[k-1] multiplies (xi_n - i)^{-k}

  void trim() {
    while (!plus.empty() && plus.back().is_zero()) plus.pop_back();
    while (!minus.empty() && minus.back().is_zero()) minus.pop_back();
  }

  HalfDecomp& operator+=(const HalfDecomp& o) {
    constant += o.constant;
    add_into(plus, o.plus);
    add_into(minus, o.minus);
    trim();
    return *this;
  }
  HalfDecomp& operator*=(const GaussRational& c) {
    constant *= c;
    for (auto& x : plus) x *= c;
    for (auto& x : minus) x *= c;
    trim();
    return *this;
  }
  friend HalfDecomp operator+(HalfDecomp a, const HalfDecomp& b) { return a += b; }
  friend HalfDecomp operator-(HalfDecomp a, HalfDecomp b) { return a += (b *= GaussRational(-1)); }
  friend HalfDecomp operator*(HalfDecomp a, const GaussRational& c) { return a *= c; }

  friend bool operator==(HalfDecomp a, HalfDecomp b) {
    a.trim();
    b.trim();
    return a.constant == b.constant && a.plus == b.plus && a.minus == b.minus;
  }

 private:
  static void add_into(std::vector<T>& into, const std::vector<T>& from) {
    for (std::size_t k = 0; k < from.size(); ++k) {
      if (k < into.size())
        into[k] += from[k];
      else
        into.push_back(from[k]);
    }
  }
};

// Scalar building blocks.
struct PowerFraction {
  std::vector<GaussRational> polynomial;  // quotient, by ascending power
  std::vector<GaussRational> plus;
  std::vector<GaussRational> minus;
};
// xi^p / (xi^2 + 1)^k.
PowerFraction power_fraction(int p, int k);

struct PoleProduct {
  std::vector<GaussRational> plus;
  std::vector<GaussRational> minus;
};
// (xi + i)^{-a} (xi - i)^{-b}.
PoleProduct pole_product(int a, int b);

// Expands (xi + i)^a (xi - i)^b as a polynomial in `normal`.
Poly pole_power_poly(int a, int b, Var normal);

template <class T>
HalfDecomp<T> decompose(const T& numerator, int k, Var normal) {
  HalfDecomp<T> out{zero_like(numerator), {}, {}};
  out.plus.assign(k, zero_like(numerator));
  out.minus.assign(k, zero_like(numerator));
  std::vector<T> poly_part;
  for (const auto& [p, coeff] : numerator.split(normal)) {
    PowerFraction pf = power_fraction(p, k);
    for (std::size_t d = 0; d < pf.polynomial.size(); ++d) {
      if (pf.polynomial[d].is_zero()) continue;
      if (d == 0) {
        out.constant += coeff * pf.polynomial[0];
        continue;
      }
      if (poly_part.size() < d) poly_part.resize(d, zero_like(numerator));
      poly_part[d - 1] += coeff * pf.polynomial[d];
    }
    for (int j = 0; j < k; ++j) {
      if (!pf.plus[j].is_zero()) out.plus[j] += coeff * pf.plus[j];
      if (!pf.minus[j].is_zero()) out.minus[j] += coeff * pf.minus[j];
    }
  }
  for (const auto& c : poly_part)
    if (!c.is_zero())
      throw Error(ErrorKind::unbounded_symbol, "polynomial growth in xi_n after decomposition");
  out.trim();
  return out;
}

HalfDecomp<ExtOp> decompose(const SphereRational& s);

// Inverse of decompose: numerator over (xi_n^2 + 1)^K.
template <class T>
std::pair<T, int> recombine(const HalfDecomp<T>& h, Var normal) {
  const int K = static_cast<int>(std::max(h.plus.size(), h.minus.size()));
  T num = h.constant * pole_power_poly(K, K, normal);
  for (int k = 1; k <= static_cast<int>(h.plus.size()); ++k)
    if (!h.plus[k - 1].is_zero()) num += h.plus[k - 1] * pole_power_poly(K - k, K, normal);
  for (int k = 1; k <= static_cast<int>(h.minus.size()); ++k)
    if (!h.minus[k - 1].is_zero()) num += h.minus[k - 1] * pole_power_poly(K, K - k, normal);
  return {std::move(num), K};
}

template <class T>
HalfDecomp<T> pi_plus(const HalfDecomp<T>& h) {
  HalfDecomp<T> out{zero_like(h.constant), h.plus, {}};
  out.trim();
  return out;
}

template <class T>
HalfDecomp<T> pi_minus(const HalfDecomp<T>& h) {
  HalfDecomp<T> out{h.constant, {}, h.minus};
  out.trim();
  return out;
}

// d/dxi_n, term by term.
template <class T>
HalfDecomp<T> deriv_xin(const HalfDecomp<T>& h) {
  HalfDecomp<T> out{zero_like(h.constant), {}, {}};
  auto shift = [](const std::vector<T>& in, std::vector<T>& into) {
    if (in.empty()) return;
    into.assign(in.size() + 1, zero_like(in.front()));
    for (std::size_t k = 1; k <= in.size(); ++k)
      into[k] = in[k - 1] * GaussRational(-static_cast<long>(k));
  };
  shift(h.plus, out.plus);
  shift(h.minus, out.minus);
  out.trim();
  return out;
}

// Product of two decompositions under a bilinear map f (matrix product,
// traced product, ...), re-expanded into partial fractions.
template <class A, class B, class F>
auto combine(const HalfDecomp<A>& x, const HalfDecomp<B>& y, F f)
    -> HalfDecomp<decltype(f(x.constant, y.constant))> {
  using C = decltype(f(x.constant, y.constant));
  HalfDecomp<C> out{f(x.constant, y.constant), {}, {}};
  const C zero = zero_like(out.constant);
  auto slot = [&zero](std::vector<C>& v, int order) -> C& {
    if (static_cast<int>(v.size()) < order) v.resize(order, zero);
    return v[order - 1];
  };
  auto add_pole_product = [&](const C& c, int a, int b) {
    PoleProduct pp = pole_product(a, b);
    for (std::size_t j = 0; j < pp.plus.size(); ++j)
      if (!pp.plus[j].is_zero()) slot(out.plus, int(j) + 1) += c * pp.plus[j];
    for (std::size_t j = 0; j < pp.minus.size(); ++j)
      if (!pp.minus[j].is_zero()) slot(out.minus, int(j) + 1) += c * pp.minus[j];
  };
  const bool xc = !x.constant.is_zero(), yc = !y.constant.is_zero();
  for (int b = 1; b <= int(y.plus.size()); ++b)
    if (xc && !y.plus[b - 1].is_zero()) slot(out.plus, b) += f(x.constant, y.plus[b - 1]);
  for (int b = 1; b <= int(y.minus.size()); ++b)
    if (xc && !y.minus[b - 1].is_zero()) slot(out.minus, b) += f(x.constant, y.minus[b - 1]);
  for (int a = 1; a <= int(x.plus.size()); ++a) {
    const A& xa = x.plus[a - 1];
    if (xa.is_zero()) continue;
    if (yc) slot(out.plus, a) += f(xa, y.constant);
    for (int b = 1; b <= int(y.plus.size()); ++b)
      if (!y.plus[b - 1].is_zero()) slot(out.plus, a + b) += f(xa, y.plus[b - 1]);
    for (int b = 1; b <= int(y.minus.size()); ++b)
      if (!y.minus[b - 1].is_zero()) add_pole_product(f(xa, y.minus[b - 1]), a, b);
  }
  for (int a = 1; a <= int(x.minus.size()); ++a) {
    const A& xa = x.minus[a - 1];
    if (xa.is_zero()) continue;
    if (yc) slot(out.minus, a) += f(xa, y.constant);
    for (int b = 1; b <= int(y.minus.size()); ++b)
      if (!y.minus[b - 1].is_zero()) slot(out.minus, a + b) += f(xa, y.minus[b - 1]);
    for (int b = 1; b <= int(y.plus.size()); ++b)
      if (!y.plus[b - 1].is_zero()) add_pole_product(f(xa, y.plus[b - 1]), b, a);
  }
  out.trim();
  return out;
}

template <class T>
HalfDecomp<T> multiply(const HalfDecomp<T>& x, const HalfDecomp<T>& y) {
  return combine(x, y, [](const T& a, const T& b) { return a * b; });
}

// Integral over the real line, as the coefficient of pi: closing the contour
// in the upper half-plane gives 2 pi i * minus[0].
template <class T>
T integrate_line(const HalfDecomp<T>& h) {
  if (!h.constant.is_zero())
    throw Error(ErrorKind::divergent_integral, "nonzero constant term in xi_n");
  T tail = zero_like(h.constant);
  if (!h.plus.empty()) tail += h.plus[0];
  if (!h.minus.empty()) tail += h.minus[0];
  if (!tail.is_zero())
    throw Error(ErrorKind::divergent_integral, "integrand decays only like 1/xi_n");
  if (h.minus.empty()) return zero_like(h.constant);
  return h.minus[0] * GaussRational(Rational(0), Rational(2));
}

}  // namespace ncres
