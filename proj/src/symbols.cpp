#include "ncres/symbols.hpp"

#include "ncres/error.hpp"

namespace ncres {

namespace {

constexpr int kN = 4;

void require_n4(const SymbolFrame& f) {
  if (f.n() != kN) throw Error(ErrorKind::dimension_mismatch, "boundary symbols need n = 4");
}

const GaussRational kI = GaussRational::i();

// Polynomial (k = 0) symbol.
RadialRational poly_symbol(ExtOp num, int degree, const SymbolFrame& f) {
  return RadialRational(std::move(num), 0, degree, f);
}


}  // namespace

XOrder x_unit(int i) {
  if (i < 1 || i > kN) throw Error(ErrorKind::index_out_of_range, "x direction");
  XOrder o{};
  o[i - 1] = 1;
  return o;
}

Poly h1_poly() { return Poly::var(vars::h1()); }

RadialRational sigma_L(SymbolFrame f) {
  require_n4(f);
  return RadialRational(p_op(f.covector()), 1, 0, f);
}

RadialRational dxn_sigma_L(SymbolFrame f) {
  require_n4(f);
  const Covector xi = f.covector(), xt = f.tangential_covector();
  const Poly h1 = h1_poly();
  // h1 [e(xi) i(xi') - i(xi') e(xi)] |xi|^2 - h1 |xi'|^2 p(xi), over |xi|^4
  ExtOp num = (wedge_op(xi) * contract_op(xt) - contract_op(xt) * wedge_op(xi)) *
                  (h1 * f.norm_sq()) -
              p_op(xi) * (h1 * f.tangential_norm_sq());
  return RadialRational(std::move(num), 2, 0, f);
}

RadialRational sigma_L_jet(const XOrder& order, SymbolFrame f) {
  int total = 0;
  for (int o : order) {
    if (o < 0) throw Error(ErrorKind::degree_out_of_range, "negative jet order");
    total += o;
  }
  if (total == 0) return sigma_L(f);
  if (total > 1)
    throw Error(ErrorKind::unsupported_jet,
                "x-jets of order " + std::to_string(total) + " need h''(0) and beyond");
  if (order[kN - 1] == 1) return dxn_sigma_L(f);
  return RadialRational::zero(f, 0);
}

ExtOp sigma0_d() {
  ExtOp sum = ExtOp::zero(kN);
  for (int i = 1; i < kN; ++i)
    sum += wedge_op(Covector::basis(kN, i)) *
           (clifford_op(kN, kN, CliffordKind::bar) * clifford_op(kN, i, CliffordKind::bar) -
            clifford_op(kN, kN, CliffordKind::plain) * clifford_op(kN, i, CliffordKind::plain));
  return sum * (h1_poly() * GaussRational(Rational(1, 4)));
}

ExtOp sigma0_delta() {
  ExtOp sum = ExtOp::zero(kN);
  for (int i = 1; i < kN; ++i)
    sum += contract_op(Covector::basis(kN, i)) *
           (clifford_op(kN, kN, CliffordKind::bar) * clifford_op(kN, i, CliffordKind::bar) -
            clifford_op(kN, kN, CliffordKind::plain) * clifford_op(kN, i, CliffordKind::plain));
  return sum * (h1_poly() * GaussRational(Rational(-1, 4)));
}

RadialRational sigma1_d(SymbolFrame f) {
  require_n4(f);
  return poly_symbol(wedge_op(f.covector()) * kI, 1, f);
}

RadialRational sigma1_delta(SymbolFrame f) {
  require_n4(f);
  return poly_symbol(contract_op(f.covector()) * (-kI), 1, f);
}

RadialRational sigma1_d_jet(int i, SymbolFrame f) {
  (void)x_unit(i);
  return RadialRational::zero(f, 1);
}

RadialRational sigma1_delta_jet(int i, SymbolFrame f) {
  (void)x_unit(i);
  if (i < kN) return RadialRational::zero(f, 1);
  return poly_symbol(contract_op(f.tangential_covector()) * (h1_poly() * (-kI)), 1, f);
}

RadialRational sigma1_d_codiff(SymbolFrame f) {
  require_n4(f);
  const Covector xi = f.covector();
  ExtOp num = wedge_op(xi) * sigma0_delta() * kI - sigma0_d() * contract_op(xi) * kI -
              wedge_op(Covector::basis(kN, kN)) * contract_op(f.tangential_covector()) *
                  (h1_poly() * kI);
  return poly_symbol(std::move(num), 1, f);
}

RadialRational sigma1_codiff_d(SymbolFrame f) {
  require_n4(f);
  const Covector xi = f.covector();
  ExtOp num = sigma0_delta() * wedge_op(xi) * kI - contract_op(xi) * sigma0_d() * kI;
  return poly_symbol(std::move(num), 1, f);
}

namespace {

// sigma_1(P Q) = s1(P) s0(Q) + s0(P) s1(Q) - i sum_i d_{xi_i} s1(P) d_{x_i} s1(Q)
RadialRational compose_first_order(const RadialRational& s1p, const ExtOp& s0p,
                                   const RadialRational& s1q, const ExtOp& s0q,
                                   RadialRational (*jet_q)(int, SymbolFrame),
                                   const SymbolFrame& f) {
  ExtOp num = s1p.numerator() * s0q + s0p * s1q.numerator();
  auto vs = f.variables();
  for (int i = 1; i <= kN; ++i) {
    ExtOp dp = s1p.numerator().deriv(vs[i - 1]);
    ExtOp jq = jet_q(i, f).numerator();
    if (dp.is_zero() || jq.is_zero()) continue;
    num -= dp * jq * kI;
  }
  return poly_symbol(std::move(num), 1, f);
}

}  // namespace

RadialRational sigma1_d_codiff_composed(SymbolFrame f) {
  require_n4(f);
  return compose_first_order(sigma1_d(f), sigma0_d(), sigma1_delta(f), sigma0_delta(),
                             sigma1_delta_jet, f);
}

RadialRational sigma1_codiff_d_composed(SymbolFrame f) {
  require_n4(f);
  return compose_first_order(sigma1_delta(f), sigma0_delta(), sigma1_d(f), sigma0_d(),
                             sigma1_d_jet, f);
}

RadialRational sigma1_A(SymbolFrame f) { return sigma1_d_codiff(f) - sigma1_codiff_d(f); }
RadialRational sigma1_Delta(SymbolFrame f) { return sigma1_d_codiff(f) + sigma1_codiff_d(f); }

RadialRational sigma_minus3_lapinv(SymbolFrame f) {
  require_n4(f);
  const Poly xin = Poly::var(f.normal());
  // -s1(Lap) |xi|^2 / |xi|^6 - 2i h1 |xi'|^2 xi_n / |xi|^6
  ExtOp num = -(sigma1_Delta(f).numerator() * f.norm_sq()) -
              ExtOp::scalar(kN, h1_poly() * f.tangential_norm_sq() * xin * (GaussRational(2) * kI));
  return RadialRational(std::move(num), 3, -3, f);
}

RadialRational sigma_minus3_lapinv_composed(SymbolFrame f) {
  require_n4(f);
  // d_{x_n} |xi|^{-2} = -h1 |xi'|^2 / |xi|^4; tangential jets vanish.
  const RadialRational inv = RadialRational::scalar(Poly(1), 1, -2, f);
  const RadialRational dxn_inv =
      RadialRational::scalar(-(h1_poly() * f.tangential_norm_sq()), 2, -2, f);
  // Only i = n contributes.
  const RadialRational d_norm =
      RadialRational::scalar(f.norm_sq().deriv(f.normal()), 0, 1, f);
  const RadialRational correction = d_norm * dxn_inv;
  RadialRational bracket = sigma1_Delta(f) * inv - kI * correction;
  return -(inv * bracket);
}

RadialRational sigma_minus1_F(SymbolFrame f) {
  require_n4(f);
  const Covector xi = f.covector();
  const RadialRational dxin_p(p_op(xi).deriv(f.normal()), 0, 1, f);
  const RadialRational jet_term =
      (h1_poly() * kI) *
      (RadialRational::scalar(f.tangential_norm_sq(), 2, -2, f) * dxin_p);
  return sigma1_A(f) * RadialRational::scalar(Poly(1), 1, -2, f) +
         RadialRational(p_op(xi), 0, 2, f) * sigma_minus3_lapinv(f) + jet_term;
}

RadialRational sigma_minus1_F_regrouped(SymbolFrame f) {
  require_n4(f);
  const Covector xi = f.covector();
  const ExtOp p = p_op(xi);
  const Poly norm = f.norm_sq(), tn = f.tangential_norm_sq(), h1 = h1_poly();
  const Poly xin = Poly::var(f.normal());
  // ([s1(A) |xi|^2 - p s1(Lap)] |xi|^2 - 2i h1 |xi'|^2 xi_n p + i h1 |xi'|^2 |xi|^2 d_{xi_n}p) / |xi|^6
  ExtOp num = (sigma1_A(f).numerator() * norm - p * sigma1_Delta(f).numerator()) * norm -
              p * (h1 * tn * xin * (GaussRational(2) * kI)) +
              p.deriv(f.normal()) * (h1 * tn * norm * kI);
  return RadialRational(std::move(num), 3, -1, f);
}

RadialRational sigma_F(int order, SymbolFrame f) {
  if (order == 0) return sigma_L(f);
  if (order == -1) return sigma_minus1_F(f);
  throw Error(ErrorKind::degree_out_of_range,
              "sigma_" + std::to_string(order) + "(F) is not needed at this order");
}

}  // namespace ncres
