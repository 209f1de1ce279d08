#include "jet_oracle.hpp"

#include "ncres/symbols.hpp"

namespace ncres::jet_oracle {

namespace {

const GaussRational kI = GaussRational::i();

Poly t_var() { return Poly::var(vars::t()); }

// G xi with G = diag(1 + h1 t, ..., 1).
Covector metric_dual(const SymbolFrame& f) {
  Covector v = f.covector();
  const Poly scale = Poly(1) + h1_poly() * t_var();
  for (int i = 0; i + 1 < v.dim(); ++i) v.components[i] = v.components[i] * scale;
  return v;
}

Poly norm_g(const SymbolFrame& f) { return pairing(f.covector(), metric_dual(f)); }

ExtOp at0(const ExtOp& x) { return x.subs(vars::t(), Poly()); }
ExtOp dt0(const ExtOp& x) { return x.deriv(vars::t()).subs(vars::t(), Poly()); }
Poly at0(const Poly& x) { return x.subs(vars::t(), Poly()); }
Poly dt0(const Poly& x) { return x.deriv(vars::t()).subs(vars::t(), Poly()); }

}  // namespace

RadialRational dxn_sigma_L(SymbolFrame f) {
  const Covector xi = f.covector();
  const ExtOp e = wedge_op(xi), i = contract_op(metric_dual(f));
  const ExtOp p = e * i - i * e;
  const Poly D = norm_g(f);
  // (N/D)' = (N' D - N D') / D^2 at t = 0
  return RadialRational(dt0(p) * at0(D) - at0(p) * dt0(D), 2, 0, f);
}

RadialRational dxn_sigma1_delta(SymbolFrame f) {
  return RadialRational(dt0(contract_op(metric_dual(f))) * (-kI), 0, 1, f);
}

RadialRational sigma1_d_codiff(SymbolFrame f) {
  const Covector xi = f.covector();
  const ExtOp s1d = wedge_op(xi) * kI, s1delta = contract_op(xi) * (-kI);
  ExtOp num = s1d * sigma0_delta() + sigma0_d() * s1delta;
  // Only x_n carries a jet; d_{xi_n} sigma_1(d) = i e(dx_n).
  num -= s1d.deriv(f.normal()) * dxn_sigma1_delta(f).numerator() * kI;
  return RadialRational(num, 0, 1, f);
}

RadialRational sigma1_codiff_d(SymbolFrame f) {
  const Covector xi = f.covector();
  const ExtOp s1d = wedge_op(xi) * kI, s1delta = contract_op(xi) * (-kI);
  // e(xi) carries no metric, so its t-derivative is zero.
  ExtOp jet = dt0(wedge_op(xi) * kI);
  ExtOp num = s1delta * sigma0_d() + sigma0_delta() * s1d -
              s1delta.deriv(f.normal()) * jet * kI;
  return RadialRational(num, 0, 1, f);
}

RadialRational sigma_minus3_lapinv(SymbolFrame f) {
  const Poly D = norm_g(f);
  const Poly D0 = at0(D);
  // d_t (1/D) = -D'/D^2
  const RadialRational dt_inv = RadialRational::scalar(-dt0(D), 2, -2, f);
  const RadialRational d_norm = RadialRational::scalar(D0.deriv(f.normal()), 0, 1, f);
  const RadialRational inv = RadialRational::scalar(Poly(1), 1, -2, f);
  const RadialRational lap = jet_oracle::sigma1_d_codiff(f) + jet_oracle::sigma1_codiff_d(f);
  return -(inv * (lap * inv - kI * (d_norm * dt_inv)));
}

RadialRational sigma_minus1_jet_term(SymbolFrame f) {
  const Poly D = norm_g(f);
  const RadialRational dt_inv = RadialRational::scalar(-dt0(D), 2, -2, f);
  const RadialRational dp(p_op(f.covector()).deriv(f.normal()), 0, 1, f);
  // D_x = -i d_x
  return (-kI) * (dp * dt_inv);
}

}  // namespace ncres::jet_oracle
