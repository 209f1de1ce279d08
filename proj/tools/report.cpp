#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jet_oracle.hpp"
#include "ncres/error.hpp"
#include "ncres/exterior_algebra.hpp"
#include "ncres/halfline.hpp"
#include "ncres/sphere_quadrature.hpp"
#include "ncres/symbols.hpp"
#include "ncres/trace_identities.hpp"

namespace ncres::report {

bool Suite::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

const Row* Suite::first_failure() const {
  for (const Row& r : rows)
    if (!r.pass) return &r;
  return nullptr;
}

void Suite::add(const IdentityCheck& c) { rows.push_back({c.name, c.pass, c.exact, {}, {}}); }

void Suite::add(std::string n, bool p, std::string exact) {
  rows.push_back({std::move(n), p, std::move(exact), {}, {}});
}

void Suite::append(const Suite& other) {
  for (Row r : other.rows) {
    r.name = other.name + ": " + r.name;
    rows.push_back(std::move(r));
  }
}

namespace {

const GaussRational kI = GaussRational::i();

Covector formal(int n, Var (*g)(int)) { return Covector::formal(n, g); }

std::string poly_text(const Poly& p) { return p.is_zero() ? "0" : p.str(); }

template <class T>
bool decomp_eq(const HalfDecomp<T>& a, const HalfDecomp<T>& b) {
  return a == b;
}

HalfDecomp<Poly> scalar_decomp(const Poly& num, int k) {
  return decompose(num, k, vars::xi(4));
}

std::string gauss_list(const std::vector<Poly>& v) {
  std::string s;
  for (const Poly& p : v) s += (s.empty() ? "" : ", ") + poly_text(p);
  return "[" + s + "]";
}

}  // namespace

Suite exterior_suite() {
  Suite s{"exterior algebra", {}};
  for (int n = 4; n <= 6; ++n) {
    const Covector xi = formal(n, vars::xi), eta = formal(n, vars::eta);
    const ExtOp lhs = wedge_op(xi) * contract_op(eta) + contract_op(eta) * wedge_op(xi);
    s.add("e(xi)i(eta) + i(eta)e(xi) = <xi,eta> I, n=" + std::to_string(n),
          lhs == ExtOp::identity(n) * pairing(xi, eta));
  }
  const int n = 4;
  const Covector xi = formal(n, vars::xi), eta = formal(n, vars::eta), zeta = formal(n, vars::zeta),
                 theta = formal(n, vars::theta);
  s.add("e(xi)^2 = 0", (wedge_op(xi) * wedge_op(xi)).is_zero());
  s.add("i(xi)^2 = 0", (contract_op(xi) * contract_op(xi)).is_zero());
  const ExtOp p = p_op(xi);
  s.add("p(xi) = 2 e(xi)i(xi) - |xi|^2 I",
        p == wedge_op(xi) * contract_op(xi) * GaussRational(2) -
                 ExtOp::identity(n) * pairing(xi, xi));
  s.add("p(xi)^2 = |xi|^4 I", p * p == ExtOp::identity(n) * pairing(xi, xi).pow(2));
  s.add("p(xi) acts as -|xi|^2 on degree 0", p(0, 0) == -pairing(xi, xi));
  const Poly tr = graded_trace(wedge_op(Covector::basis(n, n)) * contract_op(xi.tangential()), 2);
  s.add("tr_2[e(dx_n)i(xi')] = 0", tr.is_zero(), poly_text(tr));
  s.add("tr_2[I] = 6", graded_trace(ExtOp::identity(n), 2) == Poly(6), "6");
  const ExtOp c1 = clifford_op(n, 1, CliffordKind::plain), cb1 = clifford_op(n, 1, CliffordKind::bar);
  s.add("c(e1)^2 = -I", c1 * c1 == -ExtOp::identity(n));
  s.add("cbar(e1)^2 = I", cb1 * cb1 == ExtOp::identity(n));
  s.add("c(e1)cbar(e1) + cbar(e1)c(e1) = 0", (c1 * cb1 + cb1 * c1).is_zero());
  const ExtOp A = wedge_op(xi) * contract_op(eta), B = contract_op(zeta) * wedge_op(theta);
  s.add("tr_2[AB] = tr_2[BA]", trace_product(A, B, 2) == trace_product(B, A, 2));
  return s;
}

Suite trace_suite() {
  Suite s{"trace identities", {}};
  s.add(check_a1(4));
  for (int n = 4; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) s.add(check_recursion(n, m));
  s.add(check_a2_closed_form(4));
  s.add(check_a2_closed_form(5));
  s.add("A_{4,0}, A_{4,1}, A_{4,2} = 1, 3, 3",
        alternating_coeff(4, 0) == 1 && alternating_coeff(4, 1) == 3 && alternating_coeff(4, 2) == 3);
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m <= n - 2; ++m) {
      const TraceConstants f = pq_constants_formula(n, m);
      const TraceConstants b = pq_constants_brute(n, m);
      s.add("(a,b) closed form = brute force, n=" + std::to_string(n) + " m=" + std::to_string(m),
            f == b, "(" + b.a.get_str() + ", " + b.b.get_str() + ")");
    }
  for (const IdentityCheck& c : remark2_full()) s.add(c);
  return s;
}

Suite halfline_suite() {
  Suite s{"half-line calculus", {}};
  const Var z = vars::xi(4);
  const Poly Z = Poly::var(z);
  const GaussRational half_i(Rational(0), Rational(1, 2));

  {
    auto h = scalar_decomp(Poly(1), 1);
    s.add("1/(xi_n^2+1) = (-i/2)/(xi_n-i) + (i/2)/(xi_n+i)",
          h.constant.is_zero() && h.minus == std::vector<Poly>{Poly(-half_i)} &&
              h.plus == std::vector<Poly>{Poly(half_i)},
          "minus " + gauss_list(h.minus) + " plus " + gauss_list(h.plus));
  }
  {
    auto h = scalar_decomp(Z * Z, 1);
    s.add("xi_n^2/(xi_n^2+1) = 1 + (i/2)/(xi_n-i) - (i/2)/(xi_n+i)",
          h.constant == Poly(1) && h.minus == std::vector<Poly>{Poly(half_i)} &&
              h.plus == std::vector<Poly>{Poly(-half_i)});
  }
  {
    auto h = scalar_decomp(Z, 2);
    const GaussRational q(Rational(0), Rational(1, 4));
    s.add("xi_n/(xi_n^2+1)^2 = (-i/4)/(xi_n-i)^2 + (i/4)/(xi_n+i)^2",
          h.constant.is_zero() && h.minus == std::vector<Poly>{Poly(), Poly(-q)} &&
              h.plus == std::vector<Poly>{Poly(), Poly(q)});
  }
  {
    bool threw = false;
    try {
      scalar_decomp(Z * Z * Z, 1);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::unbounded_symbol;
    }
    s.add("xi_n^3/(xi_n^2+1) is rejected as unbounded", threw);
  }

  const RadialRational symbols[] = {sigma_L(), dxn_sigma_L(), sigma_minus1_F(),
                                    sigma_L().deriv(vars::xi(1)).deriv(z)};
  const char* names[] = {"sigma_L", "d_{x_n} sigma_L", "sigma_{-1}(F)", "d_{xi_1} d_{xi_n} sigma_L"};
  for (int k = 0; k < 4; ++k) {
    const SphereRational sr = restrict_sphere(symbols[k]);
    const auto h = decompose(sr);
    const auto [num, K] = recombine(h, z);
    s.add(std::string("round trip for ") + names[k],
          num * pole_power_poly(sr.k, sr.k, z) == sr.numerator * pole_power_poly(K, K, z));
    const auto P = pi_plus(h), M = pi_minus(h);
    s.add(std::string("pi+ pi+ = pi+, pi+ + pi- = id, pi+ pi- = 0 on ") + names[k],
          pi_plus(P) == P && pi_minus(M) == M && P + M == h &&
              pi_plus(M) == HalfDecomp<ExtOp>{ExtOp::zero(4), {}, {}});
  }
  {
    auto P = pi_plus(scalar_decomp(Poly(1), 1));
    s.add("pi+[1/(xi_n^2+1)] = (i/2)/(xi_n+i) = 1/(2(1 - i xi_n))",
          P.constant.is_zero() && P.minus.empty() && P.plus == std::vector<Poly>{Poly(half_i)});
    auto Q = pi_plus(scalar_decomp(Poly(1), 0));
    HalfDecomp<Poly> sq{Poly(), {Poly(), Poly(1)}, {}};
    s.add("pi+[1/(xi_n+i)^2] = 1/(xi_n+i)^2", pi_plus(sq) == sq && Q.plus.empty());
    s.add("d/dxi_n [1/(xi_n+i)] = -1/(xi_n+i)^2",
          deriv_xin(HalfDecomp<Poly>{Poly(), {Poly(1)}, {}}) ==
              HalfDecomp<Poly>{Poly(), {Poly(), Poly(-1)}, {}});
    s.add("d/dxi_n of a constant is 0", deriv_xin(HalfDecomp<Poly>{Poly(7), {}, {}}) ==
                                            HalfDecomp<Poly>{Poly(), {}, {}});
  }
  {
    const Poly one = integrate_line(scalar_decomp(Poly(1), 1));
    const Poly two = integrate_line(scalar_decomp(Poly(1), 2));
    s.add("int 1/(xi_n^2+1) = pi", one == Poly(1), poly_text(one) + " pi");
    s.add("int 1/(xi_n^2+1)^2 = pi/2", two == Poly(GaussRational(Rational(1, 2))),
          poly_text(two) + " pi");
    const Poly pp = integrate_line(HalfDecomp<Poly>{Poly(), {Poly(), Poly(1)}, {}});
    s.add("int 1/(xi_n+i)^2 = 0", pp.is_zero());
    bool threw = false;
    try {
      integrate_line(scalar_decomp(Z * Z, 1));
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::divergent_integral;
    }
    s.add("int xi_n^2/(xi_n^2+1) is rejected as divergent", threw);
  }
  {
    auto tr = [](const ExtOp& a, const ExtOp& b) { return trace_product(a, b, 2); };
    const auto F = decompose(restrict_sphere(sigma_minus1_F()));
    const auto L = decompose(restrict_sphere(sigma_L()));
    const Poly pp = integrate_line(combine(pi_plus(F), deriv_xin(pi_plus(L)), tr));
    s.add("++ products integrate to 0", pp.is_zero(), poly_text(pp));
    const auto Fm = pi_minus(F);
    auto Lm = pi_minus(L);
    Lm.constant = ExtOp::zero(4);
    const Poly mm = integrate_line(combine(Fm, Lm, tr));
    s.add("-- products integrate to 0", mm.is_zero(), poly_text(mm));
    const Poly lhs = integrate_line(combine(deriv_xin(F), L, tr));
    const Poly rhs = integrate_line(combine(F, deriv_xin(L), tr));
    s.add("int (d f) g = -int f (d g)", lhs == -rhs, poly_text(lhs));
  }
  return s;
}

Suite sphere_suite() {
  Suite s{"sphere quadrature", {}};
  auto val = [](std::vector<int> a) { return integrate_monomial(a); };
  const ExactScalar four_pi = ExactScalar::term(4, 1, 0);
  s.add("int 1 = 4 pi", val({0, 0, 0}) == four_pi, to_string(val({0, 0, 0})));
  s.add("int xi_1 = 0", val({1, 0, 0}).is_zero());
  s.add("int xi_1^3 xi_2^2 = 0", val({3, 2, 0}).is_zero());
  s.add("int xi_1^2 = 4 pi/3", val({2, 0, 0}) == ExactScalar::term(Rational(4, 3), 1, 0),
        to_string(val({2, 0, 0})));
  s.add("int xi_1^2 xi_2^2 = 4 pi/15",
        val({2, 2, 0}) == ExactScalar::term(Rational(4, 15), 1, 0), to_string(val({2, 2, 0})));
  const Var sv[] = {vars::xi(1), vars::xi(2), vars::xi(3)};
  Poly r2;
  for (Var v : sv) r2 += Poly::var(v) * Poly::var(v);
  bool consistent = true;
  for (int k = 1; k <= 5; ++k)
    consistent = consistent && integrate_poly(r2.pow(k), sv) == to_complex(four_pi);
  s.add("int |xi'|^{2k} = 4 pi, k = 1..5", consistent);
  s.add("h1 passes through: int h1 xi_1^2 = (4 pi/3) h1",
        integrate_poly(Poly::var(vars::h1()) * Poly::var(sv[0]).pow(2), sv) ==
            to_complex(ExactScalar::term(Rational(4, 3), 1, 1)));
  bool threw = false;
  try {
    integrate_poly(Poly::var(vars::xi(4)), sv);
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::stray_variable;
  }
  s.add("xi_n in a sphere integrand is rejected", threw);
  // <u, xi'>^2 with formal u: integrate coefficient by coefficient.
  {
    Poly ip;
    for (int i = 1; i <= 3; ++i) ip += Poly::var(vars::eta(i)) * Poly::var(vars::xi(i));
    const Poly sq = ip * ip;
    std::map<Monomial, ExactScalar> by_u;
    for (const auto& [m, c] : sq.terms()) {
      Monomial u = m;
      std::vector<int> a(3);
      for (int i = 0; i < 3; ++i) {
        a[i] = m.degree(sv[i]);
        u.exp[sv[i].index] = 0;
      }
      by_u[u] += integrate_monomial(a) * c.re();
    }
    bool ok = true;
    for (const auto& [u, v] : by_u) {
      bool square = false;
      for (int i = 1; i <= 3; ++i) square = square || u.degree(vars::eta(i)) == 2;
      ok = ok && v == (square ? ExactScalar::term(Rational(4, 3), 1, 0) : ExactScalar());
    }
    s.add("int <u,xi'>^2 = (4 pi/3)|u|^2", ok);
  }
  return s;
}

Suite symbol_suite() {
  Suite s{"symbols", {}};
  const SymbolFrame f;
  const Var z = f.normal();
  const RadialRational L = sigma_L();
  s.add("sigma_L^2 = I", L * L == RadialRational::scalar(Poly(1), 0, 0));
  s.add("sigma_L acts as -1 on degree 0", L.numerator()(0, 0) == -f.norm_sq() && L.k() == 1);
  for (int i = 1; i <= 3; ++i)
    s.add("d_{x_" + std::to_string(i) + "} sigma_L(x0) = 0", sigma_L_jet(x_unit(i)).is_zero());
  s.add("d_{x_n} sigma_L agrees with the t-route jet", dxn_sigma_L() == jet_oracle::dxn_sigma_L());
  {
    const Poly h1 = h1_poly();
    const Covector xt = f.tangential_covector(), dxn = Covector::basis(4, 4);
    const ExtOp B = (wedge_op(dxn) * contract_op(xt) - contract_op(xt) * wedge_op(dxn)) * h1;
    const RadialRational split =
        RadialRational(p_op(xt) * h1, 1, 0) + RadialRational(B * Poly::var(z), 1, 0) -
        RadialRational(p_op(f.covector()) * (h1 * f.tangential_norm_sq()), 2, 0);
    s.add("d_{x_n} sigma_L = h1 p(xi',0)/|xi|^2 + xi_n B/|xi|^2 - h1|xi'|^2 p/|xi|^4",
          dxn_sigma_L() == split);
    s.add("d_{x_n} sigma_L vanishes at h1 = 0", dxn_sigma_L().subs(vars::h1(), Poly()).is_zero());
  }
  bool threw = false;
  try {
    sigma_L_jet(XOrder{0, 0, 0, 2});
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::unsupported_jet;
  }
  s.add("second normal jet is unsupported", threw);
  s.add("sigma_0(d) raises degree by 1", sigma0_d().shifts_degree_by(1));
  s.add("sigma_0(delta) lowers degree by 1", sigma0_delta().shifts_degree_by(-1));
  s.add("sigma_0(d), sigma_0(delta) vanish at h1 = 0",
        sigma0_d().subs(vars::h1(), Poly()).is_zero() &&
            sigma0_delta().subs(vars::h1(), Poly()).is_zero());
  s.add("sigma_1(d delta) closed form = composition route",
        sigma1_d_codiff() == sigma1_d_codiff_composed());
  s.add("sigma_1(delta d) closed form = composition route",
        sigma1_codiff_d() == sigma1_codiff_d_composed());
  s.add("sigma_1(d delta) = composition with t-route jets",
        sigma1_d_codiff() == jet_oracle::sigma1_d_codiff());
  s.add("sigma_1(delta d) = composition with t-route jets",
        sigma1_codiff_d() == jet_oracle::sigma1_codiff_d());
  s.add("sigma_1(A), sigma_1(Lap) vanish at h1 = 0",
        sigma1_A().subs(vars::h1(), Poly()).is_zero() &&
            sigma1_Delta().subs(vars::h1(), Poly()).is_zero());
  s.add("sigma_{-3}(Lap^{-1}) closed form = composed route",
        sigma_minus3_lapinv() == sigma_minus3_lapinv_composed());
  s.add("sigma_{-3}(Lap^{-1}) = t-route", sigma_minus3_lapinv() == jet_oracle::sigma_minus3_lapinv());
  s.add("sigma_{-3}(Lap^{-1}) has degree -3", sigma_minus3_lapinv().degree() == -3);
  {
    const RadialRational jet =
        (h1_poly() * kI) *
        (RadialRational::scalar(f.tangential_norm_sq(), 2, -2) *
         RadialRational(p_op(f.covector()).deriv(z), 0, 1));
    s.add("jet term of sigma_{-1}(F) = t-route", jet == jet_oracle::sigma_minus1_jet_term());
  }
  const RadialRational F1 = sigma_minus1_F();
  s.add("sigma_{-1}(F) regrouped over |xi|^6 is the same symbol", F1 == sigma_minus1_F_regrouped());
  s.add("sigma_{-1}(F) has degree -1", F1.degree() == -1);
  bool divisible = true;
  const ExtOp& N = F1.numerator();
  for (int i = 0; i < N.dim(); ++i)
    for (int j = 0; j < N.dim(); ++j)
      for (const auto& [m, c] : N(i, j).terms()) divisible = divisible && m.degree(vars::h1()) >= 1;
  s.add("sigma_{-1}(F) is divisible by h1", divisible && !F1.is_zero());
  s.add("d_{xi'_1} d_{xi_n} = d_{xi_n} d_{xi'_1} on sigma_{-1}(F)",
        F1.deriv(vars::xi(1)).deriv(z) == F1.deriv(z).deriv(vars::xi(1)));
  return s;
}

Suite chain_suite() {
  Suite s{"integration-by-parts chain", {}};
  for (auto [b, d] : {std::pair{0, 0}, std::pair{1, 1}, std::pair{2, 1}}) {
    ChainReport r = remark1_chain(b, d);
    const std::string tag = b ? " (d_{xi_" + std::to_string(b) + "}, d_{eta_" +
                                    std::to_string(d) + "})"
                              : "";
    for (IdentityCheck c : r.checks) {
      c.name += tag;
      s.add(c);
    }
  }
  return s;
}

Suite enumeration_suite() {
  Suite s{"enumeration", {}};
  const auto star = enumerate_cases(true);
  const std::vector<std::array<int, 5>> expected = {
      {-1, -1, 0, 0, 1}, {-1, -1, 0, 1, 0}, {-1, -1, 1, 0, 0}, {-2, -1, 0, 0, 0}, {-1, -2, 0, 0, 0}};
  bool same = star.size() == expected.size();
  for (std::size_t i = 0; same && i < star.size(); ++i)
    same = star[i].id == kAllCases[i] &&
           std::array<int, 5>{star[i].r, star[i].l, star[i].k, star[i].j, star[i].alpha} ==
               expected[i];
  s.add("star mode yields aI, aII, aIII, b, c", same, std::to_string(star.size()) + " cases");
  bool constraint = true;
  for (const auto& c : enumerate_cases(false))
    constraint = constraint && -(c.r + c.l) + c.alpha + c.k + c.j == 3 && c.r <= -1 && c.l <= -1;
  s.add("every tuple satisfies -(r+l)+|alpha|+k+j = 3", constraint);
  bool rejected = false;
  try {
    for (const CaseIndex& c : enumerate_cases(false))
      if (c.beta_normal || c.delta_normal) {
        case_integrands(c);
        break;
      }
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::unsupported_case;
  }
  s.add("x_n-dependent tuples are rejected for evaluation", rejected);
  return s;
}

Suite case_suite(const std::vector<CaseResult>& cases) {
  Suite s{"cases", {}};
  for (const CaseResult& c : cases) {
    const std::string id = to_string(c.id);
    s.add(id + " is h1-linear", c.h1_linear);
    s.add(id + " integrands all have degree -4",
          std::all_of(c.degrees.begin(), c.degrees.end(), [](int d) { return d == -4; }));
    bool pi2 = true;
    for (const auto& row : c.matrix)
      for (const auto& x : row)
        for (const auto& [k, q] : x.buckets()) pi2 = pi2 && k.first == 2;
    s.add(id + " nonzero entries carry pi^2", pi2);
    if (!c.higher.empty())
      s.add(id + (c.id == CaseId::b ? " |beta'| = 2 slots vanish" : " second-derivative slots vanish"),
            c.higher_vanish, std::to_string(c.higher.size()) + " slots");
    if (c.id == CaseId::aI) s.add("aI = 0", is_zero(c.matrix));
  }
  return s;
}

Suite case_suite(const OmegaReport& omega) {
  Suite s = case_suite(omega.cases);
  s.add("total at h1 = 0 is zero", is_zero(substitute_h1(omega.total, 0)));
  s.add("total is h1-linear", omega.h1_linear);
  return s;
}

Suite oracle_suite(const std::vector<CaseResult>& cases, const oracle::Options& opt) {
  Suite s{"oracle", {}};
  for (const CaseResult& c : cases) {
    const oracle::CaseComparison cmp = oracle::compare_case(c, opt);
    std::size_t k = 0;
    for (const auto& e : cmp.entries) {
      Row r;
      r.name = std::string(to_string(c.id)) + " " + e.name;
      r.pass = e.pass;
      const ExactScalar& x =
          k < 9 ? c.matrix[k / 3][k % 3] : c.higher[k - 9].value;
      r.exact = to_string(x);
      r.value = e.numeric;
      r.rel_err = e.error;
      s.rows.push_back(r);
      ++k;
    }
  }
  return s;
}

Suite identities() {
  Suite all{"identities", {}};
  for (const Suite& s : {exterior_suite(), trace_suite(), halfline_suite(), sphere_suite(),
                         symbol_suite(), chain_suite(), enumeration_suite()})
    all.append(s);
  return all;
}

std::string exact_text(const ExactScalar& x, const std::optional<Rational>& h1) {
  return to_string(h1 ? substitute_h1(x, *h1) : x);
}

nlohmann::json to_json(const Suite& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : s.rows) {
    nlohmann::json j;
    j["name"] = r.name;
    j["status"] = r.pass ? "pass" : "fail";
    j["exact"] = r.exact;
    j["float"] = r.value ? nlohmann::json(*r.value) : nlohmann::json();
    j["rel_err"] = r.rel_err ? nlohmann::json(*r.rel_err) : nlohmann::json();
    rows.push_back(j);
  }
  return rows;
}

nlohmann::json matrix_json(const CoeffMatrix& m, const std::optional<Rational>& h1) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(exact_text(x, h1));
    out.push_back(r);
  }
  return out;
}

nlohmann::json cases_json(const std::vector<CaseResult>& cases, const std::optional<Rational>& h1) {
  nlohmann::json j = nlohmann::json::object();
  for (const CaseResult& c : cases) j[to_string(c.id)] = case_json(c, h1);
  return j;
}

nlohmann::json case_json(const CaseResult& c, const std::optional<Rational>& h1) {
  nlohmann::json j;
  j["index"] = c.index.str();
  j["matrix"] = matrix_json(c.matrix, h1);
  j["terms"] = c.terms;
  j["h1_linear"] = c.h1_linear;
  nlohmann::json higher = nlohmann::json::array();
  for (const SlotValue& v : c.higher)
    higher.push_back({{"f1", v.f1.str()}, {"f2", v.f2.str()}, {"value", exact_text(v.value, h1)}});
  j["higher_slots"] = higher;
  j["higher_slots_vanish"] = c.higher_vanish;
  return j;
}

nlohmann::json omega_json(const OmegaReport& r, const std::optional<Rational>& h1) {
  nlohmann::json j;
  j["h1"] = h1 ? h1->get_str() : "formal";
  j["cases"] = cases_json(r.cases, h1);
  j["total"] = matrix_json(r.total, h1);
  j["flags"] = {{"h1_linear", r.h1_linear},
                {"every_case_h1_linear", r.every_case_h1_linear},
                {"higher_slots_vanish", r.higher_slots_vanish},
                {"isotropic", r.isotropic},
                {"symmetric", r.symmetric},
                {"total_zero", r.total_zero}};
  j["a"] = r.isotropic ? nlohmann::json(to_string(r.a)) : nlohmann::json();
  j["conjecture"] = conjecture_json(r, h1);
  return j;
}

nlohmann::json conjecture_json(const OmegaReport& r, const std::optional<Rational>& h1) {
  nlohmann::json j;
  j["matrix"] = matrix_json(r.conjecture, h1);
  j["isotropic"] = r.conjecture_isotropic;
  j["zero"] = r.conjecture_zero;
  j["a"] = r.conjecture_isotropic ? nlohmann::json(to_string(r.conjecture_a)) : nlohmann::json();
  return j;
}

nlohmann::json enumeration_json(const EnumerationReport& e, bool general) {
  nlohmann::json j;
  nlohmann::json list = nlohmann::json::array();
  for (const CaseIndex& c : general ? e.cases : enumerate_cases(true))
    list.push_back({{"case", to_string(c.id)},
                    {"r", c.r},
                    {"l", c.l},
                    {"k", c.k},
                    {"j", c.j},
                    {"alpha", c.alpha},
                    {"beta_normal", c.beta_normal},
                    {"delta_normal", c.delta_normal}});
  j["mode"] = general ? "general" : "star";
  j["tuples"] = list;
  if (general) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : e.counts) counts.push_back({{"convention", c.convention}, {"count", c.count}});
    j["counts"] = counts;
    j["reference_count"] = e.reference_count;
    j["matching_convention"] =
        e.matching_convention.empty() ? nlohmann::json() : nlohmann::json(e.matching_convention);
  }
  return j;
}

nlohmann::json document(const std::string& mode, const Suite& s, nlohmann::json omega) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["mode"] = mode;
  j["suite"] = s.name;
  j["results"] = to_json(s);
  j["omega"] = std::move(omega);
  return j;
}

std::string text(const Suite& s) {
  std::ostringstream os;
  for (const Row& r : s.rows) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.exact.empty()) os << "  [" << r.exact << "]";
    if (r.value) {
      os.precision(15);
      os << "  float=" << *r.value;
      os.precision(3);
      os << " err=" << *r.rel_err;
    }
    os << "\n";
  }
  return os.str();
}

std::string matrix_text(const CoeffMatrix& m, const std::optional<Rational>& h1) {
  std::ostringstream os;
  for (const auto& row : m) {
    os << " ";
    for (const auto& x : row) os << "  " << exact_text(x, h1);
    os << "\n";
  }
  return os.str();
}

}  // namespace ncres::report
