#include "ncres/trace_identities.hpp"

#include "ncres/error.hpp"

namespace ncres {

void require_all(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) throw Error(ErrorKind::identity_violation, c.name + " (" + c.detail + ")");
}

Rational binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

Poly a_m_trace(int n, int m, const Covector& xi1, const Covector& xi2, const Covector& eta1,
               const Covector& eta2) {
  if (m < 1 || m > n) throw Error(ErrorKind::degree_out_of_range, "a_m needs 1 <= m <= n");
  for (const Covector* v : {&xi1, &xi2, &eta1, &eta2})
    if (v->dim() != n) throw Error(ErrorKind::dimension_mismatch, "covector length");
  return trace_product(wedge_op(xi1) * contract_op(xi2), wedge_op(eta1) * contract_op(eta2), m);
}

Rational alternating_coeff(int n, int m) {
  if (m < 0 || m > n) throw Error(ErrorKind::degree_out_of_range, "A_{n,m} needs 0 <= m <= n");
  Rational sum(0);
  for (int k = 0; k <= m; ++k) {
    Rational c = binomial(n, k);
    if ((m - k) % 2 == 0)
      sum += c;
    else
      sum -= c;
  }
  return sum;
}

TraceConstants pq_constants_formula(int n, int m) {
  TraceConstants tc{n, m, 0, 0};
  tc.b = binomial(n - 2, m - 2) + binomial(n - 2, m) - 2 * binomial(n - 2, m - 1);
  tc.a = binomial(n, m) - tc.b;
  return tc;
}

TraceConstants pq_constants_brute(int n, int m) {
  if (n < 2) throw Error(ErrorKind::dimension_mismatch, "need n >= 2");
  Covector xi = Covector::formal(n, vars::xi), eta = Covector::formal(n, vars::eta);
  Poly tr = trace_product(p_op(xi), p_op(eta), m);

  // a + b from xi1^2 eta1^2, b from xi1^2 eta2^2.
  auto coeff = [&tr](Var x, Var y) {
    Monomial mono;
    mono.exp[x.index] = 2;
    mono.exp[y.index] = 2;
    for (const auto& [mm, c] : tr.terms())
      if (mm == mono) return c;
    return GaussRational(0);
  };
  GaussRational apb = coeff(vars::xi(1), vars::eta(1));
  GaussRational b = coeff(vars::xi(1), vars::eta(2));
  if (!apb.is_real() || !b.is_real())
    throw Error(ErrorKind::identity_violation, "non-real trace coefficient");
  TraceConstants tc{n, m, apb.re() - b.re(), b.re()};

  Poly ip = pairing(xi, eta);
  Poly fit = Poly(GaussRational(tc.a)) * ip * ip +
             Poly(GaussRational(tc.b)) * pairing(xi, xi) * pairing(eta, eta);
  if (!(fit == tr))
    throw Error(ErrorKind::identity_violation,
                "tr[p(xi)p(eta)] is not of the form a<xi,eta>^2 + b|xi|^2|eta|^2 for n=" +
                    std::to_string(n) + ", m=" + std::to_string(m));
  return tc;
}

TraceConstants pq_constants(int n, int m) {
  if (m < 0 || m > n) throw Error(ErrorKind::degree_out_of_range, "pq_constants degree");
  TraceConstants brute = pq_constants_brute(n, m);
  if (m >= 2 && m <= n - 2) {
    TraceConstants closed = pq_constants_formula(n, m);
    if (!(closed == brute))
      throw Error(ErrorKind::identity_violation,
                  "closed form (" + closed.a.get_str() + "," + closed.b.get_str() +
                      ") != brute force (" + brute.a.get_str() + "," + brute.b.get_str() + ")");
  }
  return brute;
}

namespace {

struct Formal4 {
  Covector xi1, xi2, eta1, eta2;
  explicit Formal4(int n)
      : xi1(Covector::formal(n, vars::xi)),
        xi2(Covector::formal(n, vars::eta)),
        eta1(Covector::formal(n, vars::zeta)),
        eta2(Covector::formal(n, vars::theta)) {}
};

IdentityCheck compare(std::string name, const Poly& lhs, const Poly& rhs, std::string detail) {
  Poly residual = lhs - rhs;
  return {std::move(name), residual.is_zero(), residual.is_zero() ? lhs.str() : residual.str(),
          std::move(detail)};
}

}  // namespace

IdentityCheck check_recursion(int n, int m) {
  Formal4 f(n);
  Poly lhs = a_m_trace(n, m + 1, f.eta1, f.xi2, f.xi1, f.eta2);
  Rational c = 2 * alternating_coeff(n, m) - binomial(n, m);
  Poly rhs = a_m_trace(n, m, f.xi1, f.xi2, f.eta1, f.eta2) +
             pairing(f.xi1, f.xi2) * pairing(f.eta1, f.eta2) * GaussRational(c);
  return compare("a_m recursion n=" + std::to_string(n) + " m=" + std::to_string(m), lhs, rhs,
                 "a_{m+1}(eta1,xi2,xi1,eta2) - a_m(xi1,xi2,eta1,eta2) - <xi1,xi2><eta1,eta2>"
                 "[2A-C], coefficient " + c.get_str());
}

IdentityCheck check_a1(int n) {
  Formal4 f(n);
  return compare("a_1 closed form n=" + std::to_string(n),
                 a_m_trace(n, 1, f.xi1, f.xi2, f.eta1, f.eta2),
                 pairing(f.eta2, f.xi1) * pairing(f.xi2, f.eta1), "a_1 - <eta2,xi1><xi2,eta1>");
}

IdentityCheck check_a2_closed_form(int n) {
  Formal4 f(n);
  Rational c = 2 * alternating_coeff(n, 1) - n;
  Poly rhs = pairing(f.eta2, f.xi1) * pairing(f.xi2, f.eta1) +
             pairing(f.xi1, f.xi2) * pairing(f.eta1, f.eta2) * GaussRational(c);
  return compare("a_2 closed form n=" + std::to_string(n),
                 a_m_trace(n, 2, f.eta1, f.xi2, f.xi1, f.eta2), rhs,
                 "a_2(eta1,xi2,xi1,eta2) against the recursion from a_1");
}

std::vector<IdentityCheck> remark2_full() {
  constexpr int n = 4;
  std::vector<IdentityCheck> out;
  const Poly h1 = Poly::var(vars::h1());
  const Covector xi = Covector::formal(n, vars::xi), eta = Covector::formal(n, vars::eta);
  const Covector xi_t = xi.tangential(), eta_t = eta.tangential();
  const Covector dxn = Covector::basis(n, n);
  const Poly& xin = xi[n - 1];
  const Poly& etan = eta[n - 1];
  const ExtOp id = ExtOp::identity(n);

  // d_{x_n} p(xi) at the base point: d_{x_n} i(xi) = h1 i(xi'), d e = 0.
  const ExtOp dxn_p = (wedge_op(xi) * contract_op(xi_t) - contract_op(xi_t) * wedge_op(xi)) * h1;
  const ExtOp B = (wedge_op(dxn) * contract_op(xi_t) - contract_op(xi_t) * wedge_op(dxn)) * h1;
  out.push_back({"normal jet of p splits as h1 p(xi',0) + xi_n B", dxn_p == p_op(xi_t) * h1 + B * xin,
                 "", "d_{x_n}p(xi) - h1 p(xi',0) - xi_n B"});

  const ExtOp anti = wedge_op(dxn) * contract_op(xi_t) - contract_op(xi_t) * wedge_op(dxn);
  out.push_back({"e(dx_n)i(xi') - i(xi')e(dx_n) = 2 e(dx_n)i(xi')",
                 anti == wedge_op(dxn) * contract_op(xi_t) * GaussRational(2), "",
                 "uses <dx_n, xi'> = 0"});
  out.push_back({"p(eta) = 2 e(eta)i(eta) - |eta|^2 I",
                 p_op(eta) == wedge_op(eta) * contract_op(eta) * GaussRational(2) -
                                  id * pairing(eta, eta),
                 "", "all degrees"});
  out.push_back(compare("tr_2[e(dx_n)i(xi')] = 0", graded_trace(wedge_op(dxn) * contract_op(xi_t), 2),
                        Poly(), "identically in xi'"));
  const Poly a2 = a_m_trace(n, 2, dxn, xi_t, eta, eta);
  out.push_back(compare("a_2(dx_n, xi', eta, eta) = 2 eta_n <xi',eta'>", a2,
                        Poly(2) * etan * pairing(xi_t, eta_t), "degree-2 trace"));

  TraceConstants tc = pq_constants(n, 2);
  out.push_back({"(a_{4,2}, b_{4,2}) = (8, -2)", tc.a == 8 && tc.b == -2,
                 "(" + tc.a.get_str() + ", " + tc.b.get_str() + ")",
                 "closed form and brute force agree"});

  const Poly tr = trace_product(dxn_p, p_op(eta), 2);
  const Poly ip_t = pairing(xi_t, eta_t);
  const Poly bulk = h1 * (GaussRational(tc.a) * ip_t * ip_t +
                          GaussRational(tc.b) * pairing(xi_t, xi_t) * pairing(eta, eta));
  out.push_back(compare(
      "expansion through tr[e(dx_n)i(xi')e(eta)i(eta)] and tr[e(dx_n)i(xi')]", tr,
      bulk + Poly(4) * h1 * xin * trace_product(wedge_op(dxn) * contract_op(xi_t),
                                                wedge_op(eta) * contract_op(eta), 2) -
          Poly(2) * pairing(eta, eta) * h1 * xin *
              graded_trace(wedge_op(dxn) * contract_op(xi_t), 2),
      "bulk + 4 h1 xi_n tr[...] - 2|eta|^2 h1 xi_n tr[...]"));

  // The cross term must be c * h1 xi_n eta_n <xi',eta'>; read c off one
  // monomial and check the whole remainder.
  const Poly cross = tr - bulk;
  GaussRational c(0);
  {
    Monomial mono;
    mono.exp[vars::h1().index] = 1;
    mono.exp[vars::xi(n).index] = 1;
    mono.exp[vars::eta(n).index] = 1;
    mono.exp[vars::xi(1).index] = 1;
    mono.exp[vars::eta(1).index] = 1;
    for (const auto& [m, q] : cross.terms())
      if (m == mono) c = q;
  }
  const bool cross_ok = cross == Poly(c) * h1 * xin * etan * ip_t;
  out.push_back({"cross-term coefficient is 8", cross_ok && c == GaussRational(8), c.str(),
                 "tr_2{[d_{x_n}p(xi)]p(eta)} - h1[a<xi',eta'>^2 + b|xi'|^2|eta|^2]"});
  out.push_back(compare("tr_2{[d_{x_n}p(xi)]p(eta)} full identity", tr,
                        bulk + Poly(8) * h1 * xin * etan * ip_t, "with (a,b) = (8,-2)"));
  return out;
}

}  // namespace ncres
