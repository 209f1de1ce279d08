#include "ncres/residue_engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "ncres/error.hpp"
#include "ncres/halfline.hpp"
#include "ncres/symbols.hpp"

namespace ncres {

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::aI: return "aI";
    case CaseId::aII: return "aII";
    case CaseId::aIII: return "aIII";
    case CaseId::b: return "b";
    case CaseId::c: return "c";
  }
  return "?";
}

CaseId parse_case_id(const std::string& text) {
  for (CaseId id : kAllCases)
    if (text == to_string(id)) return id;
  throw Error(ErrorKind::parse, "unknown case '" + text + "' (expected aI, aII, aIII, b, c)");
}

MultiIndex MultiIndex::unit(int i) {
  if (i < 1 || i > 3) throw Error(ErrorKind::index_out_of_range, "tangential index");
  MultiIndex m;
  m.e[i - 1] = 1;
  return m;
}

Rational MultiIndex::factorial() const {
  Rational f(1);
  for (int x : e)
    for (int k = 2; k <= x; ++k) f *= k;
  return f;
}

std::string MultiIndex::str() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<MultiIndex> multi_indices(int order) {
  std::vector<MultiIndex> out;
  for (int a = order; a >= 0; --a)
    for (int b = order - a; b >= 0; --b) out.push_back(MultiIndex{{a, b, order - a - b}});
  return out;
}

std::string CaseIndex::str() const {
  std::ostringstream os;
  os << to_string(id) << " (r=" << r << ", l=" << l << ", k=" << k << ", j=" << j
     << ", |alpha|=" << alpha;
  if (beta_normal || delta_normal)
    os << ", beta''=" << beta_normal << ", delta''=" << delta_normal;
  os << ")";
  return os.str();
}

namespace {

// The five (r, l, k, j, |alpha|) tuples allowed by -(r+l) + |alpha| + k + j = 3.
std::vector<CaseIndex> coarse_tuples() {
  std::vector<CaseIndex> out;
  for (int r = -1; r >= -3; --r)
    for (int l = -1; l >= -3; --l)
      for (int rest = 0; rest <= 1; ++rest) {
        if (-(r + l) + rest != 3) continue;
        for (int alpha = 0; alpha <= rest; ++alpha)
          for (int k = 0; k <= rest - alpha; ++k) {
            const int j = rest - alpha - k;
            CaseId id;
            if (r == -2)
              id = CaseId::b;
            else if (l == -2)
              id = CaseId::c;
            else if (alpha == 1)
              id = CaseId::aI;
            else if (j == 1)
              id = CaseId::aII;
            else
              id = CaseId::aIII;
            out.push_back(CaseIndex{id, r, l, k, j, alpha});
          }
      }
  std::sort(out.begin(), out.end(),
            [](const CaseIndex& a, const CaseIndex& b) { return a.id < b.id; });
  return out;
}

// (|beta'|, beta'') pairs with 1 <= |beta'| + beta'' <= -r.
std::vector<std::pair<int, int>> split_orders(int r, bool star) {
  std::vector<std::pair<int, int>> out;
  for (int normal = 0; normal <= (star ? 0 : -r); ++normal)
    for (int tangential = 0; tangential + normal <= -r; ++tangential)
      if (tangential + normal >= 1) out.emplace_back(tangential, normal);
  return out;
}

}  // namespace

std::vector<CaseIndex> enumerate_cases(bool star) {
  std::vector<CaseIndex> out;
  for (const CaseIndex& base : coarse_tuples()) {
    std::set<int> beta_normals, delta_normals;
    for (auto [t, nrm] : split_orders(base.r, star)) beta_normals.insert(nrm);
    for (auto [t, nrm] : split_orders(base.l, star)) delta_normals.insert(nrm);
    for (int bn : beta_normals)
      for (int dn : delta_normals) {
        CaseIndex c = base;
        c.beta_normal = bn;
        c.delta_normal = dn;
        out.push_back(c);
      }
  }
  return out;
}

EnumerationReport enumerate_general() {
  EnumerationReport rep;
  rep.cases = enumerate_cases(false);
  const auto coarse = coarse_tuples();

  int total_order = 0, magnitude = 0, full = 0;
  for (const CaseIndex& c : coarse) {
    const auto bs = split_orders(c.r, false), ds = split_orders(c.l, false);
    std::set<int> b_tot, d_tot;
    for (auto [t, n] : bs) b_tot.insert(t + n);
    for (auto [t, n] : ds) d_tot.insert(t + n);
    total_order += static_cast<int>(b_tot.size() * d_tot.size());
    magnitude += static_cast<int>(bs.size() * ds.size());
    auto count_multi = [](const std::vector<std::pair<int, int>>& s) {
      std::size_t n = 0;
      for (auto [t, nrm] : s) n += multi_indices(t).size();
      return n;
    };
    full += static_cast<int>(multi_indices(c.alpha).size() * count_multi(bs) * count_multi(ds));
  }
  rep.counts = {
      {"(r,l,k,j,|alpha|)", static_cast<int>(coarse.size())},
      {"(r,l,k,j,|alpha|,|beta|,|delta|)", total_order},
      {"(r,l,k,j,|alpha|,beta'',delta'')", static_cast<int>(rep.cases.size())},
      {"(r,l,k,j,|alpha|,|beta'|,beta'',|delta'|,delta'')", magnitude},
      {"(r,l,k,j,alpha,beta',beta'',delta',delta'')", full},
  };
  for (const auto& c : rep.counts)
    if (c.count == rep.reference_count) {
      rep.matching_convention = c.convention;
      break;
    }
  return rep;
}

GaussRational case_prefactor(const CaseIndex& c, const MultiIndex& alpha, const MultiIndex& beta,
                             const MultiIndex& delta) {
  if (alpha.order() != c.alpha)
    throw Error(ErrorKind::degree_out_of_range, "alpha does not match the case");
  const int power = c.j + c.k + 1 + alpha.order() + beta.order() + delta.order();
  Rational den = alpha.factorial() * beta.factorial() * delta.factorial();
  for (int m = 2; m <= c.j + c.k + 1; ++m) den *= m;
  return (-GaussRational::i()).pow(power) / GaussRational(den);
}

CaseIndex star_case(CaseId id) {
  for (const CaseIndex& c : enumerate_cases(true))
    if (c.id == id) return c;
  throw Error(ErrorKind::unsupported_case, to_string(id));
}

namespace {

RadialRational xi_derivs(RadialRational s, const MultiIndex& m, int normal_times = 0) {
  const SymbolFrame& f = s.frame();
  for (int i = 0; i < 3; ++i) s = s.deriv(f.tangential(i + 1), m.e[i]);
  return s.deriv(f.normal(), normal_times);
}

XOrder tangential_x(const MultiIndex& m) { return XOrder{m.e[0], m.e[1], m.e[2], 0}; }

}  // namespace

std::vector<SlotTerm> case_integrands(const CaseIndex& c) {
  if (c.beta_normal != 0 || c.delta_normal != 0)
    throw Error(ErrorKind::unsupported_case,
                c.str() + ": x_n-dependent f1, f2 need metric jets beyond h'(0)");
  const RadialRational L = sigma_L();
  const auto ones = multi_indices(1);
  std::vector<SlotTerm> out;
  auto push = [&](MultiIndex f1, MultiIndex f2, const MultiIndex& alpha, const MultiIndex& beta,
                  const MultiIndex& delta, RadialRational first, int dn, RadialRational second,
                  std::string label) {
    out.push_back(SlotTerm{f1, f2, case_prefactor(c, alpha, beta, delta),
                           TraceTerm{std::move(first), dn, std::move(second)}, std::move(label)});
  };
  const MultiIndex none;

  switch (c.id) {
    case CaseId::aI:
      // d_x^alpha hits either f2 (second-derivative slot) or sigma_L, whose
      // tangential jet is zero.
      for (const auto& alpha : ones)
        for (const auto& beta : ones)
          for (const auto& delta : ones) {
            RadialRational first = xi_derivs(L, alpha + beta);
            push(beta, alpha + delta, alpha, beta, delta, first, 0, xi_derivs(L, delta, 1),
                 "alpha on f2");
            push(beta, delta, alpha, beta, delta, first, 0,
                 xi_derivs(sigma_L_jet(tangential_x(alpha)), delta, 1), "alpha on sigma_L");
          }
      break;
    case CaseId::aII: {
      const RadialRational dL = sigma_L_jet(x_unit(4));
      for (const auto& beta : ones)
        for (const auto& delta : ones)
          push(beta, delta, none, beta, delta, xi_derivs(dL, beta), 0, xi_derivs(L, delta, 2),
               "");
      break;
    }
    case CaseId::aIII: {
      const RadialRational dL = sigma_L_jet(x_unit(4));
      for (const auto& beta : ones)
        for (const auto& delta : ones)
          push(beta, delta, none, beta, delta, xi_derivs(L, beta), 1, xi_derivs(dL, delta, 1),
               "");
      break;
    }
    case CaseId::b:
      for (int order = 1; order <= 2; ++order) {
        const RadialRational s = sigma_F(-2 + order);
        for (const auto& beta : multi_indices(order))
          for (const auto& delta : ones)
            push(beta, delta, none, beta, delta, xi_derivs(s, beta), 0, xi_derivs(L, delta, 1),
                 "|beta'|=" + std::to_string(order));
      }
      break;
    case CaseId::c:
      for (int order = 1; order <= 2; ++order) {
        const RadialRational s = sigma_F(-2 + order);
        for (const auto& beta : ones)
          for (const auto& delta : multi_indices(order))
            push(beta, delta, none, beta, delta, xi_derivs(L, beta), 0, xi_derivs(s, delta, 1),
                 "|delta'|=" + std::to_string(order));
      }
      break;
  }
  return out;
}

std::vector<SlotTerm> case_integrands(CaseId id) { return case_integrands(star_case(id)); }

ExactComplex trace_integral(const TraceTerm& t) {
  if (t.first.is_zero() || t.second.is_zero()) return {};
  HalfDecomp<ExtOp> a = pi_plus(decompose(restrict_sphere(t.first)));
  for (int i = 0; i < t.dn; ++i) a = deriv_xin(a);
  const HalfDecomp<ExtOp> b = decompose(restrict_sphere(t.second));
  const HalfDecomp<Poly> traced =
      combine(a, b, [](const ExtOp& x, const ExtOp& y) { return trace_product(x, y, 2); });
  const Poly line = integrate_line(traced);  // coefficient of pi
  return integrate_poly(line, t.first.frame().tangential_variables()).shifted(1, 0);
}

CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b) {
  CoeffMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = a[i][j] + b[i][j];
  return out;
}

bool is_zero(const CoeffMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

CoeffMatrix substitute_h1(const CoeffMatrix& m, const Rational& h1) {
  CoeffMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = substitute_h1(m[i][j], h1);
  return out;
}

CaseResult eval_case(const CaseIndex& c) {
  CaseResult res{c.id, c, {}, {}, {}, 0, false, false};
  std::map<std::pair<MultiIndex, MultiIndex>, ExactComplex> acc;
  for (const SlotTerm& s : case_integrands(c)) {
    const int deg = s.term.degree();
    res.degrees.push_back(deg);
    if (deg != -4)
      throw Error(ErrorKind::homogeneity, std::string(to_string(c.id)) + " integrand has degree " +
                                              std::to_string(deg) + ", expected -4");
    acc[{s.f1, s.f2}] += trace_integral(s.term) * s.prefactor;
    ++res.terms;
  }
  for (const auto& [slot, value] : acc) {
    const auto& [f1, f2] = slot;
    ExactScalar real = real_part_checked(
        value, std::string("case ") + to_string(c.id) + " slot d^" + f1.str() + " f1 d^" + f2.str() + " f2");
    if (f1.order() == 1 && f2.order() == 1) {
      int i = 0, j = 0;
      while (f1.e[i] == 0) ++i;
      while (f2.e[j] == 0) ++j;
      res.matrix[i][j] += real;
    } else {
      res.higher.push_back({f1, f2, real});
    }
  }
  res.h1_linear = true;
  for (const auto& row : res.matrix)
    for (const auto& x : row) res.h1_linear = res.h1_linear && is_h1_linear(x);
  res.higher_vanish = std::all_of(res.higher.begin(), res.higher.end(),
                                  [](const SlotValue& v) { return v.value.is_zero(); });
  return res;
}

CaseResult eval_case(CaseId id) { return eval_case(star_case(id)); }

namespace {

bool isotropic(const CoeffMatrix& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i != j && !m[i][j].is_zero()) return false;
      if (i == j && !(m[i][j] == m[0][0])) return false;
    }
  return true;
}

bool h1_linear(const CoeffMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!is_h1_linear(x)) return false;
  return true;
}

}  // namespace

OmegaReport assemble(std::vector<CaseResult> cases) {
  OmegaReport rep;
  rep.cases = std::move(cases);
  rep.every_case_h1_linear = true;
  rep.higher_slots_vanish = true;
  for (const CaseResult& c : rep.cases) {
    rep.total = rep.total + c.matrix;
    if (c.id == CaseId::b || c.id == CaseId::c) rep.conjecture = rep.conjecture + c.matrix;
    rep.every_case_h1_linear = rep.every_case_h1_linear && c.h1_linear;
    rep.higher_slots_vanish = rep.higher_slots_vanish && c.higher_vanish;
  }
  rep.h1_linear = h1_linear(rep.total);
  rep.total_zero = is_zero(rep.total);
  rep.conjecture_zero = is_zero(rep.conjecture);
  rep.symmetric = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rep.symmetric = rep.symmetric && rep.total[i][j] == rep.total[j][i];
  rep.isotropic = isotropic(rep.total);
  if (rep.isotropic && rep.h1_linear) rep.a = divide_h1(rep.total[0][0]);
  rep.conjecture_isotropic = isotropic(rep.conjecture);
  if (rep.conjecture_isotropic && h1_linear(rep.conjecture))
    rep.conjecture_a = divide_h1(rep.conjecture[0][0]);
  return rep;
}

OmegaReport omega3() {
  std::vector<CaseResult> cases;
  for (CaseId id : kAllCases) cases.push_back(eval_case(id));
  return assemble(std::move(cases));
}

ChainReport remark1_chain(int beta, int delta) {
  const SymbolFrame fx(4, Cotangent::xi), fe(4, Cotangent::eta);
  RadialRational s = sigma_minus1_F(fx);
  RadialRational L = sigma_L(fe);
  if (beta) s = s.deriv(fx.tangential(beta));
  if (delta) L = L.deriv(fe.tangential(delta));

  const HalfDecomp<ExtOp> S = decompose(restrict_sphere(s));
  const HalfDecomp<ExtOp> Lh = decompose(restrict_sphere(L));
  auto tr = [](const ExtOp& x, const ExtOp& y) { return trace_product(x, y, 2); };
  auto integral = [&](const HalfDecomp<ExtOp>& x, const HalfDecomp<ExtOp>& y) {
    return integrate_line(combine(x, y, tr));
  };

  ChainReport rep;
  rep.value[0] = integral(deriv_xin(pi_plus(S)), Lh);
  rep.value[1] = integral(deriv_xin(S), Lh) - integral(deriv_xin(pi_minus(S)), Lh);
  rep.value[2] = -integral(S, deriv_xin(Lh)) - integral(pi_plus(Lh), deriv_xin(pi_minus(S)));
  rep.value[3] = -integral(S, deriv_xin(Lh)) - integral(pi_plus(Lh), deriv_xin(S));

  const char* names[3] = {"pi+ = id - pi- split", "integration by parts with trace cyclicity",
                          "++ term vanishes"};
  for (int k = 0; k < 3; ++k) {
    const Poly diff = rep.value[k] - rep.value[k + 1];
    rep.checks.push_back({names[k], diff.is_zero(),
                          diff.is_zero() ? rep.value[k + 1].str() : diff.str(),
                          "step " + std::to_string(k + 1) + " of the chain"});
  }
  return rep;
}

}  // namespace ncres
