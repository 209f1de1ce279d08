#include "oracle.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "ncres/error.hpp"

namespace ncres::oracle {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// A polynomial flattened for repeated evaluation at many points.
struct FlatPoly {
  struct Term {
    cd coeff;
    std::vector<std::pair<int, int>> powers;  // (slot, exponent)
  };
  std::vector<Term> terms;

  explicit FlatPoly(const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
      Term t{c.to_complex(), {}};
      for (int s = 0; s < kMaxVars; ++s)
        if (m.exp[s]) t.powers.emplace_back(s, m.exp[s]);
      terms.push_back(std::move(t));
    }
  }

  cd eval(const std::vector<std::vector<double>>& pow) const {
    cd sum = 0;
    for (const auto& t : terms) {
      double v = 1;
      for (auto [s, e] : t.powers) v *= pow[s][e];
      sum += t.coeff * v;
    }
    return sum;
  }
};

// Entries of one xi_n-power coefficient that can reach the degree-2 trace.
struct FlatBlock {
  int power;
  std::vector<std::tuple<int, int, FlatPoly>> entries;  // (row, col, value)
};

std::vector<FlatBlock> flatten(const ExtOp& num, Var normal, bool rows_in_block) {
  const auto [lo, hi] = num.basis().block(2);
  std::vector<FlatBlock> out;
  for (const auto& [p, op] : num.split(normal)) {
    FlatBlock b{p, {}};
    for (int r = 0; r < op.dim(); ++r)
      for (int c = 0; c < op.dim(); ++c) {
        const int in_block = rows_in_block ? r : c;
        if (in_block < lo || in_block >= hi || op(r, c).is_zero()) continue;
        b.entries.emplace_back(r, c, FlatPoly(op(r, c)));
      }
    if (!b.entries.empty()) out.push_back(std::move(b));
  }
  return out;
}

int tangential_degree(const ExtOp& num, std::span<const Var> tangential) {
  int d = 0;
  for (int r = 0; r < num.dim(); ++r)
    for (int c = 0; c < num.dim(); ++c)
      for (const auto& [m, q] : num(r, c).terms()) d = std::max(d, m.degree_in(tangential));
  return d;
}

struct GaussRule {
  std::vector<double> x, w;
};

template <int N>
GaussRule gauss_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  GaussRule r;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.x.push_back(a[i]);
    r.w.push_back(w[i]);
    if (a[i] != 0) {
      r.x.push_back(-a[i]);
      r.w.push_back(w[i]);
    }
  }
  return r;
}

// Exact for polynomials of degree <= 2N - 1 on [-1, 1].
GaussRule legendre_for_degree(int degree) {
  if (degree <= 7) return gauss_rule<4>();
  if (degree <= 15) return gauss_rule<8>();
  if (degree <= 23) return gauss_rule<12>();
  if (degree <= 39) return gauss_rule<20>();
  throw Error(ErrorKind::degree_out_of_range,
              "sphere integrand degree " + std::to_string(degree) + " beyond the oracle rules");
}

template <class F>
cd integrate_line(F f, double tol) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double inf = std::numeric_limits<double>::infinity();
  return GK::integrate(f, -inf, inf, 20, tol);
}

}  // namespace

std::complex<double> pi_plus_scalar(const Poly& numerator, int k, Var normal, double x,
                                    const Options& opt) {
  std::vector<std::complex<double>> point(kMaxVars, 0.0);
  point[vars::h1().index] = opt.h1;
  const int M = opt.circle_points;
  cd sum = 0;
  for (int m = 0; m < M; ++m) {
    const cd e = std::polar(opt.circle_radius, 2 * kPi * m / M);
    const cd w = cd(0, -1) + e;
    point[normal.index] = w;
    const cd f = numerator.eval(point) / std::pow(w * w + 1.0, k);
    sum += f * e / (x - w);
  }
  return sum / double(M);
}

std::complex<double> trace_integral(const TraceTerm& t, const Options& opt) {
  if (t.first.is_zero() || t.second.is_zero()) return 0;
  const SymbolFrame& frame = t.first.frame();
  const Var normal = frame.normal();
  const auto tang = frame.tangential_variables();
  const auto A = flatten(t.first.numerator(), normal, true);
  const auto B = flatten(t.second.numerator(), normal, false);
  const int kA = t.first.k(), kB = t.second.k();
  const int dim = t.first.numerator().dim();
  int max_p = 0;
  for (const auto& b : B) max_p = std::max(max_p, b.power);

  const int degree =
      tangential_degree(t.first.numerator(), tang) + tangential_degree(t.second.numerator(), tang);
  const GaussRule gl = legendre_for_degree(degree);
  const int nphi = degree + 2;

  // Circle nodes around -i and their weights in the Cauchy sum for pi+.
  const int M = opt.circle_points;
  std::vector<cd> w(M), cw(M);
  for (int m = 0; m < M; ++m) {
    const cd e = std::polar(opt.circle_radius, 2 * kPi * m / M);
    w[m] = cd(0, -1) + e;
    cw[m] = e / double(M);
  }
  double dn_fact = 1;
  for (int i = 2; i <= t.dn; ++i) dn_fact *= i;
  const double dn_sign = t.dn % 2 ? -1.0 : 1.0;

  int max_exp = 1;
  for (const ExtOp* op : {&t.first.numerator(), &t.second.numerator()})
    for (int r = 0; r < op->dim(); ++r)
      for (int c = 0; c < op->dim(); ++c)
        for (const auto& [m, q] : (*op)(r, c).terms())
          for (auto e : m.exp) max_exp = std::max<int>(max_exp, e);
  std::vector<std::vector<double>> pow(kMaxVars);
  auto set_point = [&](const std::array<double, 3>& xi) {
    for (auto& v : pow) v.assign(1, 1.0);
    auto fill = [&](int slot, double value) {
      pow[slot].resize(max_exp + 1);
      for (int e = 1; e <= max_exp; ++e) pow[slot][e] = pow[slot][e - 1] * value;
    };
    for (int i = 0; i < 3; ++i) fill(tang[i].index, xi[i]);
    fill(vars::h1().index, opt.h1);
  };

  cd total = 0;
  for (std::size_t a = 0; a < gl.x.size(); ++a)
    for (int b = 0; b < nphi; ++b) {
      const double u = gl.x[a], phi = 2 * kPi * b / nphi, s = std::sqrt(1 - u * u);
      const double weight = gl.w[a] * 2 * kPi / nphi;
      set_point({s * std::cos(phi), s * std::sin(phi), u});

      // Evaluate the split numerators, then T[q][p] = tr_2[A_q B_p].
      std::vector<std::vector<cd>> Aval(A.size(), std::vector<cd>(dim * dim));
      std::vector<std::vector<cd>> Bval(B.size(), std::vector<cd>(dim * dim));
      for (std::size_t q = 0; q < A.size(); ++q)
        for (const auto& [r, c, f] : A[q].entries) Aval[q][r * dim + c] = f.eval(pow);
      for (std::size_t p = 0; p < B.size(); ++p)
        for (const auto& [r, c, f] : B[p].entries) Bval[p][r * dim + c] = f.eval(pow);
      const auto [lo, hi] = t.first.numerator().basis().block(2);
      std::vector<std::vector<cd>> T(A.size(), std::vector<cd>(B.size()));
      for (std::size_t q = 0; q < A.size(); ++q)
        for (std::size_t p = 0; p < B.size(); ++p) {
          cd tr = 0;
          for (int i = lo; i < hi; ++i)
            for (int k = 0; k < dim; ++k) tr += Aval[q][i * dim + k] * Bval[p][k * dim + i];
          T[q][p] = tr;
        }
      // U[m][p] = sum_q A-factor at the circle node times T[q][p], with the
      // Cauchy weight folded in.
      std::vector<std::vector<cd>> U(M, std::vector<cd>(max_p + 1));
      for (int m = 0; m < M; ++m) {
        const cd den = std::pow(w[m] * w[m] + 1.0, kA);
        for (std::size_t q = 0; q < A.size(); ++q) {
          const cd g = cw[m] * dn_sign * dn_fact * std::pow(w[m], A[q].power) / den;
          for (std::size_t p = 0; p < B.size(); ++p) U[m][B[p].power] += g * T[q][p];
        }
      }
      auto integrand = [&](double x) {
        cd sum = 0;
        for (int m = 0; m < M; ++m) {
          cd inner = U[m][max_p];
          for (int p = max_p - 1; p >= 0; --p) inner = inner * x + U[m][p];
          const cd inv = 1.0 / (x - w[m]);
          cd f = inv;
          for (int d = 0; d < t.dn; ++d) f *= inv;
          sum += f * inner;
        }
        double den = 1;
        for (int i = 0; i < kB; ++i) den *= x * x + 1;
        return sum / den;
      };
      total += weight * integrate_line(integrand, opt.line_tol);
    }
  return total;
}

CaseComparison compare_case(const CaseResult& exact, const Options& opt, double tol) {
  std::map<std::pair<MultiIndex, MultiIndex>, cd> numeric;
  for (const SlotTerm& s : case_integrands(exact.index))
    numeric[{s.f1, s.f2}] += s.prefactor.to_complex() * trace_integral(s.term, opt);

  const double scale = kPi * kPi * std::max(1.0, std::abs(opt.h1));
  CaseComparison out{exact.id, {}, true};
  auto add = [&](const std::string& name, const ExactScalar& x, cd num) {
    Comparison c;
    c.name = name;
    c.exact = to_double(x, opt.h1);
    c.numeric = num.real();
    const double diff = std::abs(num - cd(c.exact, 0));
    if (x.is_zero()) {
      c.relative = false;
      c.error = diff;
      c.pass = diff <= tol * scale;
    } else {
      c.error = diff / std::abs(c.exact);
      c.pass = c.error <= tol;
    }
    out.pass = out.pass && c.pass;
    out.entries.push_back(c);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      add("a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", exact.matrix[i][j],
          numeric[{MultiIndex::unit(i + 1), MultiIndex::unit(j + 1)}]);
  for (const SlotValue& v : exact.higher)
    add("d^" + v.f1.str() + " f1 d^" + v.f2.str() + " f2", v.value, numeric[{v.f1, v.f2}]);
  return out;
}

}  // namespace ncres::oracle
