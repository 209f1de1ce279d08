#pragma once

// The boundary residue form Omega_3(f1, f2) at a boundary point of a
// four-manifold with metric h(x_n)^{-1} g_boundary + dx_n^2, h1 = h'(0)
// formal.
//
// Each term of the residue sum is
//   int_{|xi'|=1} int_R tr_{Lambda^2}[ d_{xi_n}^dn pi+ (first) * second ] dxi_n dsigma
// times a scalar prefactor, and it multiplies a product of tangential
// derivatives of f1 and f2 (its "slot"). First-order slots d_i f1 d_j f2 fill
// the 3x3 coefficient matrix; slots with a second derivative are kept
// separately.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ncres/identity.hpp"
#include "ncres/sphere_quadrature.hpp"
#include "ncres/symbolic_ring.hpp"

namespace ncres {

enum class CaseId { aI, aII, aIII, b, c };
inline constexpr std::array<CaseId, 5> kAllCases{CaseId::aI, CaseId::aII, CaseId::aIII,
                                                 CaseId::b, CaseId::c};
const char* to_string(CaseId id);
CaseId parse_case_id(const std::string& text);

// Tangential multi-index (x_1, x_2, x_3) or (xi'_1, xi'_2, xi'_3).
struct MultiIndex {
  std::array<int, 3> e{};

  static MultiIndex unit(int i);  // 1-based
  int order() const { return e[0] + e[1] + e[2]; }
  Rational factorial() const;
  std::string str() const;  // "x1x2", "x3^2", "1" for the empty index
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (int i = 0; i < 3; ++i) a.e[i] += b.e[i];
    return a;
  }
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// All tangential multi-indices of the given order, in lexicographic order
// of (e1, e2, e3) descending.
std::vector<MultiIndex> multi_indices(int order);

// One index tuple of the residue sum: -(r+l) + |alpha| + k + j = 3 with
// r, l <= -1, and normal derivative orders beta'', delta'' of f1, f2.
struct CaseIndex {
  CaseId id;
  int r, l, k, j, alpha;
  int beta_normal = 0;
  int delta_normal = 0;
  std::string str() const;
  friend bool operator==(const CaseIndex&, const CaseIndex&) = default;
};

// star = true: f1, f2 independent of x_n; exactly the five cases.
// star = false: every (r, l, k, j, |alpha|, beta'', delta'') that admits
// some beta', delta' with 1 <= |beta'| + beta'' <= -r, 1 <= |delta'| + delta'' <= -l.
std::vector<CaseIndex> enumerate_cases(bool star);

struct EnumerationCount {
  std::string convention;
  int count;
};
struct EnumerationReport {
  std::vector<CaseIndex> cases;  // general mode, one per normal-order tuple
  std::vector<EnumerationCount> counts;
  int reference_count = 24;
  std::string matching_convention;  // empty when none matches
};
EnumerationReport enumerate_general();

// (-i)^{j+k+1+|alpha|+|beta'|+|delta'|} / (alpha! beta'! delta'! (j+k+1)!)
GaussRational case_prefactor(const CaseIndex& c, const MultiIndex& alpha, const MultiIndex& beta,
                             const MultiIndex& delta);

struct TraceTerm {
  RadialRational first;  // xi-derivatives applied; pi+ is applied next
  int dn = 0;            // d/dxi_n after pi+
  RadialRational second;
  int degree() const { return first.degree() - dn + second.degree(); }
};

struct SlotTerm {
  MultiIndex f1;  // derivative of f1 this term multiplies
  MultiIndex f2;
  GaussRational prefactor;
  TraceTerm term;
  std::string label;  // which sub-sum produced it
};

// Every term of a star-mode case. Non-star tuples are unsupported_case.
std::vector<SlotTerm> case_integrands(const CaseIndex& c);
std::vector<SlotTerm> case_integrands(CaseId id);
CaseIndex star_case(CaseId id);

// Exact double integral of one trace term; carries pi^2.
ExactComplex trace_integral(const TraceTerm& t);

using CoeffMatrix = std::array<std::array<ExactScalar, 3>, 3>;

CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b);
bool is_zero(const CoeffMatrix& m);
CoeffMatrix substitute_h1(const CoeffMatrix& m, const Rational& h1);

struct SlotValue {
  MultiIndex f1, f2;
  ExactScalar value;
};

struct CaseResult {
  CaseId id;
  CaseIndex index;
  CoeffMatrix matrix;               // [i][j] multiplies d_i f1 d_j f2
  std::vector<SlotValue> higher;    // second-derivative slots
  std::vector<int> degrees;         // homogeneity of every integrand
  int terms = 0;
  bool h1_linear = false;
  bool higher_vanish = false;
};

CaseResult eval_case(const CaseIndex& c);
CaseResult eval_case(CaseId id);

struct OmegaReport {
  std::vector<CaseResult> cases;
  CoeffMatrix total;
  CoeffMatrix conjecture;  // case b + case c
  bool h1_linear = false;
  bool every_case_h1_linear = false;
  bool higher_slots_vanish = false;
  bool isotropic = false;
  bool symmetric = false;
  bool conjecture_isotropic = false;
  // total = h1 * a * identity, a stored without h1; set when isotropic.
  ExactScalar a;
  ExactScalar conjecture_a;
  bool conjecture_zero = false;
  bool total_zero = false;
};

OmegaReport omega3();
OmegaReport assemble(std::vector<CaseResult> cases);

// The integration-by-parts chain for
//   int tr[d_{xi_n} pi+ sigma_{-1}(xi', xi_n) sigma_L(eta', xi_n)] dxi_n
// with independent xi' and eta' on their unit spheres. Values are the
// coefficient of pi, polynomials in xi', eta', h1.
struct ChainReport {
  std::array<Poly, 4> value;
  std::vector<IdentityCheck> checks;
};
// beta, delta: optional tangential xi'- and eta'-derivatives (0 = none).
ChainReport remark1_chain(int beta = 0, int delta = 0);

}  // namespace ncres
