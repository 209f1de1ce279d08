#pragma once

// Floating-point cross-check of the case integrals. Shares only the symbol
// constructors with the exact engine: pi+ is taken by a Cauchy integral on a
// small circle around -i, the xi_n integral by adaptive Gauss-Kronrod on the
// whole line, and the sphere integral by a product Gauss-Legendre x
// trapezoid rule sized from the polynomial degree of the integrand.

#include <complex>
#include <string>
#include <vector>

#include "ncres/residue_engine.hpp"

namespace ncres::oracle {

struct Options {
  double h1 = 1.0;
  int circle_points = 40;
  double circle_radius = 1.0 / 3;
  double line_tol = 1e-12;
};

std::complex<double> trace_integral(const TraceTerm& t, const Options& opt = {});

// pi+ of a restricted symbol's scalar entry, evaluated at real x; used by
// the tests to pin the Cauchy-integral route on simple inputs.
std::complex<double> pi_plus_scalar(const Poly& numerator, int k, Var normal, double x,
                                    const Options& opt = {});

struct Comparison {
  std::string name;
  double exact = 0;
  double numeric = 0;
  double error = 0;  // relative, or absolute when the exact value is zero
  bool relative = true;
  bool pass = false;
};

struct CaseComparison {
  CaseId id;
  std::vector<Comparison> entries;  // 9 matrix entries, then higher slots
  bool pass = false;
};

// Tolerance 1e-9: relative for nonzero exact values; for exact zeros the
// absolute error is measured against pi^2 * |h1|, the natural scale of every
// nonzero entry.
CaseComparison compare_case(const CaseResult& exact, const Options& opt = {},
                            double tol = 1e-9);

}  // namespace ncres::oracle
