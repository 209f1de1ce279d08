#pragma once

// Exterior-algebra trace functions: a_m(xi1, xi2, eta1, eta2), the
// alternating binomial sums A_{n,m}, the constants (a_{n,m}, b_{n,m}) of
// tr[p(xi) p(eta)] and the full normal-jet trace identity in dimension four.

#include <vector>

#include "ncres/exterior_algebra.hpp"
#include "ncres/identity.hpp"

namespace ncres {

// Binomial coefficient, zero outside 0 <= k <= n.
Rational binomial(int n, int k);

// tr over degree-m forms of e(xi1) i(xi2) e(eta1) i(eta2).
Poly a_m_trace(int n, int m, const Covector& xi1, const Covector& xi2, const Covector& eta1,
               const Covector& eta2);

// A_{n,m} = C(n,m) - C(n,m-1) + ... + (-1)^m C(n,0).
Rational alternating_coeff(int n, int m);

struct TraceConstants {
  int n = 0;
  int m = 0;
  Rational a;
  Rational b;
  friend bool operator==(const TraceConstants&, const TraceConstants&) = default;
};

// b = C(n-2,m-2) + C(n-2,m) - 2 C(n-2,m-1), a = C(n,m) - b.
TraceConstants pq_constants_formula(int n, int m);

// Fits tr_m[p(xi) p(eta)] = a <xi,eta>^2 + b |xi|^2 |eta|^2 with formal xi,
// eta and checks the fit as a polynomial identity.
TraceConstants pq_constants_brute(int n, int m);

// Closed form cross-checked by brute force for 2 <= m <= n-2; brute force
// alone otherwise. Throws identity_violation on disagreement.
TraceConstants pq_constants(int n, int m);

// a_{m+1}(eta1, xi2, xi1, eta2) = a_m(xi1, xi2, eta1, eta2)
//                                 + <xi1,xi2><eta1,eta2>[2A_{n,m} - C(n,m)]
IdentityCheck check_recursion(int n, int m);
// a_1(xi1, xi2, eta1, eta2) = <eta2,xi1><xi2,eta1>
IdentityCheck check_a1(int n);
// a_2(eta1, xi2, xi1, eta2) = <eta2,xi1><xi2,eta1> + <xi1,xi2><eta1,eta2>[2A_{n,1} - n]
IdentityCheck check_a2_closed_form(int n);

// Every step of tr_{Lambda^2}{[d_{x_n} p(xi)] p(eta)} in dimension four with
// h1 formal, ending with the cross-term coefficient 8.
std::vector<IdentityCheck> remark2_full();

}  // namespace ncres
