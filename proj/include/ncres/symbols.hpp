#pragma once

// Symbols of F = (d delta - delta d)/(d delta + delta d) and its pieces at
// the boundary point x0, in normal coordinates, with h1 = h'(0) formal.
//
// x-derivatives enter only through the jet dictionary below: tangential
// first jets vanish, the normal first jet of |xi|^2 is h1 |xi'|^2, the normal
// jet of i(xi) is h1 i(xi') and e(xi) has no jet. Anything else is an
// unsupported_jet error.

#include <array>

#include "ncres/symbolic_ring.hpp"

namespace ncres {

// Order of an x-derivative, one entry per coordinate x_1..x_n.
using XOrder = std::array<int, 4>;

XOrder x_unit(int i);  // 1-based

Poly h1_poly();

// sigma_L = p(xi)/|xi|^2
RadialRational sigma_L(SymbolFrame f = SymbolFrame());
// d_{x_n} sigma_L at x0.
RadialRational dxn_sigma_L(SymbolFrame f = SymbolFrame());
// d_x^order sigma_L at x0, through the jet dictionary.
RadialRational sigma_L_jet(const XOrder& order, SymbolFrame f = SymbolFrame());

// Order-zero parts of d and delta at x0; h1-linear, xi-free.
ExtOp sigma0_d();
ExtOp sigma0_delta();

// sigma_1(d) = i e(xi), sigma_1(delta) = -i i(xi).
RadialRational sigma1_d(SymbolFrame f = SymbolFrame());
RadialRational sigma1_delta(SymbolFrame f = SymbolFrame());
// d_{x_i} of the two first-order symbols at x0.
RadialRational sigma1_d_jet(int i, SymbolFrame f = SymbolFrame());
RadialRational sigma1_delta_jet(int i, SymbolFrame f = SymbolFrame());

// Subprincipal symbols of d delta and delta d: closed forms, and the
// composition route with the jet correction -i sum d_{xi_i}(.) d_{x_i}(.).
RadialRational sigma1_d_codiff(SymbolFrame f = SymbolFrame());
RadialRational sigma1_codiff_d(SymbolFrame f = SymbolFrame());
RadialRational sigma1_d_codiff_composed(SymbolFrame f = SymbolFrame());
RadialRational sigma1_codiff_d_composed(SymbolFrame f = SymbolFrame());

// A = d delta - delta d, Laplacian = d delta + delta d.
RadialRational sigma1_A(SymbolFrame f = SymbolFrame());
RadialRational sigma1_Delta(SymbolFrame f = SymbolFrame());

// sigma_{-3} of the inverse Laplacian at x0.
RadialRational sigma_minus3_lapinv(SymbolFrame f = SymbolFrame());
// Second route: -(1/|xi|^2)[sigma_1(Lap)/|xi|^2 - i sum d_{xi_i}|xi|^2 d_{x_i}|xi|^{-2}].
RadialRational sigma_minus3_lapinv_composed(SymbolFrame f = SymbolFrame());

// sigma_{-1}(F) at x0.
RadialRational sigma_minus1_F(SymbolFrame f = SymbolFrame());
// Same symbol assembled over a single |xi|^6.
RadialRational sigma_minus1_F_regrouped(SymbolFrame f = SymbolFrame());

// Homogeneous component sigma_{order}(F) for order 0 or -1.
RadialRational sigma_F(int order, SymbolFrame f = SymbolFrame());

}  // namespace ncres
