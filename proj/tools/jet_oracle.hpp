#pragma once

// Second route to the x_n-jets at x0: the dual metric along the normal is
// taken as diag(1 + h1 t, ..., 1 + h1 t, 1) in the parameter t = x_n, every
// symbol is built with that metric and differentiated in t at t = 0. Nothing
// here uses the closed-form jet formulas of the engine.

#include "ncres/symbolic_ring.hpp"

namespace ncres::jet_oracle {

// d/dt at t = 0 of p_G(xi)/|xi|_G^2.
RadialRational dxn_sigma_L(SymbolFrame f = SymbolFrame());

// d/dt at t = 0 of -i i_G(xi).
RadialRational dxn_sigma1_delta(SymbolFrame f = SymbolFrame());

// First-order composition with the t-route jet of sigma_1(delta).
RadialRational sigma1_d_codiff(SymbolFrame f = SymbolFrame());
RadialRational sigma1_codiff_d(SymbolFrame f = SymbolFrame());

// -(1/|xi|^2)[sigma_1(Lap)/|xi|^2 - i d_{xi_n}|xi|^2 d_t |xi|_G^{-2}]
RadialRational sigma_minus3_lapinv(SymbolFrame f = SymbolFrame());

// sum_{|alpha|=1} d_xi^alpha sigma_2(A) D_x^alpha sigma_{-2}(Lap^{-1})
RadialRational sigma_minus1_jet_term(SymbolFrame f = SymbolFrame());

}  // namespace ncres::jet_oracle
