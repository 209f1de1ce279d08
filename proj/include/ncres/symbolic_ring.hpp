#pragma once

// Matrix-valued radial-rational symbols N(xi)/|xi|^{2k} with exact
// derivatives, and their restriction to the unit tangential sphere.

#include <array>
#include <span>

#include "ncres/exterior_algebra.hpp"

namespace ncres {

enum class Cotangent { xi, eta };

// Variables a symbol depends on: a tangential covector (xi' or eta') and the
// shared normal variable xi_n.
class SymbolFrame {
 public:
  explicit SymbolFrame(int n = 4, Cotangent tangent = Cotangent::xi);

  int n() const { return n_; }
  Cotangent tangent() const { return tangent_; }
  Var tangential(int i) const;
  Var normal() const { return vars::xi(n_); }
  std::span<const Var> variables() const { return {vars_.data(), std::size_t(n_)}; }
  std::span<const Var> tangential_variables() const {
    return {vars_.data(), std::size_t(n_ - 1)};
  }
  bool contains(Var v) const;

  Covector covector() const;
  Covector tangential_covector() const { return covector().tangential(); }
  Poly norm_sq() const;
  Poly tangential_norm_sq() const;

  friend bool operator==(const SymbolFrame& a, const SymbolFrame& b) {
    return a.n_ == b.n_ && a.tangent_ == b.tangent_;
  }

 private:
  int n_;
  Cotangent tangent_;
  std::array<Var, 8> vars_{};
};

class RadialRational {
 public:
  // Checks that numerator entries are homogeneous of degree `degree + 2k` in
  // the frame variables.
  RadialRational(ExtOp numerator, int k, int degree, SymbolFrame frame = SymbolFrame());

  static RadialRational zero(SymbolFrame frame, int degree);
  static RadialRational scalar(const Poly& numerator, int k, int degree,
                               SymbolFrame frame = SymbolFrame());

  const ExtOp& numerator() const { return num_; }
  int k() const { return k_; }
  int degree() const { return degree_; }
  const SymbolFrame& frame() const { return frame_; }
  bool is_zero() const { return num_.is_zero(); }

  // Same symbol over |xi|^{2k} for k >= k().
  RadialRational with_k(int k) const;

  RadialRational& operator+=(const RadialRational& o);
  RadialRational& operator-=(const RadialRational& o);
  friend RadialRational operator+(RadialRational a, const RadialRational& b) { return a += b; }
  friend RadialRational operator-(RadialRational a, const RadialRational& b) { return a -= b; }
  friend RadialRational operator*(const RadialRational& a, const RadialRational& b);
  // Multiplication by constants free of the frame variables.
  friend RadialRational operator*(const GaussRational& c, const RadialRational& a);
  friend RadialRational operator*(const Poly& c, const RadialRational& a);
  RadialRational operator-() const;
  friend bool operator==(const RadialRational& a, const RadialRational& b);

  RadialRational deriv(Var v) const;
  RadialRational deriv(Var v, int times) const;
  RadialRational subs(Var v, const Poly& value) const;

 private:
  ExtOp num_;
  int k_;
  int degree_;
  SymbolFrame frame_;
};

// N(xi', xi_n) / (xi_n^2 + 1)^k; produced by restrict_sphere only.
struct SphereRational {
  ExtOp numerator;
  int k = 0;
  Var normal{0};
};

// |xi'|^2 -> 1 in the denominator only. All xi-derivatives must already have
// been applied: restriction does not commute with d/dxi'.
SphereRational restrict_sphere(const RadialRational& s);

}  // namespace ncres
