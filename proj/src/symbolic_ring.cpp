#include "ncres/symbolic_ring.hpp"

#include <algorithm>

#include "ncres/error.hpp"

namespace ncres {

SymbolFrame::SymbolFrame(int n, Cotangent tangent) : n_(n), tangent_(tangent) {
  if (n < 2 || n > 6) throw Error(ErrorKind::dimension_mismatch, "symbol frame dimension");
  for (int i = 1; i < n; ++i) vars_[i - 1] = tangential(i);
  vars_[n - 1] = normal();
}

Var SymbolFrame::tangential(int i) const {
  if (i < 1 || i >= n_) throw Error(ErrorKind::index_out_of_range, "tangential index");
  return tangent_ == Cotangent::xi ? vars::xi(i) : vars::eta(i);
}

bool SymbolFrame::contains(Var v) const {
  auto vs = variables();
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

Covector SymbolFrame::covector() const {
  Covector v;
  for (Var x : variables()) v.components.push_back(Poly::var(x));
  return v;
}

Poly SymbolFrame::norm_sq() const {
  Poly out;
  for (Var x : variables()) out += Poly::var(x) * Poly::var(x);
  return out;
}

Poly SymbolFrame::tangential_norm_sq() const {
  Poly out;
  for (Var x : tangential_variables()) out += Poly::var(x) * Poly::var(x);
  return out;
}

// ---------------------------------------------------------------- Radial

RadialRational::RadialRational(ExtOp numerator, int k, int degree, SymbolFrame frame)
    : num_(std::move(numerator)), k_(k), degree_(degree), frame_(frame) {
  if (k_ < 0) throw Error(ErrorKind::bad_denominator, "negative power of |xi|^2");
  if (num_.n() != frame_.n())
    throw Error(ErrorKind::dimension_mismatch, "numerator and frame dimensions differ");
  const int expect = degree_ + 2 * k_;
  for (int i = 0; i < num_.dim(); ++i)
    for (int j = 0; j < num_.dim(); ++j) {
      auto [homog, d] = num_(i, j).homogeneous_degree(frame_.variables());
      if (d < 0) continue;
      if (!homog || d != expect)
        throw Error(ErrorKind::homogeneity,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not homogeneous of degree " + std::to_string(expect));
    }
}

RadialRational RadialRational::zero(SymbolFrame frame, int degree) {
  return RadialRational(ExtOp::zero(frame.n()), 0, degree, frame);
}

RadialRational RadialRational::scalar(const Poly& numerator, int k, int degree,
                                      SymbolFrame frame) {
  return RadialRational(ExtOp::scalar(frame.n(), numerator), k, degree, frame);
}

RadialRational RadialRational::with_k(int k) const {
  if (k < k_) throw Error(ErrorKind::bad_denominator, "cannot lower the denominator power");
  if (k == k_) return *this;
  return RadialRational(num_ * frame_.norm_sq().pow(k - k_), k, degree_, frame_);
}

namespace {
void check_compatible(const RadialRational& a, const RadialRational& b, bool same_degree) {
  if (!(a.frame() == b.frame()))
    throw Error(ErrorKind::dimension_mismatch, "symbols live in different frames");
  if (same_degree && a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    throw Error(ErrorKind::homogeneity, "adding symbols of degree " + std::to_string(a.degree()) +
                                            " and " + std::to_string(b.degree()));
}
}  // namespace

RadialRational& RadialRational::operator+=(const RadialRational& o) {
  check_compatible(*this, o, true);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int k = std::max(k_, o.k_);
  return *this = RadialRational(with_k(k).num_ + o.with_k(k).num_, k, degree_, frame_);
}

RadialRational& RadialRational::operator-=(const RadialRational& o) { return *this += -o; }

RadialRational operator*(const RadialRational& a, const RadialRational& b) {
  check_compatible(a, b, false);
  return RadialRational(a.num_ * b.num_, a.k_ + b.k_, a.degree_ + b.degree_, a.frame_);
}

RadialRational operator*(const GaussRational& c, const RadialRational& a) {
  return RadialRational(a.num_ * c, a.k_, a.degree_, a.frame_);
}

RadialRational operator*(const Poly& c, const RadialRational& a) {
  for (Var v : a.frame_.variables())
    if (c.uses(v))
      throw Error(ErrorKind::stray_variable, "constant factor depends on " + vars::name(v));
  return RadialRational(a.num_ * c, a.k_, a.degree_, a.frame_);
}

RadialRational RadialRational::operator-() const {
  return RadialRational(-num_, k_, degree_, frame_);
}

bool operator==(const RadialRational& a, const RadialRational& b) {
  if (!(a.frame_ == b.frame_)) return false;
  int k = std::max(a.k_, b.k_);
  return a.with_k(k).num_ == b.with_k(k).num_;
}

RadialRational RadialRational::deriv(Var v) const {
  if (!frame_.contains(v))
    throw Error(ErrorKind::stray_variable, "d/d" + vars::name(v) + " is not a symbol derivative");
  if (k_ == 0) return RadialRational(num_.deriv(v), 0, degree_ - 1, frame_);
  // (N / D^k)' = (N' D - 2k v N) / D^{k+1},  D = |xi|^2.
  ExtOp num = num_.deriv(v) * frame_.norm_sq();
  if (k_ > 0) num -= num_ * (Poly(2 * k_) * Poly::var(v));
  return RadialRational(std::move(num), k_ + 1, degree_ - 1, frame_);
}

RadialRational RadialRational::deriv(Var v, int times) const {
  RadialRational out = *this;
  for (int i = 0; i < times; ++i) out = out.deriv(v);
  return out;
}

RadialRational RadialRational::subs(Var v, const Poly& value) const {
  if (frame_.contains(v))
    throw Error(ErrorKind::stray_variable, "cannot substitute a symbol variable");
  return RadialRational(num_.subs(v, value), k_, degree_, frame_);
}

SphereRational restrict_sphere(const RadialRational& s) {
  return SphereRational{s.numerator(), s.k(), s.frame().normal()};
}

}  // namespace ncres
