#pragma once

// Exact scalar ring: Gaussian rationals and sparse multivariate polynomials
// over them. Every symbol, trace and integral in the engine is built from
// these two types.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncres {

using Rational = mpq_class;

std::string to_string(const Rational& q);

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  // mpq_class(p, q) is not reduced on construction; equality needs it reduced.
  GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  GaussRational pow(int e) const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

inline constexpr int kMaxVars = 26;

// Variable slots. Four covector groups of up to six components each, the
// boundary jet parameter h1 = h'(0), and a normal-coordinate parameter t used
// only by the jet oracles.
struct Var {
  int index;
  friend bool operator==(Var, Var) = default;
};

namespace vars {
Var xi(int i);     // 1-based component
Var eta(int i);
Var zeta(int i);
Var theta(int i);
Var h1();
Var t();
std::string name(Var v);
}  // namespace vars

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  int degree(Var v) const { return exp[v.index]; }
  int degree_in(std::span<const Var> vs) const;
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Poly {
 public:
  using Term = std::pair<Monomial, GaussRational>;

  Poly() = default;
  Poly(GaussRational c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT

  static Poly var(Var v);
  static Poly monomial(const Monomial& m, GaussRational c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
  friend Poly operator*(const GaussRational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int e) const;
  Poly deriv(Var v) const;
  Poly subs(Var v, const Poly& value) const;
  int degree(Var v) const;

  // Coefficients of v^p, keyed by p; the keyed polynomials are free of v.
  std::map<int, Poly> split(Var v) const;

  // Total degree in `vs` if every term shares it; nullopt otherwise. Zero
  // polynomial reports -1.
  std::pair<bool, int> homogeneous_degree(std::span<const Var> vs) const;

  bool uses(Var v) const;
  bool uses_only(std::span<const Var> allowed) const;
  bool is_real() const;

  // `point` is indexed by variable slot.
  std::complex<double> eval(std::span<const std::complex<double>> point) const;

  std::string str() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

Poly dot(std::span<const Poly> a, std::span<const Poly> b);

}  // namespace ncres
