#pragma once

// Exact values of the form sum q * pi^a * h1^b and exact integration of
// polynomials over the unit sphere.

#include <map>
#include <span>
#include <string>
#include <utility>

#include "ncres/poly.hpp"

namespace ncres {

template <class Coeff>
class ExactValue {
 public:
  using Key = std::pair<int, int>;  // (pi power, h1 power)

  ExactValue() = default;
  static ExactValue term(Coeff q, int pi_pow, int h1_pow) {
    ExactValue v;
    v.add(Key{pi_pow, h1_pow}, q);
    return v;
  }

  bool is_zero() const { return buckets_.empty(); }
  const std::map<Key, Coeff>& buckets() const { return buckets_; }

  ExactValue& operator+=(const ExactValue& o) {
    for (const auto& [k, q] : o.buckets_) add(k, q);
    return *this;
  }
  ExactValue& operator-=(const ExactValue& o) {
    for (const auto& [k, q] : o.buckets_) add(k, -q);
    return *this;
  }
  ExactValue& operator*=(const Coeff& c) {
    if (c == Coeff(0)) buckets_.clear();
    for (auto& [k, q] : buckets_) q *= c;
    return *this;
  }
  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(ExactValue a, const Coeff& c) { return a *= c; }
  friend ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    ExactValue out;
    for (const auto& [ka, qa] : a.buckets_)
      for (const auto& [kb, qb] : b.buckets_)
        out.add(Key{ka.first + kb.first, ka.second + kb.second}, qa * qb);
    return out;
  }
  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.buckets_ == b.buckets_;
  }

  // Multiplies every bucket by pi^a h1^b.
  ExactValue shifted(int pi_pow, int h1_pow) const {
    ExactValue out;
    for (const auto& [k, q] : buckets_)
      out.buckets_.emplace(Key{k.first + pi_pow, k.second + h1_pow}, q);
    return out;
  }

  void add(const Key& k, const Coeff& q) {
    if (q == Coeff(0)) return;
    auto it = buckets_.find(k);
    if (it == buckets_.end()) {
      buckets_.emplace(k, q);
      return;
    }
    it->second += q;
    if (it->second == Coeff(0)) buckets_.erase(it);
  }

 private:
  std::map<Key, Coeff> buckets_;  // no zero coefficients
};

using ExactScalar = ExactValue<Rational>;
using ExactComplex = ExactValue<GaussRational>;

// Lossless text form: "+p/q · pi^k · h1^e" per bucket, "0" when empty.
std::string to_string(const ExactScalar& x);
ExactScalar parse_exact(const std::string& text);

// Real part; throws imaginary_residual when any imaginary part survives.
ExactScalar real_part_checked(const ExactComplex& x, const std::string& context);
ExactComplex to_complex(const ExactScalar& x);

// Substitutes a rational value for h1.
ExactScalar substitute_h1(const ExactScalar& x, const Rational& h1);
double to_double(const ExactScalar& x, double h1);

bool is_h1_linear(const ExactScalar& x);
// Divides by h1; requires every bucket to carry at least one power.
ExactScalar divide_h1(const ExactScalar& x);

// Integral of x^alpha over the unit sphere S^{d-1}, d = alpha.size().
ExactScalar integrate_monomial(std::span<const int> alpha);

// Integrates p over the sphere in `sphere_vars`; h1 passes through as a
// formal coefficient, any other variable is an error.
ExactComplex integrate_poly(const Poly& p, std::span<const Var> sphere_vars);

}  // namespace ncres
