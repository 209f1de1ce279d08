#include "ncres/sphere_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "ncres/error.hpp"

namespace ncres {

namespace {

// Gamma(m/2) = coeff * pi^{half_pi/2}, m >= 1.
struct HalfGamma {
  Rational coeff;
  int half_pi;
};

HalfGamma half_gamma(int m) {
  if (m % 2 == 0) {
    Rational f(1);
    for (int j = 2; j < m / 2; ++j) f *= j;
    return {f, 0};
  }
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const int k = (m - 1) / 2;
  Rational f(1);
  for (int j = 1; j <= k; ++j) f *= Rational(2 * j - 1, 2);
  return {f, 1};
}

}  // namespace

std::string to_string(const ExactScalar& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest pi power, then highest h1 power first.
  for (auto it = x.buckets().rbegin(); it != x.buckets().rend(); ++it) {
    const auto& [key, q] = *it;
    if (!first) os << " ";
    first = false;
    os << (sgn(q) < 0 ? "-" : "+") << Rational(abs(q)).get_num().get_str() << "/"
       << q.get_den().get_str() << " · pi^" << key.first << " · h1^" << key.second;
  }
  return os.str();
}

ExactScalar parse_exact(const std::string& text) {
  ExactScalar out;
  if (text == "0") return out;
  static const std::regex term(R"(([+-])(\d+)/(\d+) · pi\^(-?\d+) · h1\^(-?\d+))");
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), term);
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != consumed &&
        !(static_cast<std::size_t>(m.position()) == consumed + 1 && text[consumed] == ' '))
      throw Error(ErrorKind::parse, "unexpected text in exact value: " + text);
    Rational q(mpz_class(m[2].str()), mpz_class(m[3].str()));
    q.canonicalize();
    if (m[1].str() == "-") q = -q;
    out.add({std::stoi(m[4].str()), std::stoi(m[5].str())}, q);
    consumed = m.position() + m.length();
  }
  if (consumed != text.size()) throw Error(ErrorKind::parse, "malformed exact value: " + text);
  return out;
}

ExactScalar real_part_checked(const ExactComplex& x, const std::string& context) {
  ExactScalar out;
  for (const auto& [k, q] : x.buckets()) {
    if (!q.is_real())
      throw Error(ErrorKind::imaginary_residual, context + ": imaginary part " + q.str() +
                                                     " at pi^" + std::to_string(k.first));
    out.add(k, q.re());
  }
  return out;
}

ExactComplex to_complex(const ExactScalar& x) {
  ExactComplex out;
  for (const auto& [k, q] : x.buckets()) out.add(k, GaussRational(q));
  return out;
}

ExactScalar substitute_h1(const ExactScalar& x, const Rational& h1) {
  ExactScalar out;
  for (const auto& [k, q] : x.buckets()) {
    Rational f(1);
    for (int e = 0; e < k.second; ++e) f *= h1;
    out.add({k.first, 0}, q * f);
  }
  return out;
}

double to_double(const ExactScalar& x, double h1) {
  double sum = 0;
  for (const auto& [k, q] : x.buckets())
    sum += q.get_d() * std::pow(M_PI, k.first) * std::pow(h1, k.second);
  return sum;
}

bool is_h1_linear(const ExactScalar& x) {
  return std::all_of(x.buckets().begin(), x.buckets().end(),
                     [](const auto& b) { return b.first.second == 1; });
}

ExactScalar divide_h1(const ExactScalar& x) {
  for (const auto& [k, q] : x.buckets())
    if (k.second < 1) throw Error(ErrorKind::stray_variable, "value is not divisible by h1");
  return x.shifted(0, -1);
}

ExactScalar integrate_monomial(std::span<const int> alpha) {
  const int d = static_cast<int>(alpha.size());
  if (d < 2) throw Error(ErrorKind::dimension_mismatch, "sphere dimension must be at least 2");
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw Error(ErrorKind::degree_out_of_range, "negative exponent");
    if (a % 2 != 0) return {};
    total += a;
  }
  // 2 prod Gamma((a_i + 1)/2) / Gamma((|a| + d)/2)
  Rational coeff(2);
  int half_pi = 0;
  for (int a : alpha) {
    HalfGamma g = half_gamma(a + 1);
    coeff *= g.coeff;
    half_pi += g.half_pi;
  }
  HalfGamma den = half_gamma(total + d);
  coeff /= den.coeff;
  half_pi -= den.half_pi;
  if (half_pi % 2 != 0)
    throw Error(ErrorKind::stray_variable, "half-integer power of pi in sphere integral");
  return ExactScalar::term(coeff, half_pi / 2, 0);
}

ExactComplex integrate_poly(const Poly& p, std::span<const Var> sphere_vars) {
  std::vector<Var> allowed(sphere_vars.begin(), sphere_vars.end());
  allowed.push_back(vars::h1());
  if (!p.uses_only(allowed))
    throw Error(ErrorKind::stray_variable, "sphere integrand has variables beyond the sphere: " +
                                               p.str());
  ExactComplex out;
  std::vector<int> alpha(sphere_vars.size());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < sphere_vars.size(); ++i) alpha[i] = m.degree(sphere_vars[i]);
    ExactScalar base = integrate_monomial(alpha);
    for (const auto& [k, q] : base.buckets())
      out.add({k.first, m.degree(vars::h1())}, c * GaussRational(q));
  }
  return out;
}

}  // namespace ncres
