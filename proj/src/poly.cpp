#include "ncres/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ncres/error.hpp"

namespace ncres {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::degree_out_of_range: return "degree out of range";
    case ErrorKind::index_out_of_range: return "index out of range";
    case ErrorKind::homogeneity: return "homogeneity";
    case ErrorKind::bad_denominator: return "bad denominator";
    case ErrorKind::unbounded_symbol: return "unbounded symbol";
    case ErrorKind::divergent_integral: return "divergent integral";
    case ErrorKind::imaginary_residual: return "imaginary residual";
    case ErrorKind::stray_variable: return "stray variable";
    case ErrorKind::unsupported_jet: return "unsupported jet";
    case ErrorKind::unsupported_case: return "unsupported case";
    case ErrorKind::identity_violation: return "identity violation";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Gaussian

GaussRational GaussRational::pow(int e) const {
  if (e < 0) return GaussRational(1) / pow(-e);
  GaussRational result(1);
  GaussRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  // Most coefficients in the engine are purely real or purely imaginary.
  const bool a_im = sgn(im_) != 0, b_im = sgn(o.im_) != 0;
  if (!a_im && !b_im) {
    re_ *= o.re_;
    return *this;
  }
  const bool a_re = sgn(re_) != 0, b_re = sgn(o.re_) != 0;
  Rational re = (a_re && b_re ? Rational(re_ * o.re_) : Rational(0)) -
                (a_im && b_im ? Rational(im_ * o.im_) : Rational(0));
  Rational im = (a_re && b_im ? Rational(re_ * o.im_) : Rational(0)) +
                (a_im && b_re ? Rational(im_ * o.re_) : Rational(0));
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussRational division by zero");
  Rational den = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

std::string GaussRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string im = im_.get_str();
  if (im[0] != '-') im = "+" + im;
  return "(" + re_.get_str() + im + "i)";
}

// ---------------------------------------------------------------- Variables

namespace vars {

namespace {
constexpr int kGroupSize = 6;

Var group_var(int group, int i) {
  if (i < 1 || i > kGroupSize)
    throw Error(ErrorKind::index_out_of_range,
                "covector component " + std::to_string(i));
  return Var{group * kGroupSize + i - 1};
}
}  // namespace

Var xi(int i) { return group_var(0, i); }
Var eta(int i) { return group_var(1, i); }
Var zeta(int i) { return group_var(2, i); }
Var theta(int i) { return group_var(3, i); }
Var h1() { return Var{24}; }
Var t() { return Var{25}; }

std::string name(Var v) {
  static const char* groups[] = {"xi", "eta", "zeta", "theta"};
  if (v.index == 24) return "h1";
  if (v.index == 25) return "t";
  return std::string(groups[v.index / kGroupSize]) +
         std::to_string(v.index % kGroupSize + 1);
}

}  // namespace vars

// ---------------------------------------------------------------- Monomial

int Monomial::degree_in(std::span<const Var> vs) const {
  int d = 0;
  for (Var v : vs) d += exp[v.index];
  return d;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (int i = 0; i < kMaxVars; ++i) exp[i] = static_cast<std::uint8_t>(exp[i] + o.exp[i]);
  return *this;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(GaussRational c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

Poly Poly::var(Var v) {
  Monomial m;
  m.exp[v.index] = 1;
  return monomial(m, GaussRational(1));
}

Poly Poly::monomial(const Monomial& m, GaussRational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

namespace {

template <class Combine>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a,
                              const std::vector<Poly::Term>& b, Combine combine,
                              bool negate_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
      if (negate_b) out.back().second = -out.back().second;
    } else {
      GaussRational c = combine(a[i].second, b[j].second);
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const auto& x, const auto& y) { return x + y; }, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const auto& x, const auto& y) { return x - y; }, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.terms_.emplace_back(ma * mb, ca * cb);
  out.canonicalize();
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Poly Poly::pow(int e) const {
  Poly result(1);
  for (int k = 0; k < e; ++k) result *= *this;
  return result;
}

Poly Poly::deriv(Var v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exp[v.index];
    if (e == 0) continue;
    Monomial dm = m;
    dm.exp[v.index] = static_cast<std::uint8_t>(e - 1);
    out.terms_.emplace_back(dm, c * GaussRational(e));
  }
  // Lowering one exponent preserves the ordering of distinct monomials.
  return out;
}

Poly Poly::subs(Var v, const Poly& value) const {
  Poly out;
  std::map<int, Poly> powers;
  for (const auto& [e, coeff] : split(v)) {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    out += coeff * it->second;
  }
  return out;
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.exp[v.index]));
  return d;
}

std::map<int, Poly> Poly::split(Var v) const {
  std::map<int, Poly> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest.exp[v.index];
    rest.exp[v.index] = 0;
    out[e].terms_.emplace_back(rest, c);
  }
  for (auto& [e, p] : out) p.canonicalize();
  return out;
}

std::pair<bool, int> Poly::homogeneous_degree(std::span<const Var> vs) const {
  if (terms_.empty()) return {true, -1};
  int d = terms_.front().first.degree_in(vs);
  for (const auto& t : terms_)
    if (t.first.degree_in(vs) != d) return {false, d};
  return {true, d};
}

bool Poly::uses(Var v) const {
  for (const auto& t : terms_)
    if (t.first.exp[v.index] != 0) return true;
  return false;
}

bool Poly::uses_only(std::span<const Var> allowed) const {
  std::array<bool, kMaxVars> ok{};
  for (Var v : allowed) ok[v.index] = true;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.first.exp[i] != 0 && !ok[i]) return false;
  return true;
}

bool Poly::is_real() const {
  for (const auto& t : terms_)
    if (!t.second.is_real()) return false;
  return true;
}

std::complex<double> Poly::eval(std::span<const std::complex<double>> point) const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (int i = 0; i < kMaxVars; ++i)
      for (int e = 0; e < m.exp[i]; ++e) term *= point[i];
    sum += term;
  }
  return sum;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < kMaxVars; ++i) {
      if (m.exp[i] == 0) continue;
      os << "*" << vars::name(Var{i});
      if (m.exp[i] > 1) os << "^" << int(m.exp[i]);
    }
  }
  return os.str();
}

Poly dot(std::span<const Poly> a, std::span<const Poly> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::dimension_mismatch, "dot of covectors of different length");
  Poly out;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

}  // namespace ncres
