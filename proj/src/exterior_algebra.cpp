#include "ncres/exterior_algebra.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>

#include "ncres/error.hpp"

namespace ncres {

namespace {
constexpr int kMaxDim = 8;
}

FormBasis::FormBasis(int n) : n_(n), index_(std::size_t{1} << n, -1) {
  for (int m = 0; m <= n; ++m) {
    block_start_.push_back(static_cast<int>(masks_.size()));
    std::vector<std::uint32_t> level;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (std::popcount(s) == m) level.push_back(s);
    // Lexicographic order on the sorted index lists.
    std::sort(level.begin(), level.end(), [n](std::uint32_t a, std::uint32_t b) {
      for (int i = 0; i < n; ++i) {
        bool ia = a & (1u << i), ib = b & (1u << i);
        if (ia != ib) return ia;
      }
      return false;
    });
    for (auto s : level) {
      index_[s] = static_cast<int>(masks_.size());
      masks_.push_back(s);
      degrees_.push_back(m);
    }
  }
  block_start_.push_back(static_cast<int>(masks_.size()));
}

const FormBasis& FormBasis::get(int n) {
  if (n < 1 || n > kMaxDim)
    throw Error(ErrorKind::dimension_mismatch, "unsupported dimension " + std::to_string(n));
  static std::once_flag flags[kMaxDim + 1];
  static std::unique_ptr<FormBasis> cache[kMaxDim + 1];
  std::call_once(flags[n], [n] { cache[n].reset(new FormBasis(n)); });
  return *cache[n];
}

std::pair<int, int> FormBasis::block(int m) const {
  if (m < 0 || m > n_)
    throw Error(ErrorKind::degree_out_of_range, "degree " + std::to_string(m));
  return {block_start_[m], block_start_[m + 1]};
}

std::string FormBasis::label(int idx) const {
  std::uint32_t s = masks_[idx];
  if (s == 0) return "1";
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (!(s & (1u << i))) continue;
    if (!out.empty()) out += "^";
    out += "dx" + std::to_string(i + 1);
  }
  return out;
}

// ---------------------------------------------------------------- Covector

Covector Covector::basis(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorKind::index_out_of_range, "dx_" + std::to_string(i));
  Covector v{std::vector<Poly>(n)};
  v.components[i - 1] = Poly(1);
  return v;
}

Covector Covector::formal(int n, Var (*group)(int)) {
  Covector v;
  for (int i = 1; i <= n; ++i) v.components.push_back(Poly::var(group(i)));
  return v;
}

Covector Covector::tangential() const {
  Covector v = *this;
  v.components.back() = Poly();
  return v;
}

Poly pairing(const Covector& a, const Covector& b) { return dot(a.components, b.components); }

// ---------------------------------------------------------------- ExtOp

ExtOp::ExtOp(int n) : n_(n), dim_(FormBasis::get(n).size()), a_(dim_ * dim_) {}

ExtOp ExtOp::identity(int n) { return scalar(n, Poly(1)); }

ExtOp ExtOp::scalar(int n, const Poly& s) {
  ExtOp out(n);
  if (s.is_zero()) return out;
  for (int i = 0; i < out.dim_; ++i) out(i, i) = s;
  return out;
}

bool ExtOp::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

namespace {
void check_same(const ExtOp& a, const ExtOp& b) {
  if (a.n() != b.n())
    throw Error(ErrorKind::dimension_mismatch,
                "operators on R^" + std::to_string(a.n()) + " and R^" + std::to_string(b.n()));
}
}  // namespace

ExtOp& ExtOp::operator+=(const ExtOp& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

ExtOp& ExtOp::operator-=(const ExtOp& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

ExtOp& ExtOp::operator*=(const Poly& s) {
  for (auto& p : a_)
    if (!p.is_zero()) p *= s;
  return *this;
}

ExtOp& ExtOp::operator*=(const GaussRational& s) {
  for (auto& p : a_) p *= s;
  return *this;
}

ExtOp operator*(const ExtOp& a, const ExtOp& b) {
  check_same(a, b);
  ExtOp out(a.n_);
  const int d = a.dim_;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const Poly& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  return out;
}

ExtOp ExtOp::operator-() const {
  return map([](const Poly& p) { return -p; });
}

bool operator==(const ExtOp& a, const ExtOp& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

ExtOp ExtOp::deriv(Var v) const {
  return map([v](const Poly& p) { return p.deriv(v); });
}

ExtOp ExtOp::subs(Var v, const Poly& value) const {
  return map([&](const Poly& p) { return p.subs(v, value); });
}

std::map<int, ExtOp> ExtOp::split(Var v) const {
  std::map<int, ExtOp> out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_zero()) continue;
    for (auto& [e, p] : a_[i].split(v)) {
      auto it = out.find(e);
      if (it == out.end()) it = out.emplace(e, ExtOp(n_)).first;
      it->second.a_[i] = std::move(p);
    }
  }
  return out;
}

bool ExtOp::uses(Var v) const {
  return std::any_of(a_.begin(), a_.end(), [v](const Poly& p) { return p.uses(v); });
}

bool ExtOp::shifts_degree_by(int shift) const {
  const auto& fb = basis();
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!(*this)(i, j).is_zero() && fb.degree(i) != fb.degree(j) + shift) return false;
  return true;
}

std::vector<Poly> ExtOp::apply(int col) const {
  std::vector<Poly> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = (*this)(i, col);
  return out;
}

// ---------------------------------------------------------------- Generators

ExtOp wedge_op(const Covector& v) {
  const int n = v.dim();
  ExtOp out(n);
  const auto& fb = FormBasis::get(n);
  for (int col = 0; col < fb.size(); ++col) {
    std::uint32_t s = fb.mask(col);
    for (int i = 0; i < n; ++i) {
      if (s & (1u << i) || v[i].is_zero()) continue;
      // v_i dx_i ^ dx_S: move dx_i past the elements of S below i.
      int below = std::popcount(s & ((1u << i) - 1));
      int row = fb.index_of(s | (1u << i));
      if (below % 2 == 0)
        out(row, col) += v[i];
      else
        out(row, col) -= v[i];
    }
  }
  return out;
}

ExtOp contract_op(const Covector& v) {
  // Euclidean pairing at the base point: i(v) is the transpose of e(v).
  ExtOp e = wedge_op(v);
  ExtOp out(v.dim());
  for (int i = 0; i < e.dim(); ++i)
    for (int j = 0; j < e.dim(); ++j) out(j, i) = e(i, j);
  return out;
}

ExtOp p_op(const Covector& v) {
  ExtOp e = wedge_op(v), c = contract_op(v);
  return e * c - c * e;
}

ExtOp clifford_op(int n, int j, CliffordKind kind) {
  if (j < 1 || j > n) throw Error(ErrorKind::index_out_of_range, "frame index " + std::to_string(j));
  Covector dx = Covector::basis(n, j);
  return kind == CliffordKind::plain ? wedge_op(dx) - contract_op(dx)
                                     : wedge_op(dx) + contract_op(dx);
}

Poly graded_trace(const ExtOp& op, int m) {
  auto [first, last] = op.basis().block(m);
  Poly tr;
  for (int i = first; i < last; ++i) tr += op(i, i);
  return tr;
}

Poly trace_product(const ExtOp& a, const ExtOp& b, int m) {
  check_same(a, b);
  auto [first, last] = a.basis().block(m);
  Poly tr;
  for (int i = first; i < last; ++i)
    for (int k = 0; k < a.dim(); ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      const Poly& bki = b(k, i);
      if (bki.is_zero()) continue;
      tr += aik * bki;
    }
  return tr;
}

}  // namespace ncres
