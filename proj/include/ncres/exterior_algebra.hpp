#pragma once

// Matrix representation of the full exterior algebra of R^n with exterior
// and interior multiplication, p(v) = e(v)i(v) - i(v)e(v), the two Clifford
// actions and graded traces. The metric at the base point is Euclidean.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ncres/poly.hpp"

namespace ncres {

// Basis dx_S, S a subset of {1..n}, ordered by degree, then lexicographically.
class FormBasis {
 public:
  static const FormBasis& get(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(masks_.size()); }
  std::uint32_t mask(int idx) const { return masks_[idx]; }
  int degree(int idx) const { return degrees_[idx]; }
  int index_of(std::uint32_t mask) const { return index_[mask]; }
  // Half-open index range [first, last) of the degree-m block.
  std::pair<int, int> block(int m) const;
  std::string label(int idx) const;

 private:
  explicit FormBasis(int n);
  int n_;
  std::vector<std::uint32_t> masks_;
  std::vector<int> degrees_;
  std::vector<int> index_;
  std::vector<int> block_start_;
};

struct Covector {
  std::vector<Poly> components;

  int dim() const { return static_cast<int>(components.size()); }
  const Poly& operator[](int i) const { return components[i]; }

  // dx_i as a covector in R^n (1-based i).
  static Covector basis(int n, int i);
  // (v_1, ..., v_n) with v_i = vars::xi(i) etc.
  static Covector formal(int n, Var (*group)(int));
  // Tangential part: normal component replaced by zero.
  Covector tangential() const;
};

Poly pairing(const Covector& a, const Covector& b);

class ExtOp {
 public:
  ExtOp() = default;
  explicit ExtOp(int n);

  static ExtOp zero(int n) { return ExtOp(n); }
  static ExtOp identity(int n);
  static ExtOp scalar(int n, const Poly& s);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const FormBasis& basis() const { return FormBasis::get(n_); }

  const Poly& operator()(int row, int col) const { return a_[row * dim_ + col]; }
  Poly& operator()(int row, int col) { return a_[row * dim_ + col]; }

  bool is_zero() const;
  ExtOp& operator+=(const ExtOp& o);
  ExtOp& operator-=(const ExtOp& o);
  ExtOp& operator*=(const Poly& s);
  ExtOp& operator*=(const GaussRational& s);
  friend ExtOp operator+(ExtOp a, const ExtOp& b) { return a += b; }
  friend ExtOp operator-(ExtOp a, const ExtOp& b) { return a -= b; }
  friend ExtOp operator*(const ExtOp& a, const ExtOp& b);
  friend ExtOp operator*(ExtOp a, const Poly& s) { return a *= s; }
  friend ExtOp operator*(const Poly& s, ExtOp a) { return a *= s; }
  friend ExtOp operator*(ExtOp a, const GaussRational& s) { return a *= s; }
  friend ExtOp operator*(const GaussRational& s, ExtOp a) { return a *= s; }
  ExtOp operator-() const;
  friend bool operator==(const ExtOp& a, const ExtOp& b);

  template <class F>
  ExtOp map(F f) const {
    ExtOp out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!a_[i].is_zero()) out.a_[i] = f(a_[i]);
    return out;
  }

  ExtOp deriv(Var v) const;
  ExtOp subs(Var v, const Poly& value) const;
  std::map<int, ExtOp> split(Var v) const;
  bool uses(Var v) const;

  // True iff every nonzero entry maps degree m to degree m + shift.
  bool shifts_degree_by(int shift) const;

  // Applies the operator to basis element `col`; returns the column.
  std::vector<Poly> apply(int col) const;

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<Poly> a_;
};

ExtOp wedge_op(const Covector& v);
ExtOp contract_op(const Covector& v);
ExtOp p_op(const Covector& v);

enum class CliffordKind { plain, bar };
// c(e_j) = e(dx_j) - i(dx_j), c-bar(e_j) = e(dx_j) + i(dx_j); 1-based j.
ExtOp clifford_op(int n, int j, CliffordKind kind);

Poly graded_trace(const ExtOp& op, int m);
// graded_trace(a * b, m) without forming the product.
Poly trace_product(const ExtOp& a, const ExtOp& b, int m);

}  // namespace ncres
