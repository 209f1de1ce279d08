#include <doctest.h>

#include <random>

#include "ncres/error.hpp"
#include "ncres/exterior_algebra.hpp"

using namespace ncres;

namespace {

std::vector<Poly> column(const ExtOp& op, int col) { return op.apply(col); }

// Column with a single entry `value` at basis index `row`.
bool is_unit_column(const std::vector<Poly>& c, int row, long value) {
  for (int i = 0; i < int(c.size()); ++i)
    if (c[i] != (i == row ? Poly(value) : Poly())) return false;
  return true;
}

}  // namespace

TEST_CASE("basis ordering is degree-major") {
  const FormBasis& b = FormBasis::get(4);
  CHECK(b.size() == 16);
  CHECK(b.block(2) == std::pair{5, 11});
  for (int i = 1; i < b.size(); ++i) CHECK(b.degree(i - 1) <= b.degree(i));
}

TEST_CASE("wedge and contraction on basis elements") {
  const FormBasis& b = FormBasis::get(2);
  const int one = b.index_of(0), dx1 = b.index_of(1), dx2 = b.index_of(2), dx12 = b.index_of(3);
  const ExtOp e1 = wedge_op(Covector::basis(2, 1));
  CHECK(is_unit_column(column(e1, one), dx1, 1));
  CHECK(is_unit_column(column(e1, dx12), 0, 0));
  // dx1 ^ dx2 keeps its sign: exactly two nonzero entries, both +1.
  CHECK(is_unit_column(column(e1, dx2), dx12, 1));
  int nonzero = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) nonzero += !e1(r, c).is_zero();
  CHECK(nonzero == 2);
  CHECK(is_unit_column(column(contract_op(Covector::basis(2, 1)), dx12), dx2, 1));
  CHECK(is_unit_column(column(contract_op(Covector::basis(2, 2)), dx12), dx1, -1));
}

TEST_CASE("anticommutation with formal covectors, n = 2..6") {
  for (int n = 2; n <= 6; ++n) {
    const Covector xi = Covector::formal(n, vars::xi), eta = Covector::formal(n, vars::eta);
    CHECK(wedge_op(xi) * contract_op(eta) + contract_op(eta) * wedge_op(xi) ==
          ExtOp::identity(n) * pairing(xi, eta));
    CHECK((wedge_op(xi) * wedge_op(xi)).is_zero());
    CHECK((contract_op(xi) * contract_op(xi)).is_zero());
  }
}

TEST_CASE("p(xi)") {
  const Covector xi = Covector::formal(4, vars::xi);
  const ExtOp p = p_op(xi);
  CHECK(p == wedge_op(xi) * contract_op(xi) * GaussRational(2) - ExtOp::identity(4) * pairing(xi, xi));
  CHECK(p(0, 0) == -pairing(xi, xi));
  CHECK(p * p == ExtOp::identity(4) * pairing(xi, xi).pow(2));
}

TEST_CASE("clifford actions") {
  for (int j = 1; j <= 4; ++j) {
    const ExtOp c = clifford_op(4, j, CliffordKind::plain), cb = clifford_op(4, j, CliffordKind::bar);
    CHECK(c * c == -ExtOp::identity(4));
    CHECK(cb * cb == ExtOp::identity(4));
    CHECK((c * cb + cb * c).is_zero());
  }
  CHECK_THROWS_AS(clifford_op(4, 5, CliffordKind::plain), Error);
}

TEST_CASE("graded traces") {
  CHECK(graded_trace(ExtOp::identity(4), 2) == Poly(6));
  CHECK(graded_trace(ExtOp::identity(5), 2) == Poly(10));
  const Covector xi = Covector::formal(4, vars::xi);
  CHECK(graded_trace(wedge_op(Covector::basis(4, 4)) * contract_op(xi.tangential()), 2).is_zero());
  try {
    graded_trace(ExtOp::identity(4), 5);
    FAIL("expected degree_out_of_range");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degree_out_of_range);
  }
}

TEST_CASE("trace cyclicity for random degree-preserving products") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> pick(1, 4);
  Var (*groups[])(int) = {vars::xi, vars::eta, vars::zeta, vars::theta};
  for (int trial = 0; trial < 10; ++trial) {
    const Covector a = Covector::formal(4, groups[pick(rng) - 1]);
    const Covector b = Covector::formal(4, groups[pick(rng) - 1]);
    const Covector c = Covector::basis(4, pick(rng));
    const ExtOp A = wedge_op(a) * contract_op(b);
    const ExtOp B = contract_op(c) * wedge_op(a) + wedge_op(c) * contract_op(b);
    for (int m = 0; m <= 4; ++m) {
      CHECK(graded_trace(A * B, m) == graded_trace(B * A, m));
      CHECK(trace_product(A, B, m) == graded_trace(A * B, m));
    }
  }
}

TEST_CASE("dimension mismatch is an error") {
  const Covector a = Covector::basis(4, 1), b = Covector::basis(5, 1);
  try {
    pairing(a, b);
    FAIL("expected dimension_mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension_mismatch);
  }
  CHECK_THROWS_AS(wedge_op(Covector::basis(4, 1)) * wedge_op(Covector::basis(5, 1)), Error);
}
