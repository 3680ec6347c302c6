#include "doctest.h"
#include "qlink/error.hpp"
#include "qlink/evaluator.hpp"
#include "qlink/homfly.hpp"
#include "qlink/random_diagram.hpp"
#include "support.hpp"

using namespace qlink;
using testing::q;

namespace {

// Trace of a product of background matrices, for loop values.
LaurentPoly trace(const Matrix& m) {
  LaurentPoly t;
  for (int i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

// Composition oracle: boundary tensors of stacked tangles multiply as
// matrices over the middle colouring.
BoundaryTensor stack(const BoundaryTensor& a, const BoundaryTensor& b) {
  BoundaryTensor r;
  r.in_signs = a.in_signs;
  r.out_signs = b.out_signs;
  for (const auto& [ka, va] : a.entries)
    for (const auto& [kb, vb] : b.entries)
      if (ka.second == kb.first) r.entries[{ka.first, kb.second}] += va * vb;
  for (auto it = r.entries.begin(); it != r.entries.end();) it = it->second.is_zero() ? r.entries.erase(it) : std::next(it);
  return r;
}

}  // namespace

TEST_CASE("diagram matrices of the Homfly algebra") {
  for (int n : {2, 3}) {
    const MatrixOQA h = build_homfly(n);
    const DiagramMatrices m = diagram_matrices(h);
    CHECK(m.convention == 0);
    CHECK(m.notes.empty());
    const Tensor4 id = Tensor4::identity(n);
    CHECK(matmul(m.r_up, m.s_up) == id);
    CHECK(matmul(m.s_up, m.r_up) == id);
    CHECK(matmul(m.r_down, m.s_down) == id);
    CHECK(m.cap_cw == h.m_up);
    CHECK(m.cup_ccw == h.m_up_inv);
    // The positive upward crossing is rho with its upper pair swapped.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) CHECK(m.r_up(a, b, c, d) == h.rho(b, a, c, d));
  }
}

TEST_CASE("an algebra that fails the probes is rejected in strict mode") {
  MatrixOQA broken = build_homfly(2);
  broken.rho(1, 0, 0, 1) = q(1) + q(-1);
  CHECK_THROWS_AS(diagram_matrices(broken), AlgebraError);
  const DiagramMatrices m = diagram_matrices(broken, false);
  CHECK(!m.notes.empty());
}

TEST_CASE("loop values") {
  for (int n : {1, 2, 3, 4}) {
    const MatrixOQA h = build_homfly(n);
    const LaurentPoly ccw = trace(h.m_up_inv * h.m_down_inv);
    const LaurentPoly cw = trace(h.m_up * h.m_down);
    CHECK(evaluate(testing::load("unknot_ccw.morse"), h).scalar() == ccw);
    CHECK(evaluate(testing::load("unknot_cw.morse"), h).scalar() == cw);
    const MorseDiagram two = tensor(testing::load("unknot_ccw.morse"), testing::load("unknot_cw.morse"));
    CHECK(evaluate(two, h).scalar() == ccw * cw);
  }
  CHECK(evaluate(testing::load("unknot_ccw.morse"), build_homfly(2)).scalar() == q(-2) + q(-4));
}

TEST_CASE("the identity tangle is the identity matrix") {
  const MatrixOQA h = build_homfly(3);
  const BoundaryTensor t = evaluate(MorseDiagram::identity({1, -1}), h);
  CHECK(t.entries.size() == 9);
  for (const auto& [k, v] : t.entries) {
    CHECK(k.first == k.second);
    CHECK(v == 1);
  }
  CHECK_THROWS_AS(t.scalar(), Error);
}

TEST_CASE("parallel kernel, serial reference and naive sum agree") {
  for (int n : {2, 3}) {
    const DiagramMatrices m = diagram_matrices(build_homfly(n));
    for (std::uint64_t s = 0; s < 30; ++s) {
      const MorseDiagram d = random_diagram(s, 6, s % 3 != 0);
      const BoundaryTensor fast = evaluate(d, m);
      CHECK(fast == evaluate_serial(d, m));
      CHECK(fast == contract_naive(d, m));
    }
    for (const auto& f : testing::closed_fixtures()) {
      const MorseDiagram d = testing::load(f);
      CHECK(evaluate(d, m) == contract_naive(d, m));
    }
  }
}

TEST_CASE("composition of tangles multiplies boundary tensors") {
  const DiagramMatrices m = diagram_matrices(build_homfly(2));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MorseDiagram d = random_diagram(s, 6, false);
    if (d.num_slices() < 2) continue;
    const int cut = d.num_slices() / 2;
    const std::vector<Slice> lo(d.slices().begin(), d.slices().begin() + cut);
    const std::vector<Slice> hi(d.slices().begin() + cut, d.slices().end());
    const MorseDiagram a(d.domain(), lo);
    const MorseDiagram b(a.codomain(), hi);
    CHECK(stack(evaluate(a, m), evaluate(b, m)) == evaluate(d, m));
  }
}

TEST_CASE("naive contraction has a size guard") {
  const DiagramMatrices m = diagram_matrices(build_homfly(2));
  CHECK_THROWS_AS(contract_naive(testing::load("figure_eight.morse"), m, 4), Error);
}

TEST_CASE("closure of a 1-1 tangle") {
  const DiagramMatrices m = diagram_matrices(build_homfly(2));
  const MorseDiagram t = testing::load("trefoil_tangle.morse");
  const MorseDiagram c = closure_diagram(t);
  CHECK(c.closed());
  CHECK(c.crossing_count() == 3);
  CHECK(closure_value(t, m) == evaluate(c, m).scalar());
  // The tangle tensor is a multiple of the identity.
  const BoundaryTensor bt = evaluate(t, m);
  CHECK(bt.entries.size() == 2);
  CHECK(bt.at({0}, {0}) == bt.at({1}, {1}));
  // Closing the identity strand gives a clockwise (upward) or
  // counterclockwise (downward) loop.
  CHECK(closure_value(MorseDiagram::identity({1}), m) == evaluate(testing::load("unknot_cw.morse"), m).scalar());
  CHECK(closure_value(MorseDiagram::identity({-1}), m) == evaluate(testing::load("unknot_ccw.morse"), m).scalar());
  CHECK_THROWS_AS(closure_diagram(MorseDiagram::identity({1, 1})), Error);
}

TEST_CASE("standardization keeps closed invariants") {
  const MatrixOQA h = build_homfly(2);
  const MatrixOQA s = standardize(h);
  for (const auto& f : testing::closed_fixtures()) {
    const MorseDiagram d = testing::load(f);
    CHECK(evaluate(d, h).scalar() == evaluate(d, s).scalar());
  }
}

TEST_CASE("mirror trefoils differ") {
  const MatrixOQA h = build_homfly(2);
  const LaurentPoly pos = evaluate(testing::load("trefoil_pos.morse"), h).scalar();
  const LaurentPoly neg = evaluate(testing::load("trefoil_neg.morse"), h).scalar();
  CHECK(pos != neg);
  CHECK(pos == -q(-3) + q(1) + q(3) + q(5));
  CHECK(neg == q(-5) + q(-3) + q(-1) - q(3));
}

TEST_CASE("frontier width limit") {
  const DiagramMatrices m = diagram_matrices(build_homfly(2));
  // 33 nested cups: 66 strands of one bit each exceed the 64-bit key.
  std::string nested = "in:\nslice: u<\n";
  for (int i = 1; i < 33; ++i) {
    nested += "slice:";
    for (int j = 0; j < i; ++j) nested += " id";
    nested += " u<";
    for (int j = 0; j < i; ++j) nested += " id";
    nested += "\n";
  }
  CHECK_THROWS_AS(evaluate(parse_morse(nested), m), Error);
}
