#include <set>

#include "doctest.h"
#include "qlink/beads.hpp"
#include "qlink/error.hpp"
#include "qlink/evaluator.hpp"
#include "qlink/homfly.hpp"
#include "qlink/random_diagram.hpp"
#include "support.hpp"

using namespace qlink;
using testing::q;

TEST_CASE("signifier letters") {
  CHECK(Signifier{1, 1, true, 0}.letter() == "e1");
  CHECK(Signifier{2, 2, false, 0}.letter() == "E2'");
  const BeadWord w{-1, {{1, 1, false, 1}, {2, 2, false, 2}, {1, 2, false, 0}}};
  CHECK(w.to_string() == "G^-1 (t E1) (t^2 E2') E1'");
}

TEST_CASE("the identity strand") {
  for (int n : {1, 2, 3}) {
    const MatrixOQA h = build_homfly(n);
    const BeadWord up = bead_word(MorseDiagram::identity({1}));
    CHECK(up.curl_count == 0);
    CHECK(up.word.empty());
    CHECK(evaluate_word(up, h) == n);
    // Closing it up adds one curl and gives the loop value.
    const BeadWord closed = closed_word(up, MorseDiagram::identity({1}));
    CHECK(closed.curl_count == 1);
    CHECK(evaluate_word(closed, h) == closure_value(MorseDiagram::identity({1}), h));
    const BeadWord down = closed_word(bead_word(MorseDiagram::identity({-1})), MorseDiagram::identity({-1}));
    CHECK(down.curl_count == -1);
    CHECK(evaluate_word(down, h) == closure_value(MorseDiagram::identity({-1}), h));
  }
}

TEST_CASE("circles") {
  CHECK(bead_word(testing::load("unknot_ccw.morse")).curl_count == -1);
  CHECK(bead_word(testing::load("unknot_cw.morse")).curl_count == 1);
}

TEST_CASE("trefoil normal form") {
  // The long trefoil; the closed braid drawing has a different turning
  // number and so a different curl count.
  CHECK(bead_word(testing::load("trefoil_pos.morse")).curl_count == 0);
  const BeadWord bw = bead_word(testing::load("trefoil_tangle.morse"));
  INFO(bw.to_string());
  CHECK(bw.curl_count == -1);
  REQUIRE(bw.word.size() == 6);
  // Three t-decorated beads, legs alternating, then their partners in the
  // same crossing order with the opposite legs.
  std::set<int> seen;
  for (int i = 0; i < 3; ++i) {
    CHECK(bw.word[static_cast<std::size_t>(i)].t_power == 1);
    CHECK(bw.word[static_cast<std::size_t>(i + 3)].t_power == 0);
    CHECK(bw.word[static_cast<std::size_t>(i)].crossing == bw.word[static_cast<std::size_t>(i + 3)].crossing);
    CHECK(bw.word[static_cast<std::size_t>(i)].leg != bw.word[static_cast<std::size_t>(i + 3)].leg);
    seen.insert(bw.word[static_cast<std::size_t>(i)].crossing);
  }
  CHECK(seen.size() == 3);
  CHECK(bw.word[0].leg == bw.word[2].leg);
  CHECK(bw.word[0].leg != bw.word[1].leg);
  CHECK(bw.to_string() == "G^-1 (t E1) (t E2') (t E3) E1' E2 E3'");
  CHECK(reverse_word(bw).curl_count == 1);
}

TEST_CASE("every crossing contributes both legs once") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const MorseDiagram d = random_knot(s, 6);
    const BeadWord bw = bead_word(d);
    const auto cs = crossings(d);
    REQUIRE(bw.word.size() == 2 * cs.size());
    std::set<std::pair<int, int>> legs;
    for (const auto& sg : bw.word) {
      legs.insert({sg.crossing, sg.leg});
      CHECK(sg.positive == (cs[static_cast<std::size_t>(sg.crossing - 1)].sign > 0));
      CHECK(sg.t_power >= 0);
    }
    CHECK(legs.size() == bw.word.size());
  }
}

TEST_CASE("path independence") {
  for (int n : {2, 3}) {
    const MatrixOQA h = build_homfly(n);
    const DiagramMatrices m = diagram_matrices(h);
    for (const auto& f : testing::knot_fixtures()) {
      const MorseDiagram d = testing::load(f);
      CHECK(evaluate_word(bead_word(d), h) == evaluate(d, m).scalar());
    }
    for (std::uint64_t s = 0; s < 30; ++s) {
      const MorseDiagram d = random_knot(s + 100, 7);
      CHECK(evaluate_word(bead_word(d), h) == evaluate(d, m).scalar());
    }
    const MorseDiagram t = testing::load("trefoil_tangle.morse");
    CHECK(evaluate_word(closed_word(bead_word(t), t), h) == closure_value(t, m));
  }
}

TEST_CASE("reversal") {
  const MatrixOQA h = build_homfly(2);
  for (const auto& f : testing::knot_fixtures()) {
    const MorseDiagram d = testing::load(f);
    const BeadWord bw = bead_word(d);
    CHECK(reverse_word(reverse_word(bw)) == bw);
    CHECK(evaluate_word(reverse_word(bw), h) == evaluate(reverse_orientation(d), h).scalar());
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MorseDiagram d = random_knot(s + 300, 6);
    CHECK(evaluate_word(reverse_word(bead_word(d)), h) == evaluate(reverse_orientation(d), h).scalar());
  }
}

TEST_CASE("multi-component and open inputs are rejected") {
  CHECK_THROWS_AS(bead_word(testing::load("hopf_pos.morse")), Error);
  CHECK_THROWS_AS(bead_word(MorseDiagram::identity({1, 1})), Error);
}
