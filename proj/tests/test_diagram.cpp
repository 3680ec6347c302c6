#include <set>

#include "doctest.h"
#include "qlink/diagram.hpp"
#include "qlink/error.hpp"
#include "qlink/random_diagram.hpp"
#include "support.hpp"

using namespace qlink;

TEST_CASE("parsing the small examples") {
  const MorseDiagram u = parse_morse("in:\nslice: u>\nslice: n\n");
  CHECK(u.closed());
  CHECK(u.crossing_count() == 0);
  CHECK(components(u).size() == 1);

  const MorseDiagram id = parse_morse("in: +\nslice: id\n");
  CHECK(id.domain() == SignList{1});
  CHECK(id.codomain() == SignList{1});
  CHECK(components(id).size() == 1);
  CHECK(!components(id)[0].closed);

  const MorseDiagram t = testing::load("trefoil_pos.morse");
  CHECK(t.closed());
  CHECK(t.crossing_count() == 3);
  CHECK(components(t).size() == 1);
}

TEST_CASE("cups emit their documented signs") {
  CHECK(parse_morse("in:\nslice: u>\n").codomain() == SignList{-1, 1});
  CHECK(parse_morse("in:\nslice: u<\n").codomain() == SignList{1, -1});
  CHECK(parse_morse("in: + -\nslice: x/\n").codomain() == SignList{-1, 1});
}

TEST_CASE("parse errors carry their location") {
  try {
    parse_morse("# comment\nin: +\nslice: id q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
  }
  try {
    parse_morse("in: + +\nslice: n\n");
    FAIL("expected a diagram error");
  } catch (const DiagramError& e) {
    CHECK(e.slice() == 0);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("slice 0: slice") == std::string::npos);
  }
  CHECK_THROWS_AS(parse_morse("in: +\nslice: id id\n"), DiagramError);
  CHECK_THROWS_AS(parse_morse("slice: id\n"), ParseError);
  CHECK_THROWS_AS(parse_morse("in: + *\n"), ParseError);
}

TEST_CASE("render and parse round-trip") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const MorseDiagram d = random_diagram(s, 6, s % 2 == 0);
    CHECK(parse_morse(render_morse(d)) == d);
  }
  CHECK(render_morse(parse_morse("in: + -\nslice: x\\\n")) == "in: + -\nslice: x\\\n");
}

TEST_CASE("compose") {
  const MorseDiagram id = MorseDiagram::identity({1});
  CHECK(compose(id, id).domain() == SignList{1});
  CHECK(compose(id, id).codomain() == SignList{1});
  const MorseDiagram cup = parse_morse("in:\nslice: u>\n");
  const MorseDiagram cap = parse_morse("in: - +\nslice: n\n");
  const MorseDiagram circle = compose(cup, cap);
  CHECK(circle == testing::load("unknot_ccw.morse"));
  const MorseDiagram pm = MorseDiagram::identity({1, -1});
  const MorseDiagram pp = MorseDiagram::identity({1, 1});
  CHECK_THROWS_AS(compose(pm, pp), DiagramError);

  // Associativity on composable random pieces.
  const MorseDiagram a = parse_morse("in: + +\nslice: x/\n");
  const MorseDiagram b = parse_morse("in: + +\nslice: id u< id\n");
  const MorseDiagram c = parse_morse("in: + + - +\nslice: id x\\ id\nslice: id n id\n");
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("tensor") {
  const MorseDiagram empty;
  const MorseDiagram t = testing::load("trefoil_neg.morse");
  CHECK(tensor(empty, t) == t);
  CHECK(tensor(t, empty) == t);
  CHECK(tensor(MorseDiagram::identity({1}), MorseDiagram::identity({-1})) == MorseDiagram::identity({1, -1}));
  const MorseDiagram u = testing::load("unknot_ccw.morse");
  const MorseDiagram uu = tensor(u, u);
  CHECK(uu.closed());
  CHECK(components(uu).size() == 2);
  const MorseDiagram h = testing::load("hopf_pos.morse");
  CHECK(tensor(tensor(u, h), t) == tensor(u, tensor(h, t)));
}

TEST_CASE("orientation reversal") {
  CHECK(reverse_orientation(MorseDiagram::identity({1})) == MorseDiagram::identity({-1}));
  CHECK(reverse_orientation(testing::load("unknot_ccw.morse")) == testing::load("unknot_cw.morse"));
  for (std::uint64_t s = 0; s < 40; ++s) {
    const MorseDiagram d = random_diagram(s, 6, s % 3 != 0);
    const MorseDiagram r = reverse_orientation(d);
    CHECK(reverse_orientation(r) == d);
    // Both strands flip, so crossing signs survive.
    const auto xs = crossings(d), ys = crossings(r);
    REQUIRE(xs.size() == ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i].sign == ys[i].sign);
  }
}

TEST_CASE("crossing classes and signs") {
  const auto up = crossings(parse_morse("in: + +\nslice: x/\nslice: x\\\n"));
  REQUIRE(up.size() == 2);
  CHECK(up[0].cls == CrossClass::Up);
  CHECK(up[0].sign == 1);
  CHECK(up[1].sign == -1);
  const auto right = crossings(parse_morse("in: + -\nslice: x\\\n"));
  CHECK(right[0].cls == CrossClass::Right);
  CHECK(right[0].sign == 1);
  const auto left = crossings(parse_morse("in: - +\nslice: x/\n"));
  CHECK(left[0].cls == CrossClass::Left);
  CHECK(left[0].sign == -1);
  const auto down = crossings(parse_morse("in: - -\nslice: x/\n"));
  CHECK(down[0].cls == CrossClass::Down);
  CHECK(down[0].sign == 1);
}

TEST_CASE("components partition the arcs") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const MorseDiagram d = random_diagram(s, 8, s % 2 == 1);
    std::set<Arc> seen;
    std::size_t total = 0;
    for (const auto& c : components(d)) {
      total += c.arcs.size();
      for (const Arc& a : c.arcs) CHECK(seen.insert(a).second);
      if (d.closed()) CHECK(c.closed);
    }
    CHECK(total == static_cast<std::size_t>(d.arc_count()));
    CHECK(components(d).size() == components(d).size());
  }
}

TEST_CASE("random diagrams") {
  const MorseDiagram circles = random_diagram(1, 0, true);
  CHECK(circles.closed());
  CHECK(circles.crossing_count() == 0);
  CHECK(components(circles).size() >= 1);
  const MorseDiagram d = random_diagram(7, 5, true);
  CHECK(d.closed());
  CHECK(d.crossing_count() <= 5);
  CHECK(parse_morse(render_morse(d)) == d);
  CHECK(random_diagram(99, 8, false) == random_diagram(99, 8, false));
  for (std::uint64_t s = 0; s < 100; ++s) {
    const MorseDiagram e = random_diagram(s, 10, true);
    CHECK(e.crossing_count() <= 10);
    CHECK(e.max_width() <= 8);
  }
  const MorseDiagram k = random_knot(3, 6);
  CHECK(components(k).size() == 1);
}
