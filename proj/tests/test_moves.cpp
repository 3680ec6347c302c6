#include <algorithm>

#include "doctest.h"
#include "qlink/error.hpp"
#include "qlink/moves.hpp"
#include "qlink/random_diagram.hpp"
#include "support.hpp"

using namespace qlink;

namespace {

bool has_kind(const std::vector<MoveSite>& sites, MoveKind k) {
  return std::any_of(sites.begin(), sites.end(), [&](const MoveSite& m) { return m.kind == k; });
}

const MoveSite* find_site(const std::vector<MoveSite>& sites, MoveKind k, int variant) {
  for (const auto& m : sites) {
    if (m.kind == k && m.variant == variant) return &m;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("identity diagrams only slide") {
  for (const auto& m : enumerate_move_sites(MorseDiagram::identity({1, -1, 1}))) CHECK(m.kind == MoveKind::PlanarSlide);
  const MorseDiagram two = parse_morse("in: + -\nslice: id id\nslice: id id\n");
  for (const auto& m : enumerate_move_sites(two)) CHECK(m.kind == MoveKind::PlanarSlide);
}

TEST_CASE("R2 cancellation") {
  const MorseDiagram d = parse_morse("in: + +\nslice: x/\nslice: x\\\n");
  const auto sites = enumerate_move_sites(d);
  const MoveSite* m = find_site(sites, MoveKind::R2Parallel, 0);
  REQUIRE(m != nullptr);
  const MorseDiagram e = apply_move(d, *m);
  CHECK(e.crossing_count() == 0);
  CHECK(e.domain() == d.domain());
  CHECK(e.codomain() == d.codomain());
  CHECK(apply_move(e, inverse_of(d, *m)) == d);

  const MorseDiagram rev = parse_morse("in: + -\nslice: x/\nslice: x\\\n");
  CHECK(has_kind(enumerate_move_sites(rev), MoveKind::R2Reverse));
}

TEST_CASE("zig-zag cancellation") {
  const MorseDiagram z = parse_morse("in: +\nslice: id u>\nslice: n id\n");
  const auto sites = enumerate_move_sites(z);
  REQUIRE(has_kind(sites, MoveKind::CupCapCancel));
  for (const auto& m : sites) {
    if (m.kind != MoveKind::CupCapCancel) continue;
    CHECK(apply_move(z, m) == MorseDiagram::identity({1}));
  }
}

TEST_CASE("switchback turns a crossing sideways") {
  const MorseDiagram d = parse_morse("in: + + -\nslice: x/ id\nslice: id n\n");
  const auto sites = enumerate_move_sites(d);
  const MoveSite* m = find_site(sites, MoveKind::Switchback, 1);
  if (m == nullptr) m = find_site(sites, MoveKind::Switchback, 0);
  REQUIRE(m != nullptr);
  const MorseDiagram e = apply_move(d, *m);
  REQUIRE(e.crossing_count() == 1);
  CHECK(crossings(d)[0].cls == CrossClass::Up);
  CHECK(crossings(e)[0].cls != CrossClass::Up);
  CHECK(crossings(e)[0].sign == crossings(d)[0].sign);
  CHECK(apply_move(e, inverse_of(d, *m)) == d);
}

TEST_CASE("invalid sites are rejected") {
  const MorseDiagram d = parse_morse("in: + +\nslice: x/\n");
  CHECK_THROWS_AS(apply_move(d, MoveSite{MoveKind::R2Parallel, 0, 0, 0}), DiagramError);
  CHECK_THROWS_AS(apply_move(d, MoveSite{MoveKind::R3, 0, 5, 0}), DiagramError);
}

TEST_CASE("moves preserve boundary and components and invert") {
  int kinds[6] = {0, 0, 0, 0, 0, 0};
  for (std::uint64_t s = 0; s < 60; ++s) {
    const MorseDiagram d = random_diagram(s, 6, s % 2 == 0);
    const std::size_t comps = components(d).size();
    for (const MoveSite& m : enumerate_move_sites(d, s % 5 == 0)) {
      ++kinds[static_cast<int>(m.kind)];
      const MorseDiagram e = apply_move(d, m);
      CHECK(e.domain() == d.domain());
      CHECK(e.codomain() == d.codomain());
      CHECK(components(e).size() == comps);
      const MoveSite back = inverse_of(d, m);
      const auto e_sites = enumerate_move_sites(e, true);
      CHECK(std::find(e_sites.begin(), e_sites.end(), back) != e_sites.end());
      CHECK(apply_move(e, back) == d);
    }
  }
  for (int k : kinds) CHECK(k > 0);
}
