#pragma once

#include <cstdint>

#include "qlink/diagram.hpp"

namespace qlink {

/// Deterministic random Morse diagram with at most max_crossings crossings
/// and at most 8 strands at any level. Every slice carries a single event.
/// Besides loose crossings, cups and caps it plants stacked crossing pairs,
/// crossing triples and zig-zags so the move catalogue has sites to act on.
/// Open diagrams get a random domain of 1 to 4 strands.
MorseDiagram random_diagram(std::uint64_t seed, int max_crossings, bool closed);

/// First closed one-component diagram from a deterministic stream of
/// random_diagram seeds derived from `seed`.
MorseDiagram random_knot(std::uint64_t seed, int max_crossings);

}  // namespace qlink
