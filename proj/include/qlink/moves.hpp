#pragma once

#include <string>
#include <vector>

#include "qlink/diagram.hpp"

namespace qlink {

/// Regular-isotopy rewrite families in Morse form.
enum class MoveKind : std::uint8_t { PlanarSlide, R2Parallel, R2Reverse, R3, Switchback, CupCapCancel };

std::string_view move_name(MoveKind k);

/// A located rewrite.
///
/// Variants:
///   PlanarSlide   0 swap two commuting single-event slices, 1 split a slice
///                 (leftmost event first), 2 merge two slices
///   R2*           0 cancel a stacked crossing pair at (slice, position),
///                 1 insert x/ then x\ at level `slice`, 2 insert x\ then x/
///   R3            0 crossings at p, p+1, p -> p+1, p, p+1; 1 the reverse
///   Switchback    0 crossing right of a cap -> left of it, 1 the reverse,
///                 2 cup then crossing on its right leg -> on its left leg,
///                 3 the reverse
///   CupCapCancel  0 Z zig-zag removal, 1 S zig-zag removal,
///                 2 Z insertion on strand `position` at level `slice`, 3 S
///                 insertion
/// Single-event slices are required except by PlanarSlide split/merge.
struct MoveSite {
  MoveKind kind = MoveKind::PlanarSlide;
  int variant = 0;
  int slice = 0;
  int position = 0;

  friend bool operator==(const MoveSite& a, const MoveSite& b) {
    return a.kind == b.kind && a.variant == b.variant && a.slice == b.slice && a.position == b.position;
  }
};

std::string describe(const MoveSite& m);

/// Every pattern-matched site in d. Insertions (R2 variants 1/2,
/// CupCapCancel variants 2/3) are only listed when include_insertions is set;
/// there is one per level and strand, so they swamp the list otherwise.
std::vector<MoveSite> enumerate_move_sites(const MorseDiagram& d, bool include_insertions = false);

/// Throws DiagramError when the site does not match d.
MorseDiagram apply_move(const MorseDiagram& d, const MoveSite& m);

/// The site on apply_move(d, m) that undoes m.
MoveSite inverse_of(const MorseDiagram& d, const MoveSite& m);

/// The single non-Id event of a slice, or -1 when there are zero or several.
int sole_event(const Slice& s);

}  // namespace qlink
