#include "qlink/moves.hpp"

#include "qlink/error.hpp"

namespace qlink {

std::string_view move_name(MoveKind k) {
  switch (k) {
    case MoveKind::PlanarSlide: return "PlanarSlide";
    case MoveKind::R2Parallel: return "R2Parallel";
    case MoveKind::R2Reverse: return "R2Reverse";
    case MoveKind::R3: return "R3";
    case MoveKind::Switchback: return "Switchback";
    case MoveKind::CupCapCancel: return "CupCapCancel";
  }
  return "?";
}

std::string describe(const MoveSite& m) {
  return std::string(move_name(m.kind)) + "/" + std::to_string(m.variant) + " at slice " +
         std::to_string(m.slice) + ", strand " + std::to_string(m.position);
}

int sole_event(const Slice& s) {
  int found = -1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == Ev::Id) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(j);
  }
  return found;
}

namespace {

// Slice over `width` incoming strands with one event at strand `pos`.
Slice make_slice(int width, int pos, Ev e) {
  Slice s(static_cast<std::size_t>(pos), Ev::Id);
  s.push_back(e);
  for (int i = pos + width_in(e); i < width; ++i) s.push_back(Ev::Id);
  return s;
}

// The single event of slice k: its token and bottom offset.
struct Single {
  bool ok = false;
  Ev ev = Ev::Id;
  int pos = 0;
};

Single single(const MorseDiagram& d, int k) {
  if (k < 0 || k >= d.num_slices()) return {};
  const int j = sole_event(d.slices()[static_cast<std::size_t>(k)]);
  if (j < 0) return {};
  return {true, d.slices()[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
          d.spans(k)[static_cast<std::size_t>(j)].bottom};
}

bool is_cross_at(const Single& s, int p) { return s.ok && is_crossing(s.ev) && s.pos == p; }

int width(const MorseDiagram& d, int level) { return static_cast<int>(d.level(level).size()); }

MoveKind r2_kind(const MorseDiagram& d, int level, int p) {
  const SignList& l = d.level(level);
  return l[static_cast<std::size_t>(p)] == l[static_cast<std::size_t>(p + 1)] ? MoveKind::R2Parallel
                                                                            : MoveKind::R2Reverse;
}

bool cyclic(Ev a, Ev b, Ev c) { return a == c && a != b; }

// Both slices hold one event each and the upper one avoids the lower one's
// outputs. Returns the side: -1 upper event to the left, +1 to the right.
int disjoint_side(const Single& a, const Single& b) {
  const int wout_a = width_out(a.ev);
  if (b.pos + width_in(b.ev) <= a.pos) return -1;
  if (b.pos >= a.pos + wout_a) return 1;
  return 0;
}

// A cap followed by a cup at the same spot: the cup may slide down on
// either side of the cap. MoveSite::position 1 picks the right.
bool side_ambiguous(const Single& a, const Single& b) {
  return width_out(a.ev) == 0 && width_in(b.ev) == 0 && a.pos == b.pos;
}

[[noreturn]] void bad_site(const MoveSite& m, const std::string& why) {
  throw DiagramError(m.slice, "invalid move site " + describe(m) + ": " + why);
}

std::vector<Slice> replace_slices(const MorseDiagram& d, int k, int count, std::vector<Slice> with) {
  std::vector<Slice> s = d.slices();
  s.erase(s.begin() + k, s.begin() + k + count);
  s.insert(s.begin() + k, with.begin(), with.end());
  return s;
}

bool can_merge(const MorseDiagram& d, int k) {
  const Single a = single(d, k);
  if (!a.ok || k + 1 >= d.num_slices()) return false;
  const Slice& up = d.slices()[static_cast<std::size_t>(k + 1)];
  bool any = false;
  for (std::size_t j = 0; j < up.size(); ++j) {
    if (up[j] == Ev::Id) continue;
    if (d.spans(k + 1)[j].bottom < a.pos + width_out(a.ev)) return false;
    any = true;
  }
  return any;
}

int non_id_count(const Slice& s) {
  int n = 0;
  for (Ev e : s) n += e != Ev::Id;
  return n;
}

}  // namespace

std::vector<MoveSite> enumerate_move_sites(const MorseDiagram& d, bool include_insertions) {
  std::vector<MoveSite> out;
  const int n = d.num_slices();
  for (int k = 0; k < n; ++k) {
    const Single a = single(d, k);
    const Single b = single(d, k + 1);
    const Single c = single(d, k + 2);
    if (a.ok && b.ok && disjoint_side(a, b) != 0) {
      out.push_back({MoveKind::PlanarSlide, 0, k, 0});
      if (side_ambiguous(a, b)) out.push_back({MoveKind::PlanarSlide, 0, k, 1});
    }
    if (non_id_count(d.slices()[static_cast<std::size_t>(k)]) >= 2) out.push_back({MoveKind::PlanarSlide, 1, k, 0});
    if (can_merge(d, k)) out.push_back({MoveKind::PlanarSlide, 2, k, 0});
    if (!a.ok) continue;
    const int p = a.pos;
    if (is_crossing(a.ev) && is_cross_at(b, p) && b.ev == flip_crossing(a.ev)) {
      out.push_back({r2_kind(d, k, p), 0, k, p});
    }
    if (is_crossing(a.ev) && is_cross_at(b, p + 1) && is_cross_at(c, p) && !cyclic(a.ev, b.ev, c.ev)) {
      out.push_back({MoveKind::R3, 0, k, p});
    }
    if (is_crossing(a.ev) && p >= 1 && is_cross_at(b, p - 1) && is_cross_at(c, p) &&
        !cyclic(a.ev, b.ev, c.ev)) {
      out.push_back({MoveKind::R3, 1, k, p - 1});
    }
    if (is_crossing(a.ev) && b.ok && b.ev == Ev::Cap) {
      if (p >= 1 && b.pos == p - 1) out.push_back({MoveKind::Switchback, 0, k, p - 1});
      if (b.pos == p + 1) out.push_back({MoveKind::Switchback, 1, k, p});
    }
    if (is_cup(a.ev) && b.ok && is_crossing(b.ev)) {
      if (b.pos == p + 1) out.push_back({MoveKind::Switchback, 2, k, p});
      if (p >= 1 && b.pos == p - 1) out.push_back({MoveKind::Switchback, 3, k, p - 1});
    }
    if (is_cup(a.ev) && b.ok && b.ev == Ev::Cap) {
      if (b.pos == p + 1) out.push_back({MoveKind::CupCapCancel, 0, k, p});
      if (p >= 1 && b.pos == p - 1) out.push_back({MoveKind::CupCapCancel, 1, k, p - 1});
    }
  }
  if (include_insertions) {
    for (int k = 0; k <= n; ++k) {
      const int w = width(d, k);
      for (int p = 0; p + 1 < w; ++p) {
        out.push_back({r2_kind(d, k, p), 1, k, p});
        out.push_back({r2_kind(d, k, p), 2, k, p});
      }
      for (int p = 0; p < w; ++p) {
        out.push_back({MoveKind::CupCapCancel, 2, k, p});
        out.push_back({MoveKind::CupCapCancel, 3, k, p});
      }
    }
  }
  return out;
}

MorseDiagram apply_move(const MorseDiagram& d, const MoveSite& m) {
  const int k = m.slice;
  const int p = m.position;
  const int n = d.num_slices();
  if (k < 0 || k > n) bad_site(m, "slice out of range");
  const Single a = single(d, k);
  const Single b = single(d, k + 1);
  const Single c = single(d, k + 2);
  switch (m.kind) {
    case MoveKind::PlanarSlide: {
      if (m.variant == 0) {
        if (!a.ok || !b.ok) bad_site(m, "needs two single-event slices");
        int side = disjoint_side(a, b);
        if (side == 0) bad_site(m, "events share strands");
        if (m.position != 0 && !side_ambiguous(a, b)) bad_site(m, "no choice of side here");
        if (m.position != 0) side = 1;
        const int w = width(d, k);
        int pb = b.pos, pa = a.pos;
        if (side < 0) pa += width_out(b.ev) - width_in(b.ev);
        else pb -= width_out(a.ev) - width_in(a.ev);
        Slice lower = make_slice(w, pb, b.ev);
        Slice upper = make_slice(w - width_in(b.ev) + width_out(b.ev), pa, a.ev);
        return MorseDiagram(d.domain(), replace_slices(d, k, 2, {lower, upper}));
      }
      if (m.variant == 1) {
        if (k >= n) bad_site(m, "slice out of range");
        const Slice& s = d.slices()[static_cast<std::size_t>(k)];
        if (non_id_count(s) < 2) bad_site(m, "slice has fewer than two events");
        std::size_t j0 = 0;
        while (s[j0] == Ev::Id) ++j0;
        const Ev e = s[j0];
        Slice lower = make_slice(width(d, k), d.spans(k)[j0].bottom, e);
        Slice upper;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j == j0) upper.insert(upper.end(), static_cast<std::size_t>(width_out(e)), Ev::Id);
          else upper.push_back(s[j]);
        }
        return MorseDiagram(d.domain(), replace_slices(d, k, 1, {lower, upper}));
      }
      if (m.variant == 2) {
        if (!can_merge(d, k)) bad_site(m, "slices cannot be merged");
        const Slice& up = d.slices()[static_cast<std::size_t>(k + 1)];
        Slice merged;
        bool placed = false;
        for (std::size_t j = 0; j < up.size(); ++j) {
          const int bpos = d.spans(k + 1)[j].bottom;
          if (bpos < a.pos) {
            merged.push_back(up[j]);
          } else if (bpos < a.pos + width_out(a.ev)) {
            continue;  // Ids over the lower event's outputs
          } else {
            if (!placed) {
              merged.push_back(a.ev);
              placed = true;
            }
            merged.push_back(up[j]);
          }
        }
        if (!placed) merged.push_back(a.ev);
        return MorseDiagram(d.domain(), replace_slices(d, k, 2, {merged}));
      }
      break;
    }
    case MoveKind::R2Parallel:
    case MoveKind::R2Reverse: {
      if (m.variant == 0) {
        if (!(a.ok && is_cross_at(a, p) && is_cross_at(b, p) && b.ev == flip_crossing(a.ev)))
          bad_site(m, "no stacked crossing pair");
        if (r2_kind(d, k, p) != m.kind) bad_site(m, "orientation does not match the move kind");
        return MorseDiagram(d.domain(), replace_slices(d, k, 2, {}));
      }
      if (m.variant == 1 || m.variant == 2) {
        const int w = width(d, k);
        if (p < 0 || p + 1 >= w) bad_site(m, "strand out of range");
        if (r2_kind(d, k, p) != m.kind) bad_site(m, "orientation does not match the move kind");
        const Ev first = m.variant == 1 ? Ev::CrossSlash : Ev::CrossBackslash;
        return MorseDiagram(d.domain(), replace_slices(d, k, 0,
                                                       {make_slice(w, p, first), make_slice(w, p, flip_crossing(first))}));
      }
      break;
    }
    case MoveKind::R3: {
      const int w = width(d, k);
      if (m.variant == 0) {
        if (!(is_cross_at(a, p) && is_cross_at(b, p + 1) && is_cross_at(c, p)))
          bad_site(m, "no 1-2-1 crossing triple");
        if (cyclic(a.ev, b.ev, c.ev)) bad_site(m, "cyclic over/under pattern");
        return MorseDiagram(d.domain(), replace_slices(d, k, 3,
                                                       {make_slice(w, p + 1, c.ev), make_slice(w, p, b.ev),
                                                        make_slice(w, p + 1, a.ev)}));
      }
      if (m.variant == 1) {
        if (!(is_cross_at(a, p + 1) && is_cross_at(b, p) && is_cross_at(c, p + 1)))
          bad_site(m, "no 2-1-2 crossing triple");
        if (cyclic(a.ev, b.ev, c.ev)) bad_site(m, "cyclic over/under pattern");
        return MorseDiagram(d.domain(), replace_slices(d, k, 3,
                                                       {make_slice(w, p, c.ev), make_slice(w, p + 1, b.ev),
                                                        make_slice(w, p, a.ev)}));
      }
      break;
    }
    case MoveKind::Switchback: {
      const int w = width(d, k);
      switch (m.variant) {
        case 0:
          if (!(is_cross_at(a, p + 1) && b.ok && b.ev == Ev::Cap && b.pos == p))
            bad_site(m, "no crossing right of a cap");
          return MorseDiagram(d.domain(), replace_slices(d, k, 2,
                                                         {make_slice(w, p, flip_crossing(a.ev)),
                                                          make_slice(w, p + 1, Ev::Cap)}));
        case 1:
          if (!(is_cross_at(a, p) && b.ok && b.ev == Ev::Cap && b.pos == p + 1))
            bad_site(m, "no crossing left of a cap");
          return MorseDiagram(d.domain(), replace_slices(d, k, 2,
                                                         {make_slice(w, p + 1, flip_crossing(a.ev)),
                                                          make_slice(w, p, Ev::Cap)}));
        case 2:
          if (!(a.ok && is_cup(a.ev) && a.pos == p && is_cross_at(b, p + 1)))
            bad_site(m, "no crossing on a cup's right leg");
          return MorseDiagram(d.domain(), replace_slices(d, k, 2,
                                                         {make_slice(w, p + 1, a.ev),
                                                          make_slice(w + 2, p, flip_crossing(b.ev))}));
        case 3:
          if (!(a.ok && is_cup(a.ev) && a.pos == p + 1 && is_cross_at(b, p)))
            bad_site(m, "no crossing on a cup's left leg");
          return MorseDiagram(d.domain(), replace_slices(d, k, 2,
                                                         {make_slice(w, p, a.ev),
                                                          make_slice(w + 2, p + 1, flip_crossing(b.ev))}));
        default: break;
      }
      break;
    }
    case MoveKind::CupCapCancel: {
      const int w = width(d, k);
      switch (m.variant) {
        case 0:
          if (!(a.ok && is_cup(a.ev) && a.pos == p && b.ok && b.ev == Ev::Cap && b.pos == p + 1))
            bad_site(m, "no Z zig-zag");
          return MorseDiagram(d.domain(), replace_slices(d, k, 2, {}));
        case 1:
          if (!(a.ok && is_cup(a.ev) && a.pos == p + 1 && b.ok && b.ev == Ev::Cap && b.pos == p))
            bad_site(m, "no S zig-zag");
          return MorseDiagram(d.domain(), replace_slices(d, k, 2, {}));
        case 2:
        case 3: {
          if (p < 0 || p >= w) bad_site(m, "strand out of range");
          const int s = d.level(k)[static_cast<std::size_t>(p)];
          if (m.variant == 2) {
            const Ev cup = s > 0 ? Ev::CupCw : Ev::CupCcw;
            return MorseDiagram(d.domain(), replace_slices(d, k, 0,
                                                           {make_slice(w, p, cup), make_slice(w + 2, p + 1, Ev::Cap)}));
          }
          const Ev cup = s > 0 ? Ev::CupCcw : Ev::CupCw;
          return MorseDiagram(d.domain(), replace_slices(d, k, 0,
                                                         {make_slice(w, p + 1, cup), make_slice(w + 2, p, Ev::Cap)}));
        }
        default: break;
      }
      break;
    }
  }
  bad_site(m, "unknown variant");
}

MoveSite inverse_of(const MorseDiagram& d, const MoveSite& m) {
  MoveSite inv = m;
  switch (m.kind) {
    case MoveKind::PlanarSlide:
      inv.variant = m.variant == 0 ? 0 : (m.variant == 1 ? 2 : 1);
      if (m.variant == 0) {
        // The swapped pair sits on the other side; only say so when the
        // swapped pair cannot tell by itself.
        const MorseDiagram e = apply_move(d, m);
        const Single a = single(d, m.slice), b = single(d, m.slice + 1);
        const int side = m.position != 0 ? 1 : disjoint_side(a, b);
        inv.position = side < 0 && side_ambiguous(single(e, m.slice), single(e, m.slice + 1)) ? 1 : 0;
      }
      break;
    case MoveKind::R2Parallel:
    case MoveKind::R2Reverse:
      if (m.variant == 0) {
        const Single a = single(d, m.slice);
        inv.variant = a.ev == Ev::CrossSlash ? 1 : 2;
      } else {
        inv.variant = 0;
      }
      break;
    case MoveKind::R3:
      inv.variant = 1 - m.variant;
      break;
    case MoveKind::Switchback:
      inv.variant = m.variant ^ 1;
      break;
    case MoveKind::CupCapCancel:
      inv.variant = (m.variant + 2) % 4;
      break;
  }
  return inv;
}

}  // namespace qlink
