#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlink {

/// Strand signs at one horizontal level: +1 oriented upward, -1 downward.
using SignList = std::vector<int>;

/// Elementary event tokens. Crossing tokens are positional: for x/ the
/// over-strand runs SW->NE, for x\ it runs SE->NW.
enum class Ev : std::uint8_t { Id, CupCcw, CupCw, Cap, CrossSlash, CrossBackslash };

int width_in(Ev e);
int width_out(Ev e);
bool is_crossing(Ev e);
bool is_cup(Ev e);
std::string_view token(Ev e);
std::optional<Ev> parse_token(std::string_view s);
/// x/ <-> x\ ; other events unchanged.
Ev flip_crossing(Ev e);

using Slice = std::vector<Ev>;

/// Bottom and top strand offsets of one event inside its slice.
struct EventSpan {
  int bottom = 0;
  int top = 0;
};

enum class CrossClass : std::uint8_t { Up, Down, Right, Left };
CrossClass classify(int s1, int s2);
std::string_view class_name(CrossClass c);
/// +1 or -1 from the bottom signs and the token.
int crossing_sign(Ev tok, int s1, int s2);
/// Caps entered by (+,-) turn clockwise.
inline bool cap_is_cw(int left_sign) { return left_sign > 0; }

struct CrossingInfo {
  int slice = 0;
  int event = 0;
  int bottom = 0;  // strand offset at the level below
  int top = 0;
  Ev token = Ev::CrossSlash;
  int s1 = 1;  // bottom signs, left then right
  int s2 = 1;
  CrossClass cls = CrossClass::Up;
  int sign = 1;
};

/// A strand segment between slices: level k lies below slice k.
struct Arc {
  int level = 0;
  int pos = 0;
  friend bool operator==(const Arc& a, const Arc& b) { return a.level == b.level && a.pos == b.pos; }
  friend bool operator<(const Arc& a, const Arc& b) {
    return a.level != b.level ? a.level < b.level : a.pos < b.pos;
  }
};

/// Passage through one event along the orientation. Ports 0,1 are bottom,
/// 2,3 are top (Id uses 0 and 2).
struct Visit {
  int slice = 0;
  int event = 0;
  int in_port = 0;
  int out_port = 0;
};

/// Oriented tangle diagram in Morse form: a domain sign list and a stack of
/// slices read bottom to top. Validated on construction; immutable.
class MorseDiagram {
 public:
  MorseDiagram() { rebuild(); }
  MorseDiagram(SignList domain, std::vector<Slice> slices);

  static MorseDiagram identity(const SignList& signs);

  const SignList& domain() const noexcept { return levels_.front(); }
  const SignList& codomain() const noexcept { return levels_.back(); }
  const std::vector<Slice>& slices() const noexcept { return slices_; }
  int num_slices() const noexcept { return static_cast<int>(slices_.size()); }
  /// Signs below slice k; level(num_slices()) is the codomain.
  const SignList& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const std::vector<EventSpan>& spans(int slice) const { return spans_.at(static_cast<std::size_t>(slice)); }

  bool closed() const noexcept { return domain().empty() && codomain().empty(); }
  int crossing_count() const noexcept { return crossings_; }
  int max_width() const noexcept;
  /// Number of strand segments, boundary ones included.
  int arc_count() const noexcept;

  /// The next event and arc along the orientation; empty when the arc leaves
  /// the diagram through its boundary.
  std::optional<std::pair<Visit, Arc>> step(const Arc& a) const;

  friend bool operator==(const MorseDiagram& a, const MorseDiagram& b) {
    return a.levels_.front() == b.levels_.front() && a.slices_ == b.slices_;
  }
  friend bool operator!=(const MorseDiagram& a, const MorseDiagram& b) { return !(a == b); }

 private:
  void rebuild();

  std::vector<Slice> slices_;
  std::vector<SignList> levels_{SignList{}};
  std::vector<std::vector<EventSpan>> spans_;
  // For each level and strand: event index in the slice above / below.
  std::vector<std::vector<int>> above_;
  std::vector<std::vector<int>> below_;
  int crossings_ = 0;
};

MorseDiagram parse_morse(std::string_view text);
std::string render_morse(const MorseDiagram& d);
MorseDiagram load_morse_file(const std::string& path);

MorseDiagram compose(const MorseDiagram& a, const MorseDiagram& b);
MorseDiagram tensor(const MorseDiagram& a, const MorseDiagram& b);
MorseDiagram reverse_orientation(const MorseDiagram& d);

std::vector<CrossingInfo> crossings(const MorseDiagram& d);

/// One traced strand: its arcs and event passages in orientation order.
/// Open components start at an input boundary arc.
struct Component {
  std::vector<Arc> arcs;
  std::vector<Visit> visits;
  bool closed = false;
};

/// Deterministic: open components in order of their starting boundary
/// arc, then closed components in order of their smallest arc, each closed
/// one traced from that arc.
std::vector<Component> components(const MorseDiagram& d);

/// Short human summary used by the CLI.
struct DiagramSummary {
  int slices = 0;
  int crossings = 0;
  int components = 0;
  int max_width = 0;
  SignList domain;
  SignList codomain;
};
DiagramSummary summarize(const MorseDiagram& d);

std::string signs_to_string(const SignList& s);

}  // namespace qlink
