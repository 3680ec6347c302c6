#pragma once

#include <string>
#include <vector>

#include "qlink/diagram.hpp"
#include "qlink/oqa.hpp"

namespace qlink {

/// One leg of a crossing's Yang-Baxter element: e / e' for a positive
/// crossing, E / E' for a negative one. Leg 1 (unprimed) rides the over
/// strand. t_power counts applications of t = UD.
struct Signifier {
  int crossing = 1;  // 1-based, order of crossings(d)
  int leg = 1;
  bool positive = true;
  int t_power = 0;

  std::string letter() const;  // "e1", "E2'", ...
  friend bool operator==(const Signifier& a, const Signifier& b) {
    return a.crossing == b.crossing && a.leg == b.leg && a.positive == b.positive && a.t_power == b.t_power;
  }
};

/// G^n times the beads in the order met along the orientation.
struct BeadWord {
  int curl_count = 0;
  std::vector<Signifier> word;

  /// "G^-1 (t E1) (t E2') (t E3) E1' E2 E3'".
  std::string to_string() const;
  friend bool operator==(const BeadWord& a, const BeadWord& b) {
    return a.curl_count == b.curl_count && a.word == b.word;
  }
};

/// A bead sitting on the flat diagram: where it is along the component and
/// the U / D powers it carries so far.
struct Bead {
  Signifier sig;
  int visit = 0;  // index into the component's visits
  int u = 0;
  int d = 0;
};

/// Flat knot diagram with beads. `forward` is false for a downward 1-1
/// tangle, whose beads gather at its starting (top) end.
struct Decorated {
  MorseDiagram diagram;
  Component component;
  std::vector<Bead> beads;
  std::vector<int> half_turns;  // per visit: +1 counterclockwise, -1 clockwise
  bool forward = true;
};

/// Replaces each crossing by a flat crossing carrying its two signifiers.
/// Horizontal crossings come with the U / D powers picked up from the
/// switchbacks that turn them upright. Throws Error unless d is a closed
/// knot or a 1-1 tangle.
Decorated decorate(const MorseDiagram& d);

/// Moves every bead to one segment (the end of the traced component; for a
/// downward tangle its start), cancels matching U / D pairs per crossing and
/// counts the curls of the flat remainder. Throws Error if a crossing's two
/// beads are left with different U and D excesses.
BeadWord slide_to_top(const Decorated& dec);
BeadWord bead_word(const MorseDiagram& d);

/// trace(G^n prod G^t x G^-t) with G = m_up m_down, each crossing's pair of
/// legs summed against rho or rho_inv.
LaurentPoly evaluate_word(const BeadWord& bw, const MatrixOQA& a);

/// Curls added by closing a 1-1 tangle with closure_diagram: +1 for an
/// upward strand, -1 for a downward one, 0 for closed diagrams.
int closure_shift(const MorseDiagram& d);
/// The bead word of closure_diagram(t) read off t's own word.
BeadWord closed_word(const BeadWord& bw, const MorseDiagram& t);

/// Reverses the product and negates the curl count.
BeadWord reverse_word(const BeadWord& bw);

}  // namespace qlink
