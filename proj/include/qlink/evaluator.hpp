#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlink/diagram.hpp"
#include "qlink/oqa.hpp"

namespace qlink {

/// The twelve event matrices of the matrix model, all in positional form:
/// cups C[l][r] and caps K[l][r] indexed by left/right strand colour,
/// crossings X[tl][tr][bl][br] (top pair, then bottom pair).
///
/// Along the orientation every cup or cap reads as a matrix [in][out]:
/// clockwise cap M, counterclockwise cap M'^-1, counterclockwise cup M^-1,
/// clockwise cup M'. r_* are the positive crossings, s_* the negative ones.
struct DiagramMatrices {
  int rank = 0;
  Matrix cap_cw, cap_ccw, cup_ccw, cup_cw;
  Tensor4 r_up, s_up, r_down, s_down;
  Tensor4 r_left, r_right, s_left, s_right;
  /// 0: R = rho with the upper pair swapped, S = rho_inv with the lower pair
  /// swapped. 1: the transposed pair.
  int convention = 0;
  std::vector<std::string> notes;

  const Tensor4& crossing(Ev token, CrossClass cls) const;
};

/// Builds the matrices. In strict mode an algebra whose crossing tensors fail
/// R S = I or the probe Reidemeister-2 checks under both conventions, or whose
/// two sandwich forms of a horizontal crossing disagree, throws AlgebraError;
/// otherwise the problems are recorded in `notes`.
DiagramMatrices diagram_matrices(const MatrixOQA& a, bool strict = true);

/// Coloured boundary data of a tangle. Colours are 0-based here.
struct BoundaryTensor {
  SignList in_signs;
  SignList out_signs;
  std::map<std::pair<std::vector<int>, std::vector<int>>, LaurentPoly> entries;

  /// The single value of a closed diagram. Throws if the diagram is open.
  LaurentPoly scalar() const;
  LaurentPoly at(const std::vector<int>& in, const std::vector<int>& out) const;
  friend bool operator==(const BoundaryTensor& a, const BoundaryTensor& b) {
    return a.in_signs == b.in_signs && a.out_signs == b.out_signs && a.entries == b.entries;
  }
};

/// Transfer contraction, slice by slice, over a sparse frontier of colourings.
/// Frontier expansion is split across OpenMP threads.
BoundaryTensor evaluate(const MorseDiagram& d, const DiagramMatrices& m);
BoundaryTensor evaluate(const MorseDiagram& d, const MatrixOQA& a);
/// Same contraction on one thread with an ordered map; the reference for the
/// parallel kernel.
BoundaryTensor evaluate_serial(const MorseDiagram& d, const DiagramMatrices& m);

/// Literal sum over every colouring of every arc (depth first, skipping
/// zero entries). Throws Error when more than max_arcs arcs run between
/// events; id slices do not count.
BoundaryTensor contract_naive(const MorseDiagram& d, const DiagramMatrices& m, int max_arcs = 48);

/// Closes a 1-1 tangle on the right: u< .. n for an upward strand, u> .. n for
/// a downward one.
MorseDiagram closure_diagram(const MorseDiagram& t);
LaurentPoly closure_value(const MorseDiagram& t, const MatrixOQA& a);
LaurentPoly closure_value(const MorseDiagram& t, const DiagramMatrices& m);

}  // namespace qlink
