#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "qlink/diagram.hpp"
#include "qlink/laurent.hpp"

namespace qlink {

/// Coefficients of the four local states at a crossing. Positive crossing:
/// a S= + b S< + c S> + d F, negative crossing likewise with the primed set.
struct ExpansionWeights {
  LaurentPoly a, b, c, d;
  LaurentPoly a_neg, b_neg, c_neg, d_neg;
};

/// q, q - q^-1, 0, 1 and q^-1, 0, -(q - q^-1), 1.
ExpansionWeights homfly_weights();

/// Local choice at one crossing: an oriented smoothing carrying a label
/// relation, or the flat crossing whose two strands must differ.
enum class LocalState : std::uint8_t { Equal, Less, Greater, Flat };
char relation_symbol(LocalState s);

/// A state shares the diagram it was expanded from; `choice` has one entry
/// per crossing in the order of crossings(d).
struct State {
  const MorseDiagram* diagram = nullptr;
  std::vector<LocalState> choice;
  LaurentPoly weight;
};

/// Relation between the labels of two state components. For smoothings the
/// left output (seen along the direction of travel) comes first.
struct Constraint {
  int site = 0;
  int first = 0;
  int second = 0;
  LocalState relation = LocalState::Equal;
};

/// Traced components of a state.
struct StateGraph {
  std::vector<std::vector<Arc>> components;
  std::vector<int> half_turns;  // per component
  std::vector<Constraint> constraints;
};

StateGraph state_graph(const State& s);

/// Every branch with a non-zero coefficient. Throws Error when the diagram
/// is open or has more than max_crossings crossings.
std::vector<State> expand_states(const MorseDiagram& d, const ExpansionWeights& w, int max_crossings = 12);

/// Rotation number of every component of the state (component order as in
/// state_graph). Throws Error if a component turns through a half-integer.
std::vector<int> whitney_degrees(const State& s);

/// Sum over admissible labellings of q^(-2 sum label * rot).
LaurentPoly evaluate_state(const State& s, int n);
/// Same from explicit data; used directly by tests.
LaurentPoly evaluate_labelled(const std::vector<int>& rot, const std::vector<Constraint>& constraints, int n);

LaurentPoly evaluate(const MorseDiagram& d, const ExpansionWeights& w, int n, int max_crossings = 12);

/// The site-local surgeries at crossing number `site` (order of crossings(d)):
/// positive crossing, negative crossing, oriented smoothing.
struct SkeinTriple {
  MorseDiagram plus;
  MorseDiagram minus;
  MorseDiagram smoothed;
};
SkeinTriple skein_triple(const MorseDiagram& d, int site);

nlohmann::json state_to_json(const State& s);

}  // namespace qlink
