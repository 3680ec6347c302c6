#include "qlink/statesum.hpp"

#include <numeric>

#include "qlink/error.hpp"
#include "qlink/oqa.hpp"

namespace qlink {

ExpansionWeights homfly_weights() {
  const LaurentPoly z = z_poly();
  return ExpansionWeights{LaurentPoly::q(), z, 0, 1, LaurentPoly::q_inv(), 0, -z, 1};
}

char relation_symbol(LocalState s) {
  switch (s) {
    case LocalState::Equal: return '=';
    case LocalState::Less: return '<';
    case LocalState::Greater: return '>';
    case LocalState::Flat: return '!';
  }
  return '?';
}

namespace {

constexpr LocalState kStates[] = {LocalState::Equal, LocalState::Less, LocalState::Greater, LocalState::Flat};

const LaurentPoly& weight_of(const ExpansionWeights& w, int sign, LocalState s) {
  switch (s) {
    case LocalState::Equal: return sign > 0 ? w.a : w.a_neg;
    case LocalState::Less: return sign > 0 ? w.b : w.b_neg;
    case LocalState::Greater: return sign > 0 ? w.c : w.c_neg;
    default: return sign > 0 ? w.d : w.d_neg;
  }
}

// Oriented smoothing: out port and turn (half units) for an entering port.
std::pair<int, int> smooth_port(CrossClass cls, int in) {
  switch (cls) {
    case CrossClass::Up: return {in + 2, 0};
    case CrossClass::Down: return {in - 2, 0};
    case CrossClass::Right: return in == 0 ? std::make_pair(1, -1) : std::make_pair(3, 1);
    case CrossClass::Left: return in == 1 ? std::make_pair(0, 1) : std::make_pair(2, -1);
  }
  return {in, 0};
}

// Ports of the left and right outputs of a smoothing.
std::pair<int, int> output_ports(CrossClass cls) {
  switch (cls) {
    case CrossClass::Up: return {2, 3};
    case CrossClass::Down: return {1, 0};
    case CrossClass::Right: return {3, 1};
    case CrossClass::Left: return {0, 2};
  }
  return {2, 3};
}

Arc port_arc(const MorseDiagram& d, int slice, int event, int port) {
  const EventSpan sp = d.spans(slice)[static_cast<std::size_t>(event)];
  return port < 2 ? Arc{slice, sp.bottom + port} : Arc{slice + 1, sp.top + port - 2};
}

struct ArcIndex {
  std::vector<int> offset;
  explicit ArcIndex(const MorseDiagram& d) {
    offset.push_back(0);
    for (int k = 0; k <= d.num_slices(); ++k) offset.push_back(offset.back() + static_cast<int>(d.level(k).size()));
  }
  int operator()(const Arc& a) const { return offset[static_cast<std::size_t>(a.level)] + a.pos; }
  int size() const { return offset.back(); }
};

}  // namespace

StateGraph state_graph(const State& s) {
  const MorseDiagram& d = *s.diagram;
  if (!d.closed()) throw Error("statesum", "state of an open diagram");
  const auto xs = crossings(d);
  if (s.choice.size() != xs.size()) throw Error("statesum", "state has the wrong number of local choices");
  std::map<std::pair<int, int>, int> site_of;
  for (std::size_t i = 0; i < xs.size(); ++i) site_of[{xs[i].slice, xs[i].event}] = static_cast<int>(i);

  const ArcIndex idx(d);
  std::vector<Arc> arcs;
  for (int k = 0; k <= d.num_slices(); ++k)
    for (int p = 0; p < static_cast<int>(d.level(k).size()); ++p) arcs.push_back(Arc{k, p});

  std::vector<int> next(arcs.size()), turn(arcs.size(), 0);
  for (const Arc& a : arcs) {
    auto st = d.step(a);
    if (!st) throw Error("statesum", "arc leaves a closed diagram");
    auto [v, nx] = *st;
    const Ev e = d.slices()[static_cast<std::size_t>(v.slice)][static_cast<std::size_t>(v.event)];
    int t = 0;
    if (is_crossing(e)) {
      const int site = site_of.at({v.slice, v.event});
      if (s.choice[static_cast<std::size_t>(site)] != LocalState::Flat) {
        const auto [out, tt] = smooth_port(xs[static_cast<std::size_t>(site)].cls, v.in_port);
        nx = port_arc(d, v.slice, v.event, out);
        t = tt;
      }
    } else if (e == Ev::CupCcw) {
      t = 1;
    } else if (e == Ev::CupCw) {
      t = -1;
    } else if (e == Ev::Cap) {
      const int left = d.level(v.slice)[static_cast<std::size_t>(d.spans(v.slice)[static_cast<std::size_t>(v.event)].bottom)];
      t = cap_is_cw(left) ? -1 : 1;
    }
    next[static_cast<std::size_t>(idx(a))] = idx(nx);
    turn[static_cast<std::size_t>(idx(a))] = t;
  }

  StateGraph g;
  std::vector<int> comp(arcs.size(), -1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (comp[i] >= 0) continue;
    const int c = static_cast<int>(g.components.size());
    g.components.emplace_back();
    g.half_turns.push_back(0);
    for (std::size_t j = i; comp[j] < 0; j = static_cast<std::size_t>(next[j])) {
      comp[j] = c;
      g.components.back().push_back(arcs[j]);
      g.half_turns.back() += turn[j];
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const CrossingInfo& x = xs[i];
    const LocalState ls = s.choice[i];
    const auto [l, r] = ls == LocalState::Flat ? std::make_pair(0, 1) : output_ports(x.cls);
    g.constraints.push_back(Constraint{static_cast<int>(i), comp[static_cast<std::size_t>(idx(port_arc(d, x.slice, x.event, l)))],
                                       comp[static_cast<std::size_t>(idx(port_arc(d, x.slice, x.event, r)))], ls});
  }
  return g;
}

std::vector<State> expand_states(const MorseDiagram& d, const ExpansionWeights& w, int max_crossings) {
  if (!d.closed()) throw Error("statesum", "state expansion needs a closed diagram");
  const auto xs = crossings(d);
  if (static_cast<int>(xs.size()) > max_crossings) {
    throw Error("statesum", "crossing bound exceeded: " + std::to_string(xs.size()) + " > " + std::to_string(max_crossings));
  }
  std::vector<State> out;
  State cur{&d, {}, 1};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == xs.size()) {
      out.push_back(cur);
      return;
    }
    const LaurentPoly saved = cur.weight;
    for (LocalState ls : kStates) {
      const LaurentPoly& c = weight_of(w, xs[i].sign, ls);
      if (c.is_zero()) continue;
      cur.choice.push_back(ls);
      cur.weight = saved * c;
      self(self, i + 1);
      cur.choice.pop_back();
    }
    cur.weight = saved;
  };
  rec(rec, 0);
  return out;
}

std::vector<int> whitney_degrees(const State& s) {
  const StateGraph g = state_graph(s);
  std::vector<int> rot;
  for (int h : g.half_turns) {
    if (h % 2 != 0) throw Error("statesum", "component turns through a half-integer (" + std::to_string(h) + "/2)");
    rot.push_back(h / 2);
  }
  return rot;
}

LaurentPoly evaluate_labelled(const std::vector<int>& rot, const std::vector<Constraint>& constraints, int n) {
  const int k = static_cast<int>(rot.size());
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& c : constraints) {
    if (c.relation == LocalState::Equal) parent[static_cast<std::size_t>(find(c.first))] = find(c.second);
  }
  std::vector<int> root_id(static_cast<std::size_t>(k), -1), group_rot;
  for (int i = 0; i < k; ++i) {
    const int r = find(i);
    if (root_id[static_cast<std::size_t>(r)] < 0) {
      root_id[static_cast<std::size_t>(r)] = static_cast<int>(group_rot.size());
      group_rot.push_back(0);
    }
    group_rot[static_cast<std::size_t>(root_id[static_cast<std::size_t>(r)])] += rot[static_cast<std::size_t>(i)];
  }
  // Each inequality is checked once its later group has a label.
  const int g = static_cast<int>(group_rot.size());
  std::vector<std::vector<std::pair<int, LocalState>>> checks(static_cast<std::size_t>(g));
  for (const auto& c : constraints) {
    if (c.relation == LocalState::Equal) continue;
    const int a = root_id[static_cast<std::size_t>(find(c.first))];
    const int b = root_id[static_cast<std::size_t>(find(c.second))];
    if (a == b) return LaurentPoly();  // a line compared with itself
    if (a < b) {
      checks[static_cast<std::size_t>(b)].emplace_back(a, c.relation);
    } else {
      const LocalState swapped = c.relation == LocalState::Less      ? LocalState::Greater
                                 : c.relation == LocalState::Greater ? LocalState::Less
                                                                     : c.relation;
      checks[static_cast<std::size_t>(a)].emplace_back(b, swapped);
    }
  }
  // checks[later] holds (earlier, r) meaning label(earlier) r label(later).
  std::map<std::int64_t, std::int64_t> counts;
  std::vector<int> label(static_cast<std::size_t>(g), 0);
  auto rec = [&](auto&& self, int i, std::int64_t exp) -> void {
    if (i == g) {
      ++counts[exp];
      return;
    }
    for (int l = 1; l <= n; ++l) {
      bool ok = true;
      for (const auto& [j, r] : checks[static_cast<std::size_t>(i)]) {
        const int lj = label[static_cast<std::size_t>(j)];
        if ((r == LocalState::Less && !(lj < l)) || (r == LocalState::Greater && !(lj > l)) ||
            (r == LocalState::Flat && lj == l)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      label[static_cast<std::size_t>(i)] = l;
      self(self, i + 1, exp - 2 * static_cast<std::int64_t>(l) * group_rot[static_cast<std::size_t>(i)]);
    }
  };
  rec(rec, 0, 0);
  std::vector<Term> terms;
  for (const auto& [e, c] : counts) terms.push_back(Term{e, BigInt(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly evaluate_state(const State& s, int n) {
  const StateGraph g = state_graph(s);
  return evaluate_labelled(whitney_degrees(s), g.constraints, n);
}

LaurentPoly evaluate(const MorseDiagram& d, const ExpansionWeights& w, int n, int max_crossings) {
  const std::vector<State> states = expand_states(d, w, max_crossings);
  LaurentPoly total;
#pragma omp parallel
  {
    LaurentPoly local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long i = 0; i < static_cast<long>(states.size()); ++i) {
      const State& s = states[static_cast<std::size_t>(i)];
      const LaurentPoly v = evaluate_state(s, n);
      if (!v.is_zero()) local.add_product(s.weight, v);
    }
#pragma omp critical
    total += local;
  }
  return total;
}

SkeinTriple skein_triple(const MorseDiagram& d, int site) {
  const auto xs = crossings(d);
  if (site < 0 || site >= static_cast<int>(xs.size())) {
    throw Error("statesum", "no crossing number " + std::to_string(site) + " (diagram has " +
                                std::to_string(xs.size()) + ")");
  }
  const CrossingInfo& x = xs[static_cast<std::size_t>(site)];
  const Ev pos_tok = crossing_sign(Ev::CrossSlash, x.s1, x.s2) > 0 ? Ev::CrossSlash : Ev::CrossBackslash;
  auto with_token = [&](Ev tok) {
    std::vector<Slice> s = d.slices();
    s[static_cast<std::size_t>(x.slice)][static_cast<std::size_t>(x.event)] = tok;
    return MorseDiagram(d.domain(), std::move(s));
  };
  std::vector<Slice> s = d.slices();
  Slice& here = s[static_cast<std::size_t>(x.slice)];
  const auto at = here.begin() + x.event;
  if (x.cls == CrossClass::Up || x.cls == CrossClass::Down) {
    *at = Ev::Id;
    here.insert(here.begin() + x.event + 1, Ev::Id);
  } else {
    // Horizontal strands: a cap under the site, then a cup above it.
    *at = Ev::Cap;
    const int width = static_cast<int>(d.level(x.slice + 1).size()) - 2;
    Slice cup(static_cast<std::size_t>(width), Ev::Id);
    cup.insert(cup.begin() + x.top, x.s2 < 0 ? Ev::CupCcw : Ev::CupCw);
    s.insert(s.begin() + x.slice + 1, std::move(cup));
  }
  return SkeinTriple{with_token(pos_tok), with_token(flip_crossing(pos_tok)), MorseDiagram(d.domain(), std::move(s))};
}

nlohmann::json state_to_json(const State& s) {
  const StateGraph g = state_graph(s);
  nlohmann::json j;
  std::string choice;
  for (LocalState ls : s.choice) choice += relation_symbol(ls);
  j["choice"] = choice;
  j["weight"] = poly_to_json(s.weight);
  j["components"] = nlohmann::json::array();
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const Arc& a : g.components[c]) arcs.push_back({a.level, a.pos});
    j["components"].push_back({{"arcs", arcs}, {"half_turns", g.half_turns[c]}});
  }
  j["constraints"] = nlohmann::json::array();
  for (const auto& c : g.constraints) {
    j["constraints"].push_back(
        {{"site", c.site}, {"first", c.first}, {"second", c.second}, {"relation", std::string(1, relation_symbol(c.relation))}});
  }
  return j;
}

}  // namespace qlink
