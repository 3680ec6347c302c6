#include "qlink/beads.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qlink/error.hpp"

namespace qlink {

std::string Signifier::letter() const {
  return std::string(positive ? "e" : "E") + std::to_string(crossing) + (leg == 2 ? "'" : "");
}

std::string BeadWord::to_string() const {
  std::ostringstream os;
  os << "G^" << curl_count;
  for (const auto& s : word) {
    os << ' ';
    if (s.t_power == 0) os << s.letter();
    else if (s.t_power == 1) os << "(t " << s.letter() << ')';
    else os << "(t^" << s.t_power << ' ' << s.letter() << ')';
  }
  return os.str();
}

namespace {

// Ports used by the over strand of a crossing token.
bool on_over_strand(Ev tok, int port) {
  return tok == Ev::CrossSlash ? (port == 0 || port == 3) : (port == 1 || port == 2);
}

// U / D powers a bead starts with on a horizontal crossing.
void initial_offset(const CrossingInfo& x, Bead& b) {
  const bool slash = x.token == Ev::CrossSlash;
  if (x.cls == CrossClass::Left) {
    if (b.sig.leg == (slash ? 1 : 2)) b.d = 1;
  } else if (x.cls == CrossClass::Right) {
    if (b.sig.leg == (slash ? 2 : 1)) b.u = -1;
  }
}

// Forward passage: counterclockwise cup U, counterclockwise cap D,
// clockwise cap U^-1, clockwise cup D^-1.
void pass_turn(Bead& b, Ev e, int half_turn, int dir) {
  const bool ccw = half_turn > 0;
  if (is_cup(e)) {
    if (ccw) b.u += dir;
    else b.d -= dir;
  } else {
    if (ccw) b.d += dir;
    else b.u -= dir;
  }
}

}  // namespace

Decorated decorate(const MorseDiagram& d) {
  const auto comps = components(d);
  const bool one_one = d.domain().size() == 1 && d.codomain() == d.domain();
  if (!(d.closed() || one_one)) {
    throw Error("beads", "bead sliding needs a closed diagram or a 1-1 tangle, got <" + signs_to_string(d.domain()) +
                             "> to <" + signs_to_string(d.codomain()) + ">");
  }
  if (comps.size() != 1) {
    throw Error("beads", "bead sliding needs one component, diagram has " + std::to_string(comps.size()));
  }
  Decorated dec{d, comps.front(), {}, {}, !(one_one && d.domain()[0] < 0)};
  const auto xs = crossings(d);
  std::map<std::pair<int, int>, int> site_of;
  for (std::size_t i = 0; i < xs.size(); ++i) site_of[{xs[i].slice, xs[i].event}] = static_cast<int>(i);

  for (std::size_t i = 0; i < dec.component.visits.size(); ++i) {
    const Visit& v = dec.component.visits[i];
    const Ev e = d.slices()[static_cast<std::size_t>(v.slice)][static_cast<std::size_t>(v.event)];
    int h = 0;
    if (e == Ev::CupCcw) h = 1;
    else if (e == Ev::CupCw) h = -1;
    else if (e == Ev::Cap) {
      const int left = d.level(v.slice)[static_cast<std::size_t>(d.spans(v.slice)[static_cast<std::size_t>(v.event)].bottom)];
      h = cap_is_cw(left) ? -1 : 1;
    } else if (is_crossing(e)) {
      const int site = site_of.at({v.slice, v.event});
      const CrossingInfo& x = xs[static_cast<std::size_t>(site)];
      Bead b;
      b.sig = Signifier{site + 1, on_over_strand(e, v.in_port) ? 1 : 2, x.sign > 0, 0};
      b.visit = static_cast<int>(i);
      initial_offset(x, b);
      dec.beads.push_back(b);
    }
    dec.half_turns.push_back(h);
  }
  return dec;
}

BeadWord slide_to_top(const Decorated& dec) {
  const MorseDiagram& d = dec.diagram;
  std::vector<Bead> beads = dec.beads;
  const auto& visits = dec.component.visits;
  for (Bead& b : beads) {
    const std::size_t from = static_cast<std::size_t>(b.visit);
    if (dec.forward) {
      for (std::size_t w = from + 1; w < visits.size(); ++w) {
        if (dec.half_turns[w] == 0) continue;
        pass_turn(b, d.slices()[static_cast<std::size_t>(visits[w].slice)][static_cast<std::size_t>(visits[w].event)],
                  dec.half_turns[w], 1);
      }
    } else {
      for (std::size_t w = 0; w < from; ++w) {
        if (dec.half_turns[w] == 0) continue;
        pass_turn(b, d.slices()[static_cast<std::size_t>(visits[w].slice)][static_cast<std::size_t>(visits[w].event)],
                  dec.half_turns[w], -1);
      }
    }
  }
  // Cancel common U / D powers across each crossing's two legs.
  std::map<int, std::vector<Bead*>> by_crossing;
  for (Bead& b : beads) by_crossing[b.sig.crossing].push_back(&b);
  for (auto& [c, pair] : by_crossing) {
    if (pair.size() != 2) throw Error("beads", "crossing " + std::to_string(c) + " does not carry two beads");
    Bead* one = pair[0]->sig.leg == 1 ? pair[0] : pair[1];
    Bead* two = pair[0]->sig.leg == 1 ? pair[1] : pair[0];
    const int du = one->u - two->u;
    const int dd = one->d - two->d;
    if (du != dd) {
      throw Error("beads", "crossing " + std::to_string(c) + " keeps unmatched U/D powers (" + std::to_string(du) +
                               " vs " + std::to_string(dd) + ")");
    }
    one->sig.t_power = std::max(du, 0);
    two->sig.t_power = std::max(-du, 0);
  }
  int half = 0;
  for (int h : dec.half_turns) half += h;
  if (half % 2 != 0) throw Error("beads", "flat remainder turns through a half-integer");
  BeadWord bw;
  bw.curl_count = -half / 2;
  std::sort(beads.begin(), beads.end(), [](const Bead& a, const Bead& b) { return a.visit < b.visit; });
  for (const Bead& b : beads) bw.word.push_back(b.sig);
  return bw;
}

BeadWord bead_word(const MorseDiagram& d) { return slide_to_top(decorate(d)); }

int closure_shift(const MorseDiagram& d) {
  if (d.closed()) return 0;
  return d.domain().at(0) > 0 ? 1 : -1;
}

BeadWord closed_word(const BeadWord& bw, const MorseDiagram& t) {
  BeadWord out = bw;
  out.curl_count += closure_shift(t);
  return out;
}

BeadWord reverse_word(const BeadWord& bw) {
  BeadWord out;
  out.curl_count = -bw.curl_count;
  out.word.assign(bw.word.rbegin(), bw.word.rend());
  return out;
}

LaurentPoly evaluate_word(const BeadWord& bw, const MatrixOQA& a) {
  const int n = a.rank;
  const Matrix g = a.m_up * a.m_down;
  const auto g_inv = inverse(g);
  if (!g_inv) throw AlgebraError("G = m_up m_down has no inverse");
  auto g_pow = [&](int k) { return k >= 0 ? g.pow(k) : g_inv->pow(-k); };

  // Conjugated crossing tensors, one per crossing.
  std::map<int, Tensor4> tensors;
  std::map<int, std::pair<int, int>> powers;
  std::map<int, bool> sign;
  for (const auto& s : bw.word) {
    (s.leg == 1 ? powers[s.crossing].first : powers[s.crossing].second) = s.t_power;
    sign[s.crossing] = s.positive;
  }
  for (const auto& [c, p] : powers) {
    Tensor4 t = sign[c] ? a.rho : a.rho_inv;
    if (p.first != 0) t = conj_leg(t, 1, g_pow(p.first), g_pow(-p.first));
    if (p.second != 0) t = conj_leg(t, 2, g_pow(p.second), g_pow(-p.second));
    tensors.emplace(c, std::move(t));
  }

  // Key: start colour, current colour, then (crossing, leg, in, out) for
  // every crossing whose first leg has been passed.
  using Key = std::vector<int>;
  std::map<Key, LaurentPoly> states;
  const Matrix gn = g_pow(bw.curl_count);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!gn(i, j).is_zero()) states[{i, j}] += gn(i, j);

  for (const auto& s : bw.word) {
    const Tensor4& t = tensors.at(s.crossing);
    std::map<Key, LaurentPoly> next;
    for (const auto& [key, val] : states) {
      const int cur = key[1];
      std::size_t at = 2;
      while (at < key.size() && key[at] != s.crossing) at += 4;
      if (at < key.size()) {
        const int leg = key[at + 1], in = key[at + 2], out = key[at + 3];
        Key base(key.begin(), key.begin() + static_cast<long>(at));
        base.insert(base.end(), key.begin() + static_cast<long>(at) + 4, key.end());
        for (int o = 0; o < n; ++o) {
          const LaurentPoly& c = leg == 1 ? t(out, o, in, cur) : t(o, out, cur, in);
          if (c.is_zero()) continue;
          Key k = base;
          k[1] = o;
          next[k].add_product(val, c);
        }
      } else {
        for (int o = 0; o < n; ++o) {
          bool support = false;
          for (int x = 0; x < n && !support; ++x)
            for (int y = 0; y < n && !support; ++y)
              support = !(s.leg == 1 ? t(o, x, cur, y) : t(x, o, y, cur)).is_zero();
          if (!support) continue;
          Key k = key;
          k[1] = o;
          // Keep pending entries ordered by crossing.
          std::size_t pos = 2;
          while (pos < k.size() && k[pos] < s.crossing) pos += 4;
          k.insert(k.begin() + static_cast<long>(pos), {s.crossing, s.leg, cur, o});
          next[k] += val;
        }
      }
    }
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    states = std::move(next);
  }
  LaurentPoly total;
  for (const auto& [key, val] : states) {
    if (key.size() == 2 && key[0] == key[1]) total += val;
  }
  return total;
}

}  // namespace qlink
