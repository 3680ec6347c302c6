#include "qlink/evaluator.hpp"

#include <algorithm>
#include <functional>

#include <omp.h>

#include "qlink/error.hpp"

namespace qlink {

namespace {

Tensor4 lower_swap_pair(const Tensor4& rho, const Tensor4& rho_inv, bool positive, int conv) {
  const int n = rho.size();
  Tensor4 t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (positive) t(a, b, c, d) = conv == 0 ? rho(b, a, c, d) : rho(a, b, d, c);
          else t(a, b, c, d) = conv == 0 ? rho_inv(a, b, d, c) : rho_inv(b, a, c, d);
        }
  return t;
}

// 180 degree rotation: the downward crossing with the same token.
Tensor4 rotate(const Tensor4& x) {
  const int n = x.size();
  Tensor4 t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) t(a, b, c, d) = x(d, c, b, a);
  return t;
}

// Four-index sum sum_{i,j} f(i, j) over products of three factors.
template <class F>
Tensor4 sandwich(int n, F f) {
  Tensor4 t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          LaurentPoly acc;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) f(acc, a, b, c, d, i, j);
          t(a, b, c, d) = std::move(acc);
        }
  return t;
}

void add3(LaurentPoly& acc, const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z) {
  if (x.is_zero() || y.is_zero() || z.is_zero()) return;
  acc += x * y * z;
}

struct Positional {
  Matrix k_cw, k_ccw, c_ccw, c_cw;
};

Positional positional(const MatrixOQA& a) {
  Positional p;
  p.k_cw = a.m_up;
  p.k_ccw = a.m_down_inv.transpose();
  p.c_ccw = a.m_up_inv;
  p.c_cw = a.m_down.transpose();
  return p;
}

// Left-pointing crossing from the upward one (cap on the left, cup on the right).
Tensor4 left_from_up(const Positional& p, const Tensor4& u) {
  return sandwich(u.size(), [&](LaurentPoly& acc, int a, int b, int c, int d, int i, int j) {
    add3(acc, p.k_ccw(c, i), u(i, a, d, j), p.c_cw(j, b));
  });
}
Tensor4 left_from_down(const Positional& p, const Tensor4& dn) {
  return sandwich(dn.size(), [&](LaurentPoly& acc, int a, int b, int c, int d, int x, int z) {
    add3(acc, p.c_cw(a, x), dn(b, z, x, c), p.k_ccw(z, d));
  });
}
Tensor4 right_from_up(const Positional& p, const Tensor4& u) {
  return sandwich(u.size(), [&](LaurentPoly& acc, int a, int b, int c, int d, int r, int t) {
    add3(acc, p.c_ccw(a, r), u(b, t, r, c), p.k_cw(t, d));
  });
}
Tensor4 right_from_down(const Positional& p, const Tensor4& dn) {
  return sandwich(dn.size(), [&](LaurentPoly& acc, int a, int b, int c, int d, int e, int u) {
    add3(acc, p.k_cw(c, e), dn(e, a, d, u), p.c_ccw(u, b));
  });
}

DiagramMatrices assemble(const MatrixOQA& a, int conv, std::vector<std::string>& mismatches) {
  DiagramMatrices m;
  m.rank = a.rank;
  m.convention = conv;
  const Positional p = positional(a);
  m.cap_cw = p.k_cw;
  m.cap_ccw = p.k_ccw;
  m.cup_ccw = p.c_ccw;
  m.cup_cw = p.c_cw;
  m.r_up = lower_swap_pair(a.rho, a.rho_inv, true, conv);
  m.s_up = lower_swap_pair(a.rho, a.rho_inv, false, conv);
  m.r_down = rotate(m.r_up);
  m.s_down = rotate(m.s_up);
  // A horizontal crossing with token t is the upward crossing with the
  // opposite token turned on its side.
  m.r_left = left_from_up(p, m.r_up);
  m.s_left = left_from_up(p, m.s_up);
  m.r_right = right_from_up(p, m.r_up);
  m.s_right = right_from_up(p, m.s_up);
  if (left_from_down(p, m.r_down) != m.r_left) mismatches.push_back("two forms of the positive left crossing differ");
  if (left_from_down(p, m.s_down) != m.s_left) mismatches.push_back("two forms of the negative left crossing differ");
  if (right_from_down(p, m.r_down) != m.r_right) mismatches.push_back("two forms of the positive right crossing differ");
  if (right_from_down(p, m.s_down) != m.s_right) mismatches.push_back("two forms of the negative right crossing differ");
  return m;
}

// Closed probes containing a stacked crossing pair, each paired with the
// same diagram without it.
bool probes_pass(const DiagramMatrices& m) {
  const char* cups[] = {"u> u<", "u< u<", "u> u>"};
  const char* caps[] = {"n n", "n n", "n n"};
  for (int i = 0; i < 3; ++i) {
    const std::string base = std::string("in:\nslice: ") + cups[i] + "\n";
    const LaurentPoly plain = evaluate_serial(parse_morse(base + "slice: " + caps[i] + "\n"), m).scalar();
    for (const char* order : {"slice: id x/ id\nslice: id x\\ id\n", "slice: id x\\ id\nslice: id x/ id\n"}) {
      const MorseDiagram d = parse_morse(base + order + "slice: " + caps[i] + "\n");
      if (evaluate_serial(d, m).scalar() != plain) return false;
    }
  }
  return true;
}

}  // namespace

const Tensor4& DiagramMatrices::crossing(Ev tok, CrossClass cls) const {
  const bool slash = tok == Ev::CrossSlash;
  switch (cls) {
    case CrossClass::Up: return slash ? r_up : s_up;
    case CrossClass::Down: return slash ? r_down : s_down;
    case CrossClass::Right: return slash ? s_right : r_right;
    case CrossClass::Left: return slash ? s_left : r_left;
  }
  return r_up;
}

DiagramMatrices diagram_matrices(const MatrixOQA& a, bool strict) {
  const Tensor4 id = Tensor4::identity(a.rank);
  std::vector<std::string> failures;
  for (int conv = 0; conv < 2; ++conv) {
    std::vector<std::string> mismatches;
    DiagramMatrices m = assemble(a, conv, mismatches);
    if (matmul(m.r_up, m.s_up) != id || matmul(m.s_up, m.r_up) != id) {
      failures.push_back("convention " + std::to_string(conv) + ": R S is not the identity");
      continue;
    }
    if (!probes_pass(m)) {
      failures.push_back("convention " + std::to_string(conv) + ": Reidemeister-2 probe changes the value");
      continue;
    }
    if (!mismatches.empty()) {
      if (strict) throw AlgebraError("inconsistent algebra: " + mismatches.front());
      m.notes = mismatches;
    }
    m.notes.insert(m.notes.begin(), failures.begin(), failures.end());
    return m;
  }
  if (strict) throw AlgebraError("inconsistent algebra: " + failures.front() + "; " + failures.back());
  std::vector<std::string> mismatches;
  DiagramMatrices m = assemble(a, 0, mismatches);
  m.notes = failures;
  m.notes.insert(m.notes.end(), mismatches.begin(), mismatches.end());
  return m;
}

LaurentPoly BoundaryTensor::scalar() const {
  if (!in_signs.empty() || !out_signs.empty()) throw Error("evaluator", "scalar() on an open diagram");
  return at({}, {});
}

LaurentPoly BoundaryTensor::at(const std::vector<int>& in, const std::vector<int>& out) const {
  auto it = entries.find({in, out});
  return it == entries.end() ? LaurentPoly() : it->second;
}

namespace {

// Sparse local transfer table of one event: packed input digits -> list of
// (packed output digits, coefficient).
struct LocalTable {
  int win = 0;
  int wout = 0;
  std::vector<std::vector<std::pair<std::uint64_t, LaurentPoly>>> rows;
};

struct Packing {
  int n = 0;
  int bits = 1;
  int in_width = 0;

  std::uint64_t digit_mask() const { return (std::uint64_t{1} << bits) - 1; }
  static std::uint64_t mask(int nbits) { return nbits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nbits) - 1; }
  int in_shift() const { return 64 - in_width * bits; }
};

Packing make_packing(const MorseDiagram& d, int n) {
  Packing p;
  p.n = n;
  while ((1 << p.bits) < n) ++p.bits;
  p.in_width = static_cast<int>(d.domain().size());
  if ((d.max_width() + p.in_width) * p.bits > 64) {
    throw Error("evaluator", "diagram too wide for the packed frontier (" + std::to_string(d.max_width()) +
                                 " strands plus " + std::to_string(p.in_width) + " boundary strands)");
  }
  return p;
}

LocalTable table_from_matrix(const Matrix& m, bool cup, const Packing& pk) {
  LocalTable t;
  t.win = cup ? 0 : 2;
  t.wout = cup ? 2 : 0;
  const int n = m.size();
  if (cup) {
    t.rows.resize(1);
    for (int l = 0; l < n; ++l)
      for (int r = 0; r < n; ++r)
        if (!m(l, r).is_zero()) t.rows[0].emplace_back(std::uint64_t(l) | std::uint64_t(r) << pk.bits, m(l, r));
  } else {
    t.rows.resize(std::size_t{1} << (2 * pk.bits));
    for (int l = 0; l < n; ++l)
      for (int r = 0; r < n; ++r)
        if (!m(l, r).is_zero()) t.rows[std::uint64_t(l) | std::uint64_t(r) << pk.bits].emplace_back(0, m(l, r));
  }
  return t;
}

LocalTable table_from_crossing(const Tensor4& x, const Packing& pk) {
  LocalTable t;
  t.win = 2;
  t.wout = 2;
  t.rows.resize(std::size_t{1} << (2 * pk.bits));
  const int n = x.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (!x(a, b, c, d).is_zero()) {
            t.rows[std::uint64_t(c) | std::uint64_t(d) << pk.bits].emplace_back(
                std::uint64_t(a) | std::uint64_t(b) << pk.bits, x(a, b, c, d));
          }
  return t;
}

// The non-identity events of a diagram, in contraction order, each with
// its table and its offset in the partially updated colouring.
struct Step {
  const LocalTable* table;
  int pos;
  int width_before;  // strands in the colouring when the step is applied
};

struct Plan {
  Packing pk;
  std::vector<LocalTable> tables;  // cap_cw, cap_ccw, cup_ccw, cup_cw, then 8 crossings
  std::vector<Step> steps;
};

Plan make_plan(const MorseDiagram& d, const DiagramMatrices& m) {
  Plan plan;
  plan.pk = make_packing(d, m.rank);
  const Packing& pk = plan.pk;
  plan.tables.push_back(table_from_matrix(m.cap_cw, false, pk));
  plan.tables.push_back(table_from_matrix(m.cap_ccw, false, pk));
  plan.tables.push_back(table_from_matrix(m.cup_ccw, true, pk));
  plan.tables.push_back(table_from_matrix(m.cup_cw, true, pk));
  const Tensor4* xs[] = {&m.r_up, &m.s_up, &m.r_down, &m.s_down, &m.r_left, &m.s_left, &m.r_right, &m.s_right};
  for (const Tensor4* x : xs) plan.tables.push_back(table_from_crossing(*x, pk));
  auto crossing_table = [&](Ev tok, CrossClass cls) -> const LocalTable* {
    const Tensor4& x = m.crossing(tok, cls);
    for (int i = 0; i < 8; ++i) {
      if (xs[i] == &x) return &plan.tables[static_cast<std::size_t>(4 + i)];
    }
    return nullptr;
  };
  for (int k = 0; k < d.num_slices(); ++k) {
    const Slice& s = d.slices()[static_cast<std::size_t>(k)];
    const SignList& lv = d.level(k);
    int width = static_cast<int>(lv.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Ev e = s[j];
      if (e == Ev::Id) continue;
      const EventSpan sp = d.spans(k)[j];
      const LocalTable* t = nullptr;
      switch (e) {
        case Ev::Cap: t = &plan.tables[cap_is_cw(lv[static_cast<std::size_t>(sp.bottom)]) ? 0 : 1]; break;
        case Ev::CupCcw: t = &plan.tables[2]; break;
        case Ev::CupCw: t = &plan.tables[3]; break;
        default:
          t = crossing_table(e, classify(lv[static_cast<std::size_t>(sp.bottom)], lv[static_cast<std::size_t>(sp.bottom + 1)]));
          break;
      }
      plan.steps.push_back(Step{t, sp.top, width});
      width += t->wout - t->win;
    }
  }
  return plan;
}

struct Entry {
  std::uint64_t key;
  LaurentPoly val;
};

template <class Emit>
inline void expand(const Plan& plan, const Step& st, std::uint64_t key, const LaurentPoly& val, Emit&& emit) {
  const Packing& pk = plan.pk;
  const LocalTable& t = *st.table;
  const int b = pk.bits;
  const std::uint64_t hi = pk.in_width ? key & ~Packing::mask(pk.in_shift()) : 0;
  const std::uint64_t low = key & Packing::mask(st.pos * b);
  const std::uint64_t in = (key >> (st.pos * b)) & Packing::mask(t.win * b);
  const int rest_w = st.width_before - st.pos - t.win;
  const std::uint64_t rest =
      rest_w > 0 ? (key >> ((st.pos + t.win) * b)) & Packing::mask(rest_w * b) : 0;
  const std::uint64_t base = hi | low | (rest_w > 0 ? rest << ((st.pos + t.wout) * b) : 0);
  for (const auto& [out, coef] : t.rows[in]) emit(base | (out << (st.pos * b)), val * coef);
}

std::vector<Entry> initial_frontier(const Packing& pk, int in_width) {
  std::vector<Entry> f;
  std::size_t total = 1;
  for (int i = 0; i < in_width; ++i) total *= static_cast<std::size_t>(pk.n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::uint64_t key = 0;
    std::size_t rem = idx;
    for (int p = 0; p < in_width; ++p) {
      const std::uint64_t c = rem % static_cast<std::size_t>(pk.n);
      rem /= static_cast<std::size_t>(pk.n);
      key |= c << (p * pk.bits);
      key |= c << (pk.in_shift() + p * pk.bits);
    }
    f.push_back(Entry{key, LaurentPoly(1)});
  }
  return f;
}

BoundaryTensor decode(const MorseDiagram& d, const Packing& pk, const std::vector<Entry>& f) {
  BoundaryTensor out;
  out.in_signs = d.domain();
  out.out_signs = d.codomain();
  const int w = static_cast<int>(d.codomain().size());
  for (const auto& e : f) {
    std::vector<int> in, o;
    for (int p = 0; p < pk.in_width; ++p) {
      in.push_back(static_cast<int>((e.key >> (pk.in_shift() + p * pk.bits)) & pk.digit_mask()));
    }
    for (int p = 0; p < w; ++p) o.push_back(static_cast<int>((e.key >> (p * pk.bits)) & pk.digit_mask()));
    out.entries.emplace(std::make_pair(std::move(in), std::move(o)), e.val);
  }
  return out;
}

void merge_sorted(std::vector<Entry>& v) {
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    std::size_t s = r + 1;
    LaurentPoly acc = std::move(v[r].val);
    while (s < v.size() && v[s].key == v[r].key) acc += v[s++].val;
    if (!acc.is_zero()) {
      v[w].key = v[r].key;
      v[w].val = std::move(acc);
      ++w;
    }
    r = s;
  }
  v.resize(w);
}

}  // namespace

BoundaryTensor evaluate(const MorseDiagram& d, const DiagramMatrices& m) {
  const Plan plan = make_plan(d, m);
  std::vector<Entry> frontier = initial_frontier(plan.pk, plan.pk.in_width);
  for (const Step& st : plan.steps) {
    std::vector<Entry> next;
    const long count = static_cast<long>(frontier.size());
    if (count < 256) {
      for (const auto& e : frontier) {
        expand(plan, st, e.key, e.val, [&](std::uint64_t k, LaurentPoly v) { next.push_back(Entry{k, std::move(v)}); });
      }
    } else {
      std::vector<std::vector<Entry>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
      {
        auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long i = 0; i < count; ++i) {
          const Entry& e = frontier[static_cast<std::size_t>(i)];
          expand(plan, st, e.key, e.val,
                 [&](std::uint64_t k, LaurentPoly v) { local.push_back(Entry{k, std::move(v)}); });
        }
      }
      for (auto& part : parts) {
        next.insert(next.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      }
    }
    merge_sorted(next);
    frontier = std::move(next);
  }
  return decode(d, plan.pk, frontier);
}

BoundaryTensor evaluate(const MorseDiagram& d, const MatrixOQA& a) { return evaluate(d, diagram_matrices(a)); }

BoundaryTensor evaluate_serial(const MorseDiagram& d, const DiagramMatrices& m) {
  const Plan plan = make_plan(d, m);
  std::map<std::uint64_t, LaurentPoly> frontier;
  for (auto& e : initial_frontier(plan.pk, plan.pk.in_width)) frontier.emplace(e.key, std::move(e.val));
  for (const Step& st : plan.steps) {
    std::map<std::uint64_t, LaurentPoly> next;
    for (const auto& [key, val] : frontier) {
      expand(plan, st, key, val, [&](std::uint64_t k, LaurentPoly v) { next[k] += v; });
    }
    for (auto it = next.begin(); it != next.end();) {
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    }
    frontier = std::move(next);
  }
  std::vector<Entry> f;
  for (auto& [k, v] : frontier) f.push_back(Entry{k, v});
  return decode(d, plan.pk, f);
}

// Arcs between events: every cup, cap and crossing end and every boundary
// point is one end of exactly one such arc. Id slices do not cut arcs.
static int marked_arcs(const MorseDiagram& d) {
  std::size_t ends = d.domain().size() + d.codomain().size();
  for (const Slice& sl : d.slices())
    for (Ev e : sl)
      if (e != Ev::Id) ends += static_cast<std::size_t>(width_in(e) + width_out(e));
  return static_cast<int>(ends / 2);
}

BoundaryTensor contract_naive(const MorseDiagram& d, const DiagramMatrices& m, int max_arcs) {
  if (const int arcs = marked_arcs(d); arcs > max_arcs) {
    throw Error("evaluator", "naive contraction bound exceeded: " + std::to_string(arcs) + " arcs > " +
                                 std::to_string(max_arcs));
  }
  const Plan plan = make_plan(d, m);
  const int n = m.rank;
  const int b = plan.pk.bits;
  BoundaryTensor out;
  out.in_signs = d.domain();
  out.out_signs = d.codomain();
  const int in_w = static_cast<int>(d.domain().size());
  std::vector<int> input(static_cast<std::size_t>(in_w), 0);
  // Colours of the current level, one arc at a time.
  std::function<void(std::size_t, std::vector<int>&, const LaurentPoly&)> walk =
      [&](std::size_t si, std::vector<int>& cols, const LaurentPoly& val) {
        if (si == plan.steps.size()) {
          out.entries[{input, cols}] += val;
          return;
        }
        const Step& st = plan.steps[si];
        const LocalTable& t = *st.table;
        std::uint64_t in = 0;
        for (int i = 0; i < t.win; ++i) in |= std::uint64_t(cols[static_cast<std::size_t>(st.pos + i)]) << (i * b);
        for (const auto& [o, coef] : t.rows[in]) {
          std::vector<int> next(cols.begin(), cols.begin() + st.pos);
          for (int i = 0; i < t.wout; ++i) next.push_back(static_cast<int>((o >> (i * b)) & ((1u << b) - 1)));
          next.insert(next.end(), cols.begin() + st.pos + t.win, cols.end());
          walk(si + 1, next, val * coef);
        }
      };
  std::size_t total = 1;
  for (int i = 0; i < in_w; ++i) total *= static_cast<std::size_t>(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (int p = 0; p < in_w; ++p) {
      input[static_cast<std::size_t>(p)] = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
    }
    std::vector<int> cols = input;
    walk(0, cols, LaurentPoly(1));
  }
  for (auto it = out.entries.begin(); it != out.entries.end();) {
    it = it->second.is_zero() ? out.entries.erase(it) : std::next(it);
  }
  return out;
}

MorseDiagram closure_diagram(const MorseDiagram& t) {
  if (t.domain().size() != 1 || t.codomain() != t.domain()) {
    throw Error("evaluator", "closure needs a 1-1 tangle, got <" + signs_to_string(t.domain()) + "> to <" +
                                 signs_to_string(t.codomain()) + ">");
  }
  const bool up = t.domain()[0] > 0;
  std::vector<Slice> s;
  s.push_back({up ? Ev::CupCw : Ev::CupCcw});
  for (Slice sl : t.slices()) {
    sl.push_back(Ev::Id);
    s.push_back(std::move(sl));
  }
  s.push_back({Ev::Cap});
  return MorseDiagram({}, std::move(s));
}

LaurentPoly closure_value(const MorseDiagram& t, const DiagramMatrices& m) {
  return evaluate(closure_diagram(t), m).scalar();
}

LaurentPoly closure_value(const MorseDiagram& t, const MatrixOQA& a) { return closure_value(t, diagram_matrices(a)); }

}  // namespace qlink
