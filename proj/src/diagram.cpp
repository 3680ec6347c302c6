#include "qlink/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qlink/error.hpp"

namespace qlink {

int width_in(Ev e) {
  switch (e) {
    case Ev::Id: return 1;
    case Ev::CupCcw:
    case Ev::CupCw: return 0;
    default: return 2;
  }
}

int width_out(Ev e) {
  switch (e) {
    case Ev::Id: return 1;
    case Ev::Cap: return 0;
    default: return 2;
  }
}

bool is_crossing(Ev e) { return e == Ev::CrossSlash || e == Ev::CrossBackslash; }
bool is_cup(Ev e) { return e == Ev::CupCcw || e == Ev::CupCw; }

std::string_view token(Ev e) {
  switch (e) {
    case Ev::Id: return "id";
    case Ev::CupCcw: return "u>";
    case Ev::CupCw: return "u<";
    case Ev::Cap: return "n";
    case Ev::CrossSlash: return "x/";
    case Ev::CrossBackslash: return "x\\";
  }
  return "?";
}

std::optional<Ev> parse_token(std::string_view s) {
  if (s == "id") return Ev::Id;
  if (s == "u>") return Ev::CupCcw;
  if (s == "u<") return Ev::CupCw;
  if (s == "n") return Ev::Cap;
  if (s == "x/") return Ev::CrossSlash;
  if (s == "x\\") return Ev::CrossBackslash;
  return std::nullopt;
}

Ev flip_crossing(Ev e) {
  if (e == Ev::CrossSlash) return Ev::CrossBackslash;
  if (e == Ev::CrossBackslash) return Ev::CrossSlash;
  return e;
}

CrossClass classify(int s1, int s2) {
  if (s1 > 0 && s2 > 0) return CrossClass::Up;
  if (s1 < 0 && s2 < 0) return CrossClass::Down;
  return s1 > 0 ? CrossClass::Right : CrossClass::Left;
}

std::string_view class_name(CrossClass c) {
  switch (c) {
    case CrossClass::Up: return "up";
    case CrossClass::Down: return "down";
    case CrossClass::Right: return "right";
    case CrossClass::Left: return "left";
  }
  return "?";
}

int crossing_sign(Ev tok, int s1, int s2) {
  const int s = s1 * s2;
  return tok == Ev::CrossSlash ? s : -s;
}

MorseDiagram::MorseDiagram(SignList domain, std::vector<Slice> slices) : slices_(std::move(slices)) {
  for (int s : domain) {
    if (s != 1 && s != -1) throw DiagramError(-1, "domain signs must be +1 or -1");
  }
  levels_ = {std::move(domain)};
  rebuild();
}

MorseDiagram MorseDiagram::identity(const SignList& signs) { return MorseDiagram(signs, {}); }

void MorseDiagram::rebuild() {
  levels_.resize(1);
  spans_.clear();
  above_.assign(slices_.size() + 1, {});
  below_.assign(slices_.size() + 1, {});
  crossings_ = 0;
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    const SignList& in = levels_[k];
    SignList out;
    std::vector<EventSpan> spans;
    above_[k].assign(in.size(), -1);
    int pos = 0;
    for (std::size_t j = 0; j < slices_[k].size(); ++j) {
      const Ev e = slices_[k][j];
      const int w = width_in(e);
      if (pos + w > static_cast<int>(in.size())) {
        throw DiagramError(static_cast<int>(k), "events need more strands than the " +
                                                    std::to_string(in.size()) + " entering");
      }
      spans.push_back(EventSpan{pos, static_cast<int>(out.size())});
      for (int t = 0; t < w; ++t) above_[k][pos + t] = static_cast<int>(j);
      switch (e) {
        case Ev::Id: out.push_back(in[pos]); break;
        case Ev::CupCcw: out.push_back(-1); out.push_back(1); break;
        case Ev::CupCw: out.push_back(1); out.push_back(-1); break;
        case Ev::Cap:
          if (in[pos] == in[pos + 1]) {
            throw DiagramError(static_cast<int>(k), "cap at strand " + std::to_string(pos) +
                                                        " joins equal signs");
          }
          break;
        case Ev::CrossSlash:
        case Ev::CrossBackslash:
          out.push_back(in[pos + 1]);
          out.push_back(in[pos]);
          ++crossings_;
          break;
      }
      pos += w;
    }
    if (pos != static_cast<int>(in.size())) {
      throw DiagramError(static_cast<int>(k), "events consume " + std::to_string(pos) + " of " +
                                                  std::to_string(in.size()) + " strands");
    }
    below_[k + 1].assign(out.size(), -1);
    for (std::size_t j = 0; j < slices_[k].size(); ++j) {
      for (int t = 0; t < width_out(slices_[k][j]); ++t) below_[k + 1][spans[j].top + t] = static_cast<int>(j);
    }
    spans_.push_back(std::move(spans));
    levels_.push_back(std::move(out));
  }
}

int MorseDiagram::max_width() const noexcept {
  std::size_t w = 0;
  for (const auto& l : levels_) w = std::max(w, l.size());
  return static_cast<int>(w);
}

int MorseDiagram::arc_count() const noexcept {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return static_cast<int>(n);
}

std::optional<std::pair<Visit, Arc>> MorseDiagram::step(const Arc& a) const {
  const int s = levels_.at(static_cast<std::size_t>(a.level)).at(static_cast<std::size_t>(a.pos));
  Visit v;
  if (s > 0) {
    if (a.level == num_slices()) return std::nullopt;
    v.slice = a.level;
    v.event = above_[static_cast<std::size_t>(a.level)][static_cast<std::size_t>(a.pos)];
    v.in_port = a.pos - spans_[static_cast<std::size_t>(v.slice)][static_cast<std::size_t>(v.event)].bottom;
  } else {
    if (a.level == 0) return std::nullopt;
    v.slice = a.level - 1;
    v.event = below_[static_cast<std::size_t>(a.level)][static_cast<std::size_t>(a.pos)];
    v.in_port = 2 + a.pos - spans_[static_cast<std::size_t>(v.slice)][static_cast<std::size_t>(v.event)].top;
  }
  const Ev e = slices_[static_cast<std::size_t>(v.slice)][static_cast<std::size_t>(v.event)];
  switch (e) {
    case Ev::Id: v.out_port = v.in_port == 0 ? 2 : 0; break;
    case Ev::CupCcw:
    case Ev::CupCw: v.out_port = v.in_port == 2 ? 3 : 2; break;
    case Ev::Cap: v.out_port = v.in_port == 0 ? 1 : 0; break;
    default: v.out_port = 3 - v.in_port; break;  // 0<->3, 1<->2
  }
  const EventSpan sp = spans_[static_cast<std::size_t>(v.slice)][static_cast<std::size_t>(v.event)];
  Arc next = v.out_port < 2 ? Arc{v.slice, sp.bottom + v.out_port} : Arc{v.slice + 1, sp.top + v.out_port - 2};
  return std::make_pair(v, next);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

// Splits on spaces/tabs, reporting each token's 1-based column.
std::vector<std::pair<std::string, int>> tokens_with_columns(std::string_view line, std::size_t from) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.emplace_back(std::string(line.substr(start, i - start)), static_cast<int>(start) + 1);
  }
  return out;
}

}  // namespace

MorseDiagram parse_morse(std::string_view text) {
  std::optional<SignList> domain;
  std::vector<Slice> slices;
  std::vector<int> slice_lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') {
      if (nl == text.size()) break;
      continue;
    }
    const std::size_t lead = raw.find_first_not_of(" \t");
    if (line.rfind("in:", 0) == 0) {
      if (domain) throw ParseError(line_no, static_cast<int>(lead) + 1, "duplicate 'in:' line");
      SignList signs;
      for (auto& [tok, col] : tokens_with_columns(raw, lead + 3)) {
        if (tok == "+") signs.push_back(1);
        else if (tok == "-") signs.push_back(-1);
        else throw ParseError(line_no, col, "expected '+' or '-', got '" + tok + "'");
      }
      domain = std::move(signs);
    } else if (line.rfind("slice:", 0) == 0) {
      if (!domain) throw ParseError(line_no, static_cast<int>(lead) + 1, "'slice:' before 'in:'");
      Slice s;
      for (auto& [tok, col] : tokens_with_columns(raw, lead + 6)) {
        auto e = parse_token(tok);
        if (!e) throw ParseError(line_no, col, "unknown event token '" + tok + "'");
        s.push_back(*e);
      }
      slices.push_back(std::move(s));
      slice_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, static_cast<int>(lead) + 1,
                       domain ? "expected 'slice:'" : "expected 'in:'");
    }
    if (nl == text.size()) break;
  }
  if (!domain) throw ParseError(line_no, 1, "missing 'in:' line");
  try {
    return MorseDiagram(std::move(*domain), std::move(slices));
  } catch (const DiagramError& e) {
    if (e.slice() >= 0) {
      const int ln = slice_lines[static_cast<std::size_t>(e.slice())];
       throw DiagramError(e.slice(), e.detail() + " (line " + std::to_string(ln) + ")");
    }
    throw;
  }
}

std::string signs_to_string(const SignList& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i] > 0 ? '+' : '-';
  }
  return out;
}

std::string render_morse(const MorseDiagram& d) {
  std::string out = "in:";
  if (!d.domain().empty()) out += " " + signs_to_string(d.domain());
  out += '\n';
  for (const auto& s : d.slices()) {
    out += "slice:";
    for (Ev e : s) {
      out += ' ';
      out += token(e);
    }
    out += '\n';
  }
  return out;
}

MorseDiagram load_morse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("diagram", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_morse(ss.str());
}

MorseDiagram compose(const MorseDiagram& a, const MorseDiagram& b) {
  if (a.codomain() != b.domain()) {
    throw DiagramError(-1, "compose: codomain <" + signs_to_string(a.codomain()) +
                               "> does not match domain <" + signs_to_string(b.domain()) + ">");
  }
  std::vector<Slice> s = a.slices();
  s.insert(s.end(), b.slices().begin(), b.slices().end());
  return MorseDiagram(a.domain(), std::move(s));
}

MorseDiagram tensor(const MorseDiagram& a, const MorseDiagram& b) {
  SignList dom = a.domain();
  dom.insert(dom.end(), b.domain().begin(), b.domain().end());
  const int n = std::max(a.num_slices(), b.num_slices());
  std::vector<Slice> out;
  out.reserve(static_cast<std::size_t>(n));
  auto part = [](const MorseDiagram& d, int k) {
    if (k < d.num_slices()) return d.slices()[static_cast<std::size_t>(k)];
    return Slice(d.codomain().size(), Ev::Id);
  };
  for (int k = 0; k < n; ++k) {
    Slice s = part(a, k);
    Slice r = part(b, k);
    s.insert(s.end(), r.begin(), r.end());
    out.push_back(std::move(s));
  }
  return MorseDiagram(std::move(dom), std::move(out));
}

MorseDiagram reverse_orientation(const MorseDiagram& d) {
  SignList dom = d.domain();
  for (int& s : dom) s = -s;
  std::vector<Slice> slices = d.slices();
  for (auto& s : slices) {
    for (Ev& e : s) {
      if (e == Ev::CupCcw) e = Ev::CupCw;
      else if (e == Ev::CupCw) e = Ev::CupCcw;
    }
  }
  return MorseDiagram(std::move(dom), std::move(slices));
}

std::vector<CrossingInfo> crossings(const MorseDiagram& d) {
  std::vector<CrossingInfo> out;
  for (int k = 0; k < d.num_slices(); ++k) {
    const Slice& s = d.slices()[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!is_crossing(s[j])) continue;
      CrossingInfo c;
      c.slice = k;
      c.event = static_cast<int>(j);
      c.bottom = d.spans(k)[j].bottom;
      c.top = d.spans(k)[j].top;
      c.token = s[j];
      c.s1 = d.level(k)[static_cast<std::size_t>(c.bottom)];
      c.s2 = d.level(k)[static_cast<std::size_t>(c.bottom + 1)];
      c.cls = classify(c.s1, c.s2);
      c.sign = crossing_sign(c.token, c.s1, c.s2);
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Component> components(const MorseDiagram& d) {
  std::vector<std::vector<char>> seen;
  for (int k = 0; k <= d.num_slices(); ++k) seen.emplace_back(d.level(k).size(), 0);
  auto mark = [&](const Arc& a) -> char& {
    return seen[static_cast<std::size_t>(a.level)][static_cast<std::size_t>(a.pos)];
  };
  auto trace = [&](Arc start) {
    Component c;
    Arc cur = start;
    while (true) {
      mark(cur) = 1;
      c.arcs.push_back(cur);
      auto nx = d.step(cur);
      if (!nx) break;
      c.visits.push_back(nx->first);
      if (nx->second == start) {
        c.closed = true;
        break;
      }
      cur = nx->second;
    }
    return c;
  };
  std::vector<Component> out;
  for (std::size_t p = 0; p < d.domain().size(); ++p) {
    if (d.domain()[p] > 0) out.push_back(trace(Arc{0, static_cast<int>(p)}));
  }
  const int top = d.num_slices();
  for (std::size_t p = 0; p < d.codomain().size(); ++p) {
    if (d.codomain()[p] < 0) out.push_back(trace(Arc{top, static_cast<int>(p)}));
  }
  for (int k = 0; k <= top; ++k) {
    for (std::size_t p = 0; p < d.level(k).size(); ++p) {
      if (!seen[static_cast<std::size_t>(k)][p]) out.push_back(trace(Arc{k, static_cast<int>(p)}));
    }
  }
  return out;
}

DiagramSummary summarize(const MorseDiagram& d) {
  DiagramSummary s;
  s.slices = d.num_slices();
  s.crossings = d.crossing_count();
  s.components = static_cast<int>(components(d).size());
  s.max_width = d.max_width();
  s.domain = d.domain();
  s.codomain = d.codomain();
  return s;
}

}  // namespace qlink
