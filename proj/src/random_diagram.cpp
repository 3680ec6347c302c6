#include "qlink/random_diagram.hpp"

#include <random>

namespace qlink {

namespace {

constexpr int kMaxWidth = 8;

class Builder {
 public:
  explicit Builder(std::uint64_t seed) : rng_(seed) {}

  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (rng_() & 1U) != 0; }
  Ev crossing() { return coin() ? Ev::CrossSlash : Ev::CrossBackslash; }
  Ev cup() { return coin() ? Ev::CupCcw : Ev::CupCw; }

  int width() const { return static_cast<int>(cur_.size()); }

  void push(int pos, Ev e) {
    Slice s(static_cast<std::size_t>(pos), Ev::Id);
    s.push_back(e);
    for (int i = pos + width_in(e); i < width(); ++i) s.push_back(Ev::Id);
    slices_.push_back(std::move(s));
    switch (e) {
      case Ev::CupCcw: cur_.insert(cur_.begin() + pos, {-1, 1}); break;
      case Ev::CupCw: cur_.insert(cur_.begin() + pos, {1, -1}); break;
      case Ev::Cap: cur_.erase(cur_.begin() + pos, cur_.begin() + pos + 2); break;
      case Ev::CrossSlash:
      case Ev::CrossBackslash: std::swap(cur_[static_cast<std::size_t>(pos)], cur_[static_cast<std::size_t>(pos + 1)]); break;
      case Ev::Id: break;
    }
  }

  // Random strand index p with an opposite-sign neighbour at p+1, or -1.
  int cap_site() {
    std::vector<int> c;
    for (int p = 0; p + 1 < width(); ++p) {
      if (cur_[static_cast<std::size_t>(p)] != cur_[static_cast<std::size_t>(p + 1)]) c.push_back(p);
    }
    return c.empty() ? -1 : c[static_cast<std::size_t>(pick(static_cast<int>(c.size())))];
  }

  SignList cur_;
  std::vector<Slice> slices_;

 private:
  std::mt19937_64 rng_;
};

}  // namespace

MorseDiagram random_diagram(std::uint64_t seed, int max_crossings, bool closed) {
  Builder b(seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
  SignList domain;
  if (!closed) {
    const int w = 1 + b.pick(4);
    for (int i = 0; i < w; ++i) domain.push_back(b.coin() ? 1 : -1);
  }
  b.cur_ = domain;
  if (closed) {
    const int opens = 1 + b.pick(3);
    for (int i = 0; i < opens; ++i) b.push(b.pick(b.width() + 1), b.cup());
  }
  int crossings = 0;
  const int budget = 3 * max_crossings + 6;
  for (int step = 0; step < budget; ++step) {
    const int r = b.pick(100);
    const int w = b.width();
    const int left = max_crossings - crossings;
    if (r < 40) {
      if (w >= 2 && left >= 1) {
        b.push(b.pick(w - 1), b.crossing());
        ++crossings;
      }
    } else if (r < 50) {
      if (w >= 3 && left >= 3) {
        const int p = b.pick(w - 2);
        Ev t1 = b.crossing(), t2 = b.crossing(), t3 = b.crossing();
        if (t1 == t3 && t1 != t2) t3 = t2;  // keep the over/under pattern acyclic
        b.push(p, t1);
        b.push(p + 1, t2);
        b.push(p, t3);
        crossings += 3;
      }
    } else if (r < 58) {
      if (w >= 2 && left >= 2) {
        const int p = b.pick(w - 1);
        const Ev t = b.crossing();
        b.push(p, t);
        b.push(p, flip_crossing(t));
        crossings += 2;
      }
    } else if (r < 66) {
      if (w >= 1 && w + 2 <= kMaxWidth) {
        const int p = b.pick(w);
        const int s = b.cur_[static_cast<std::size_t>(p)];
        if (b.coin()) {
          b.push(p, s > 0 ? Ev::CupCw : Ev::CupCcw);
          b.push(p + 1, Ev::Cap);
        } else {
          b.push(p + 1, s > 0 ? Ev::CupCcw : Ev::CupCw);
          b.push(p, Ev::Cap);
        }
      }
    } else if (r < 76) {
      if (w + 2 <= kMaxWidth) {
        const int p = b.pick(w + 1);
        b.push(p, b.cup());
        // A crossing on one leg of the fresh cup gives a switchback site.
        if (left >= 1 && b.coin()) {
          if (p + 2 < b.width() && b.coin()) {
            b.push(p + 1, b.crossing());
            ++crossings;
          } else if (p >= 1) {
            b.push(p - 1, b.crossing());
            ++crossings;
          }
        }
      }
    } else if (r < 90) {
      if (w >= 4 || (!closed && w >= 2)) {
        const int p = b.cap_site();
        if (p >= 0) b.push(p, Ev::Cap);
      }
    } else {
      // Crossing right next to a cap.
      if (w >= 3 && left >= 1) {
        const int p = b.pick(w - 1);
        b.push(p, b.crossing());
        ++crossings;
        const int q = p >= 1 && b.coin() ? p - 1 : p + 1;
        if (q + 1 < b.width() && b.cur_[static_cast<std::size_t>(q)] != b.cur_[static_cast<std::size_t>(q + 1)] &&
            (b.width() > 2 || closed)) {
          b.push(q, Ev::Cap);
        }
      }
    }
  }
  if (closed) {
    while (b.width() > 0) b.push(b.cap_site(), Ev::Cap);
  }
  return MorseDiagram(domain, std::move(b.slices_));
}

MorseDiagram random_knot(std::uint64_t seed, int max_crossings) {
  for (std::uint64_t i = 0;; ++i) {
    MorseDiagram d = random_diagram(seed * 1000003ULL + i, max_crossings, true);
    if (components(d).size() == 1) return d;
  }
}

}  // namespace qlink
