#include "qlink/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qlink {

std::int64_t checked_exp_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent exponent overflow");
  return r;
}

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) terms_.push_back(Term{0, BigInt(c)});
}

LaurentPoly LaurentPoly::monomial(const BigInt& coef, std::int64_t exp) {
  LaurentPoly p;
  if (!coef.is_zero()) p.terms_.push_back(Term{exp, coef});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef == BigInt(1);
}

std::int64_t LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.front().exp;
}

std::int64_t LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.back().exp;
}

BigInt LaurentPoly::coefficient(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int64_t e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coef;
  return BigInt(0);
}

std::optional<std::pair<int, std::int64_t>> LaurentPoly::as_unit() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& c = terms_[0].coef;
  if (c == BigInt(1)) return std::make_pair(1, terms_[0].exp);
  if (c == BigInt(-1)) return std::make_pair(-1, terms_[0].exp);
  return std::nullopt;
}

namespace {

// Merges b (scaled by sign) into a; both canonical.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back(Term{b[j].exp, negate_b ? -b[j].coef : b[j].coef});
      ++j;
    } else {
      BigInt c = a[i].coef;
      if (negate_b) c -= b[j].coef; else c += b[j].coef;
      if (!c.is_zero()) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

constexpr std::int64_t kDenseSpanLimit = 1 << 14;

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return LaurentPoly::monomial(a.terms_[0].coef * b.terms_[0].coef,
                                 checked_exp_add(a.terms_[0].exp, b.terms_[0].exp));
  }
  const std::int64_t lo = checked_exp_add(a.terms_.front().exp, b.terms_.front().exp);
  const std::int64_t hi = checked_exp_add(a.terms_.back().exp, b.terms_.back().exp);
  std::int64_t span;
  if (!__builtin_sub_overflow(hi, lo, &span) && span < kDenseSpanLimit) {
    std::vector<BigInt> acc(static_cast<std::size_t>(span + 1));
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        acc[static_cast<std::size_t>(s.exp + t.exp - lo)].add_product(s.coef, t.coef);
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (!acc[k].is_zero()) {
        out.terms_.push_back(Term{lo + static_cast<std::int64_t>(k), std::move(acc[k])});
      }
    }
    return out;
  }
  std::map<std::int64_t, BigInt> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc[checked_exp_add(s.exp, t.exp)].add_product(s.coef, t.coef);
  }
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back(Term{e, std::move(c)});
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return *this;
  if (terms_.empty()) return *this = a * b;
  // Single-term factors dominate transfer contractions; merge in place.
  if (b.terms_.size() == 1 && a.terms_.size() <= 4) {
    for (const auto& s : a.terms_) {
      const std::int64_t e = checked_exp_add(s.exp, b.terms_[0].exp);
      auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                 [](const Term& t, std::int64_t x) { return t.exp < x; });
      if (it != terms_.end() && it->exp == e) {
        it->coef.add_product(s.coef, b.terms_[0].coef);
        if (it->coef.is_zero()) terms_.erase(it);
      } else {
        terms_.insert(it, Term{e, s.coef * b.terms_[0].coef});
      }
    }
    return *this;
  }
  if (a.terms_.size() == 1) return add_product(b, a);
  return *this += a * b;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  const auto n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp) return a.terms_[i].exp < b.terms_[i].exp;
    const int c = compare(a.terms_[i].coef, b.terms_[i].coef);
    if (c != 0) return c < 0;
  }
  return a.terms_.size() < b.terms_.size();
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp = checked_exp_add(t.exp, k);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Laurent division by zero");
  if (is_zero()) return LaurentPoly();
  // Strip the q^k units so both sides are ordinary polynomials with nonzero
  // constant term, then run long division from the top degree.
  const std::int64_t a0 = min_exp();
  const std::int64_t d0 = divisor.min_exp();
  std::map<std::int64_t, BigInt> rem;
  for (const auto& t : terms_) rem[t.exp - a0] = t.coef;
  const std::int64_t ddeg = divisor.max_exp() - d0;
  const BigInt& lead = divisor.terms_.back().coef;
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const std::int64_t shift = top->first - ddeg;
    if (shift < 0) return std::nullopt;
    BigInt qc;
    if (!top->second.divide_exact(lead, qc)) return std::nullopt;
    for (const auto& t : divisor.terms_) {
      BigInt& slot = rem[t.exp - d0 + shift];
      slot -= qc * t.coef;
      if (slot.is_zero()) rem.erase(t.exp - d0 + shift);
    }
    quotient.push_back(Term{checked_exp_add(shift, a0 - d0), qc});
  }
  return from_terms(std::move(quotient));
}

mpq_class LaurentPoly::eval(const mpq_class& value) const {
  if (value == 0) throw std::domain_error("eval_rational: q must be nonzero");
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    const std::int64_t e = t.exp;
    if (e < INT32_MIN || e > INT32_MAX) throw std::overflow_error("eval_rational: exponent too large");
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), mag);
    mpq_class power = e >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    power.canonicalize();
    sum += power * mpq_class(t.coef.to_mpz());
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt mag = t.coef;
    if (t.coef.sign() < 0) {
      os << (first ? "-" : " - ");
      mag = -t.coef;
    } else if (!first) {
      os << " + ";
    }
    if (mag != BigInt(1)) os << mag;
    os << "q^" << t.exp;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly monomial(const BigInt& coef, std::int64_t exp) { return LaurentPoly::monomial(coef, exp); }
LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
mpq_class eval_rational(const LaurentPoly& p, const mpq_class& q_value) { return p.eval(q_value); }

LaurentPoly z_poly() { return LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1); }

}  // namespace qlink
