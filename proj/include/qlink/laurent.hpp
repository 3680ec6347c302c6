#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qlink/bigint.hpp"

namespace qlink {

/// One term coef * q^exp of a Laurent polynomial.
struct Term {
  std::int64_t exp = 0;
  BigInt coef;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exp == b.exp && a.coef == b.coef;
  }
};

/// Exact element of Z[q, q^-1].
///
/// Stored as a term list sorted by ascending exponent with no zero
/// coefficients, so structural equality is ring equality. Values are
/// immutable once built; every operation returns a fresh canonical value.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c);  // NOLINT(implicit): constants read naturally
  LaurentPoly(int c) : LaurentPoly(static_cast<std::int64_t>(c)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(const BigInt& coef, std::int64_t exp);
  /// Sorts, merges equal exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly q() { return monomial(1, 1); }
  static LaurentPoly q_inv() { return monomial(1, -1); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;
  BigInt coefficient(std::int64_t exp) const;

  /// Returns (sign, k) when the value is +-q^k, the units of Z[q, q^-1].
  std::optional<std::pair<int, std::int64_t>> as_unit() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// this += a * b without materializing the product separately.
  LaurentPoly& add_product(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  /// Total order (by term list) for use as a map key and for deterministic output.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiplies by q^k.
  LaurentPoly shifted(std::int64_t k) const;
  LaurentPoly pow(unsigned n) const;
  /// Exact quotient in Z[q, q^-1] when it exists.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Exact substitution q -> value. Throws std::domain_error for value == 0.
  mpq_class eval(const mpq_class& value) const;

  /// Ascending exponents with explicit q^k, e.g. "q^-2 - 2q^0 + q^2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly monomial(const BigInt& coef, std::int64_t exp);
LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
mpq_class eval_rational(const LaurentPoly& p, const mpq_class& q_value);

/// q - q^-1
LaurentPoly z_poly();

/// Exponent addition that throws std::overflow_error instead of wrapping.
std::int64_t checked_exp_add(std::int64_t a, std::int64_t b);

}  // namespace qlink
