#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace qlink {

/// Arbitrary-precision integer with an inline int64 fast path.
///
/// Values that fit in a signed 64-bit word never touch GMP; arithmetic that
/// overflows is redone in mpz and the result is demoted back when it fits.
class BigInt {
 public:
  BigInt() noexcept = default;
  BigInt(std::int64_t v) noexcept : small_(v) {}  // NOLINT(implicit)
  BigInt(int v) noexcept : small_(v) {}           // NOLINT(implicit)
  explicit BigInt(const mpz_class& v);
  explicit BigInt(const std::string& decimal);

  BigInt(const BigInt& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  BigInt(BigInt&&) noexcept = default;
  BigInt& operator=(const BigInt& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  BigInt& operator=(BigInt&&) noexcept = default;

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  int sign() const noexcept;
  std::int64_t small_value() const noexcept { return small_; }

  mpz_class to_mpz() const;
  std::string to_string() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  /// this += a * b
  BigInt& add_product(const BigInt& a, const BigInt& b);

  BigInt operator-() const;

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend int compare(const BigInt& a, const BigInt& b);
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }

  /// Exact quotient if b divides this, otherwise false. b must be nonzero.
  bool divide_exact(const BigInt& b, BigInt& quotient) const;

 private:
  void assign_mpz(const mpz_class& v);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace qlink
