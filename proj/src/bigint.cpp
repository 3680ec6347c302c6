#include "qlink/bigint.hpp"

#include <ostream>
#include <stdexcept>

namespace qlink {

namespace {

bool fits_int64(const mpz_class& v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

mpz_class from_int64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

BigInt::BigInt(const mpz_class& v) { assign_mpz(v); }

BigInt::BigInt(const std::string& decimal) {
  mpz_class v;
  if (v.set_str(decimal, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + decimal + "'");
  }
  assign_mpz(v);
}

void BigInt::assign_mpz(const mpz_class& v) {
  if (fits_int64(v)) {
    small_ = v.get_si();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

int BigInt::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

mpz_class BigInt::to_mpz() const { return big_ ? *big_ : from_int64(small_); }

std::string BigInt::to_string() const {
  return big_ ? big_->get_str() : std::to_string(small_);
}

BigInt& BigInt::operator+=(const BigInt& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign_mpz(to_mpz() + o.to_mpz());
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign_mpz(to_mpz() - o.to_mpz());
  return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign_mpz(to_mpz() * o.to_mpz());
  return *this;
}

BigInt& BigInt::add_product(const BigInt& a, const BigInt& b) {
  std::int64_t p, r;
  if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
      !__builtin_add_overflow(small_, p, &r)) {
    small_ = r;
    return *this;
  }
  assign_mpz(to_mpz() + a.to_mpz() * b.to_mpz());
  return *this;
}

BigInt BigInt::operator-() const {
  if (!big_ && small_ != INT64_MIN) return BigInt(-small_);
  return BigInt(mpz_class(-to_mpz()));
}

bool operator==(const BigInt& a, const BigInt& b) {
  // Canonical storage: a value is big only when it does not fit in int64.
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

int compare(const BigInt& a, const BigInt& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  return cmp(a.to_mpz(), b.to_mpz());
}

bool BigInt::divide_exact(const BigInt& b, BigInt& quotient) const {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (!big_ && !b.big_ && !(small_ == INT64_MIN && b.small_ == -1)) {
    if (small_ % b.small_ != 0) return false;
    quotient = BigInt(small_ / b.small_);
    return true;
  }
  const mpz_class num = to_mpz();
  const mpz_class den = b.to_mpz();
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) return false;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  quotient = BigInt(q);
  return true;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace qlink
