#include <map>
#include <random>

#include "doctest.h"
#include "qlink/laurent.hpp"
#include "qlink/oqa.hpp"
#include "support.hpp"

using namespace qlink;
using testing::q;

namespace {

// Plain exponent -> coefficient map, multiplied the schoolbook way.
using Naive = std::map<std::int64_t, mpz_class>;

Naive naive(const LaurentPoly& p) {
  Naive m;
  for (const auto& t : p.terms()) m[t.exp] = t.coef.to_mpz();
  return m;
}

Naive naive_mul(const Naive& a, const Naive& b) {
  Naive m;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) m[ea + eb] += ca * cb;
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

LaurentPoly random_poly(std::mt19937_64& rng, int terms = 5) {
  std::uniform_int_distribution<int> e(-6, 6), c(-9, 9);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(c(rng), e(rng));
  return p;
}

}  // namespace

TEST_CASE("monomials") {
  CHECK(monomial(1, 0) == LaurentPoly(1));
  CHECK(monomial(1, 0).is_one());
  CHECK(monomial(0, 5).is_zero());
  CHECK(monomial(0, 5).terms().empty());
  const LaurentPoly z = add(monomial(1, 1), monomial(-1, -1));
  CHECK(z == z_poly());
  CHECK(z.to_string() == "-q^-1 + q^1");
}

TEST_CASE("addition cancels and grows coefficients") {
  CHECK(add(q(1) + 1, -1) == q(1));
  CHECK(z_poly() + z_poly() == monomial(2, 1) - monomial(2, -1));
  const LaurentPoly p = monomial(3, -2) + monomial(-7, 4);
  CHECK(p + LaurentPoly() == p);
  CHECK((p - p).is_zero());
}

TEST_CASE("multiplication examples") {
  CHECK(mul(q(1) - q(-1), q(1) + q(-1)) == q(2) - q(-2));
  CHECK(z_poly() * z_poly() == q(2) - 2 + q(-2));
  const LaurentPoly p = monomial(5, -3) + 2;
  CHECK(p * 1 == p);
  CHECK((p * 0).is_zero());
}

TEST_CASE("rational evaluation") {
  CHECK(eval_rational(z_poly(), 2) == mpq_class(3, 2));
  CHECK(eval_rational(q(2) - q(-2), 3) == mpq_class(80, 9));
  CHECK(eval_rational(z_poly() * (monomial(4, 7) + 1), 1) == 0);
  CHECK_THROWS_AS(eval_rational(q(-1), 0), std::domain_error);
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (const auto& t : (a * b + c).terms()) CHECK(!t.coef.is_zero());
  }
}

TEST_CASE("products agree with schoolbook multiplication") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng, 8), b = random_poly(rng, 8);
    CHECK(naive(a * b) == naive_mul(naive(a), naive(b)));
  }
  // Wide exponent spans take the sparse path.
  const LaurentPoly wide = q(-40000) + q(40000) + 3;
  CHECK(naive(wide * wide) == naive_mul(naive(wide), naive(wide)));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(17);
  const mpq_class points[] = {mpq_class(2), mpq_class(-3, 5), mpq_class(7, 2)};
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    for (const auto& x : points) {
      CHECK(eval_rational(a * b, x) == eval_rational(a, x) * eval_rational(b, x));
      CHECK(eval_rational(a + b, x) == eval_rational(a, x) + eval_rational(b, x));
    }
  }
}

TEST_CASE("coefficients beyond 64 bits") {
  const LaurentPoly p = (1 + q(1)).pow(100);
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 100, 50);
  CHECK(p.coefficient(50).to_mpz() == binom);
  CHECK(!p.coefficient(50).is_small());
  CHECK(p.coefficient(0).to_mpz() == 1);
  // Crossing back into the small range.
  const LaurentPoly big = LaurentPoly::monomial(BigInt(std::string("123456789012345678901234567890")), 2);
  CHECK((big - big).is_zero());
  CHECK((big + 1 - big) == 1);
}

TEST_CASE("exact division") {
  const LaurentPoly a = (q(1) + 2 * q(-3)) * (q(2) - 1);
  const auto r = a.divide_exact(q(2) - 1);
  REQUIRE(r.has_value());
  CHECK(*r == q(1) + 2 * q(-3));
  CHECK(!LaurentPoly(q(1) + 1).divide_exact(q(1) - 1).has_value());
  const auto u = (monomial(-1, 5) * a).as_unit();
  CHECK(!u.has_value());
  const auto v = monomial(-1, 5).as_unit();
  REQUIRE(v.has_value());
  CHECK(v->first == -1);
  CHECK(v->second == 5);
}

TEST_CASE("exponent overflow is detected") {
  CHECK_THROWS(checked_exp_add(std::numeric_limits<std::int64_t>::max(), 1));
  CHECK_THROWS(q(std::numeric_limits<std::int64_t>::max()) * q(1));
}

TEST_CASE("serialization round-trips and is sorted") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = random_poly(rng);
    const auto j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
    for (std::size_t k = 1; k < j.size(); ++k) CHECK(j[k - 1]["exp"].get<long>() < j[k]["exp"].get<long>());
  }
  CHECK(poly_from_json(nlohmann::json(7)) == 7);
  const LaurentPoly huge = (1 + q(1)).pow(90);
  CHECK(poly_from_json(poly_to_json(huge)) == huge);
  CHECK(LaurentPoly().to_string() == "0");
}
