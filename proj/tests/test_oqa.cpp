#include <fstream>

#include "doctest.h"
#include "qlink/error.hpp"
#include "qlink/homfly.hpp"
#include "qlink/oqa.hpp"
#include "support.hpp"

using namespace qlink;
using testing::q;

namespace {

MatrixOQA with_background(const MatrixOQA& a, const Matrix& up, const Matrix& down) {
  return make_algebra(a.rho, a.rho_inv, up, down, "modified");
}

Matrix diag(std::initializer_list<LaurentPoly> d) { return Matrix::diagonal(std::vector<LaurentPoly>(d)); }

// Independent oracle for (U x U) on a tensor with diagonal background
// diag(q^k_i): entry (o1,o2,i1,i2) is scaled by q^(k_i1 - k_o1 + k_i2 - k_o2)
// under the [in][out] leg reading.
Tensor4 scale_diag(const Tensor4& t, const std::vector<int>& k) {
  const int n = t.size();
  Tensor4 r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) r(a, b, c, d) = t(a, b, c, d) * q(k[c] - k[a] + k[d] - k[b]);
  return r;
}

}  // namespace

TEST_CASE("Yang-Baxter") {
  CHECK(check_algebraic_ybe(build_homfly(2)).pass);
  CHECK(check_algebraic_ybe(identity_algebra(3)).pass);
  MatrixOQA a = build_homfly(2);
  a.rho(0, 0, 0, 0) += 1;
  const CheckResult r = check_algebraic_ybe(a);
  CHECK(!r.pass);
  CHECK(r.index.size() == 6);
  CHECK(r.lhs != r.rhs);
}

TEST_CASE("symmetry under the background matrices") {
  CHECK(check_symmetry(build_homfly(3)).pass);
  const MatrixOQA h = build_homfly(2);
  CHECK(check_symmetry(with_background(h, Matrix::identity(2), Matrix::identity(2))).pass);
  // Any diagonal background fixes rho: the oracle scaling factors cancel on
  // every non-zero entry of the Homfly tensor.
  const MatrixOQA odd = with_background(h, diag({q(1), q(3)}), h.m_down);
  CHECK(scale_diag(h.rho, {1, 3}) == h.rho);
  CHECK(check_symmetry(odd).pass);
  // A non-diagonal background does not.
  Matrix shear = Matrix::identity(2);
  shear(0, 1) = 1;
  const CheckResult r = check_symmetry(with_background(h, shear, h.m_down));
  CHECK(!r.pass);
  CHECK(r.name == "symmetry");
}

TEST_CASE("mixed inverse") {
  CHECK(check_mixed_inverse(build_homfly(2)).pass);
  CHECK(check_mixed_inverse(build_homfly(4)).pass);
  const MatrixOQA h = build_homfly(2);
  const CheckResult r = check_mixed_inverse(with_background(h, Matrix::identity(2), h.m_down));
  CHECK(!r.pass);
  CHECK(r.index == std::vector<int>{2, 1, 1, 2});
}

TEST_CASE("check_all") {
  CHECK(check_all(build_homfly(2)).all_pass());
  CHECK(check_all(identity_algebra(2)).all_pass());
  const MatrixOQA h = build_homfly(2);
  Matrix perturbed = h.m_up;
  perturbed(1, 1) = q(5);
  const AxiomReport r = check_all(with_background(h, h.m_down, perturbed));
  CHECK(!r.all_pass());
  CHECK(r.to_text().find("FAIL") != std::string::npos);
  std::vector<std::string> names;
  for (const auto& c : check_all(h).checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"rho-inverse", "yang-baxter", "symmetry", "mixed-inverse", "commute"});
}

TEST_CASE("background matrices must be invertible and commute") {
  const MatrixOQA h = build_homfly(2);
  Matrix singular(2);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(with_background(h, singular, h.m_down), AlgebraError);
  Matrix not_unit = Matrix::identity(2);
  not_unit(0, 0) = 2;
  CHECK_THROWS_AS(with_background(h, not_unit, h.m_down), AlgebraError);
  Matrix shear = Matrix::identity(2);
  shear(0, 1) = q(1);
  CHECK(!check_commute(with_background(h, shear, h.m_down)).pass);
  CHECK(check_commute(h).pass);
}

TEST_CASE("standard algebras from twist data") {
  const StandardResult triv = standard_from_twist(Tensor4::identity(2), Tensor4::identity(2), Matrix::identity(2));
  CHECK(triv.report.all_pass());
  const MatrixOQA h = build_homfly(3);
  const StandardResult s = standard_from_twist(h.rho, h.rho_inv, h.m_up * h.m_down);
  CHECK(s.report.all_pass());
  CHECK(s.algebra.m_down.is_identity());
  const StandardResult bad = standard_from_twist(h.rho, h.rho_inv, Matrix::identity(3));
  CHECK(!bad.report.all_pass());
  bool mixed_failed = false;
  for (const auto& c : bad.report.checks) mixed_failed |= c.name == "mixed-inverse" && !c.pass;
  CHECK(mixed_failed);
  Tensor4 broken = h.rho;
  broken(0, 0, 0, 0) = 0;
  CHECK_THROWS_AS(standard_from_twist(broken, h.rho_inv, Matrix::identity(3)), AlgebraError);
}

TEST_CASE("standardize") {
  const MatrixOQA h = build_homfly(2);
  const MatrixOQA s = standardize(h);
  CHECK(s.m_up == h.m_up * h.m_up);
  CHECK(s.m_down.is_identity());
  CHECK(check_all(s).all_pass());
  CHECK(standardize(s).m_up == s.m_up);
  CHECK(standardize(s).m_down == s.m_down);
  MatrixOQA broken = h;
  broken.rho(0, 0, 0, 0) = 7;
  CHECK_THROWS_AS(standardize(broken), AlgebraError);
}

TEST_CASE("algebra files") {
  const LoadedAlgebra l = load_algebra_file(testing::fixture("homfly_n2.json"), true);
  const MatrixOQA h = build_homfly(2);
  CHECK(l.algebra.rho == h.rho);
  CHECK(l.algebra.rho_inv == h.rho_inv);
  CHECK(l.algebra.m_up == h.m_up);
  CHECK(l.algebra.m_down == h.m_down);
  CHECK(l.report.all_pass());

  CHECK_THROWS_AS(load_algebra_file(testing::fixture("homfly_n2_corrupted.json"), true), AlgebraError);
  const LoadedAlgebra lenient = load_algebra_file(testing::fixture("homfly_n2_corrupted.json"), false);
  CHECK(!lenient.report.all_pass());

  nlohmann::json j = algebra_to_json(h);
  j["m_up"] = algebra_to_json(build_homfly(3))["m_up"];
  try {
    algebra_from_json(j, "test");
    FAIL("expected a rank mismatch");
  } catch (const AlgebraError& e) {
    CHECK(std::string(e.what()).find("oqa") == 0);
  }
  nlohmann::json missing = algebra_to_json(h);
  missing.erase("rho_inv");
  CHECK_THROWS_AS(algebra_from_json(missing, "test"), AlgebraError);
  CHECK_THROWS_AS(load_algebra_file(testing::fixture("no_such_file.json"), true), AlgebraError);
}

TEST_CASE("both mixed-inverse orders agree on shipped algebras") {
  for (int n = 1; n <= 4; ++n) CHECK(check_mixed_inverse(build_homfly(n)).pass);
  const MatrixOQA h = build_homfly(2);
  const Tensor4 x = conj_leg(h.rho, 2, h.m_up, h.m_up_inv);
  const Tensor4 y = conj_leg(h.rho_inv, 1, h.m_down, h.m_down_inv);
  CHECK(mul_op(x, y) == Tensor4::identity(2));
  CHECK(mul_op(y, x) == Tensor4::identity(2));
}
