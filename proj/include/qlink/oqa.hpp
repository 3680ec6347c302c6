#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qlink/laurent.hpp"
#include "qlink/tensor.hpp"

namespace qlink {

/// Oriented quantum algebra in matrix form.
///
/// rho and rho_inv are stored as T(out1, out2, in1, in2). For the algebra
/// structure each tensor leg is read as a matrix x[in][out], so that
///   rho(o1, o2, i1, i2) = sum e[i1][o1] * e'[i2][o2].
/// U(x) = m_up x m_up^-1 and D(x) = m_down x m_down^-1.
struct MatrixOQA {
  int rank = 0;
  Tensor4 rho;
  Tensor4 rho_inv;
  Matrix m_up;
  Matrix m_down;
  Matrix m_up_inv;
  Matrix m_down_inv;
  std::string provenance;
};

/// Builds the algebra and inverts the background matrices. Throws
/// AlgebraError on shape mismatch or when m_up / m_down have no inverse
/// over Z[q, q^-1].
MatrixOQA make_algebra(Tensor4 rho, Tensor4 rho_inv, Matrix m_up, Matrix m_down, std::string provenance);

/// The trivial algebra: rho = rho_inv = identity, M = M' = I.
MatrixOQA identity_algebra(int n);

/// Outcome of one axiom check. The witness index is 1-based and
/// lexicographically smallest among the failing entries.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // which sub-identity failed
  std::vector<int> index;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

struct AxiomReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_text() const;
};

/// rho12 rho13 rho23 = rho23 rho13 rho12 on V (x) V (x) V.
CheckResult check_algebraic_ybe(const MatrixOQA& a);
/// (U (x) U) and (D (x) D) fix rho and rho_inv.
CheckResult check_symmetry(const MatrixOQA& a);
/// [(1 (x) U) rho][(D (x) 1) rho^-1] = 1 in A (x) A^op, both orders.
CheckResult check_mixed_inverse(const MatrixOQA& a);
/// rho rho_inv = rho_inv rho = identity.
CheckResult check_rho_inverse(const MatrixOQA& a);
/// m_up m_down = m_down m_up.
CheckResult check_commute(const MatrixOQA& a);
AxiomReport check_all(const MatrixOQA& a);

/// Standard algebra with U given by conjugation by g and D = 1.
struct StandardResult {
  MatrixOQA algebra;
  AxiomReport report;
};
StandardResult standard_from_twist(const Tensor4& rho, const Tensor4& rho_inv, const Matrix& g);

/// m_up -> m_up m_down, m_down -> I. Throws AlgebraError if a fails an axiom.
MatrixOQA standardize(const MatrixOQA& a);

/// Leg-wise operations shared with the evaluator and bead modules.
/// conj_leg(T, leg, M, Minv): apply x -> M x M^-1 to tensor leg 1 or 2.
Tensor4 conj_leg(const Tensor4& t, int leg, const Matrix& m, const Matrix& m_inv);
/// Product in A (x) A^op.
Tensor4 mul_op(const Tensor4& x, const Tensor4& y);

// JSON form. A polynomial is a list of {"exp","coef"} records (coef may be
// a decimal string when it exceeds 64 bits) or an integer shorthand.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const MatrixOQA& a);
/// Throws AlgebraError for schema violations and rank mismatches.
MatrixOQA algebra_from_json(const nlohmann::json& j, const std::string& provenance);

struct LoadedAlgebra {
  MatrixOQA algebra;
  AxiomReport report;
};
/// Parses and checks. In strict mode any failing axiom throws AlgebraError;
/// otherwise the report is returned for the caller to print as warnings.
LoadedAlgebra load_algebra_file(const std::string& path, bool strict);

}  // namespace qlink
