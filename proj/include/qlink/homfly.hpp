#pragma once

#include "qlink/oqa.hpp"

namespace qlink {

/// Balanced algebra giving Homfly specializations at rank n:
///   rho     = z E^a_b (x) E^b_a (a > b) + q E^a_a (x) E^a_a + E^a_a (x) E^b_b (a != b)
///   rho_inv = same with -z and q^-1
///   m_up = m_down = diag(q^1, ..., q^n)
/// Throws AlgebraError for n < 1.
MatrixOQA build_homfly(int n);

/// The three forms of the sum that closes the mixed-inverse calculation:
///   -z * sum_{a' > a > b'} q^(2a)
///   (q^-1 - q)(q^(2b'+2) + ... + q^(2a'-2))
///   q^(2b'+1) - q^(2a'-1)
/// The last is the telescoped value; it is what makes the z-coefficient of
/// E^a'_b' (x) E^b'_a' vanish.
LaurentPoly telescoping_sum(int a_prime, int b_prime);
LaurentPoly telescoping_factored(int a_prime, int b_prime);
LaurentPoly telescoping_closed_form(int a_prime, int b_prime);
/// All three forms agree.
bool telescoping_identity(int a_prime, int b_prime);

/// check_all on build_homfly(n) plus the telescoping identity for every
/// 1 <= b' < a' <= n.
AxiomReport verify_homfly(int n);

}  // namespace qlink
