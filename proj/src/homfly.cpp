#include "qlink/homfly.hpp"

#include "qlink/error.hpp"

namespace qlink {

MatrixOQA build_homfly(int n) {
  if (n < 1) throw AlgebraError("homfly rank must be at least 1");
  const LaurentPoly z = z_poly();
  Tensor4 rho(n), inv(n);
  // Summand E^a_b (x) E^c_d lands at (out1, out2, in1, in2) = (a, c, b, d).
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a > b) {
        rho(a, b, b, a) = z;
        inv(a, b, b, a) = -z;
      }
      if (a == b) {
        rho(a, a, a, a) = LaurentPoly::q();
        inv(a, a, a, a) = LaurentPoly::q_inv();
      } else {
        rho(a, b, a, b) = LaurentPoly(1);
        inv(a, b, a, b) = LaurentPoly(1);
      }
    }
  }
  std::vector<LaurentPoly> d;
  for (int i = 1; i <= n; ++i) d.push_back(LaurentPoly::monomial(1, i));
  return make_algebra(std::move(rho), std::move(inv), Matrix::diagonal(d), Matrix::diagonal(d),
                      "homfly rank " + std::to_string(n));
}

LaurentPoly telescoping_sum(int a_prime, int b_prime) {
  LaurentPoly s;
  for (int a = b_prime + 1; a < a_prime; ++a) s += LaurentPoly::monomial(1, 2 * a);
  return -z_poly() * s;
}

LaurentPoly telescoping_factored(int a_prime, int b_prime) {
  LaurentPoly geometric;
  for (int e = 2 * b_prime + 2; e <= 2 * a_prime - 2; e += 2) geometric += LaurentPoly::monomial(1, e);
  return (LaurentPoly::q_inv() - LaurentPoly::q()) * geometric;
}

LaurentPoly telescoping_closed_form(int a_prime, int b_prime) {
  return LaurentPoly::monomial(1, 2 * b_prime + 1) - LaurentPoly::monomial(1, 2 * a_prime - 1);
}

bool telescoping_identity(int a_prime, int b_prime) {
  const LaurentPoly f = telescoping_factored(a_prime, b_prime);
  return telescoping_sum(a_prime, b_prime) == f && f == telescoping_closed_form(a_prime, b_prime);
}

AxiomReport verify_homfly(int n) {
  AxiomReport r = check_all(build_homfly(n));
  CheckResult tel;
  tel.name = "telescoping";
  for (int ap = 2; ap <= n && tel.pass; ++ap) {
    for (int bp = 1; bp < ap; ++bp) {
      if (!telescoping_identity(ap, bp)) {
        tel.pass = false;
        tel.detail = "sum identity";
        tel.index = {ap, bp};
        break;
      }
    }
  }
  r.checks.push_back(tel);
  return r;
}

}  // namespace qlink
