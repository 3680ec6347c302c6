#include "qlink/oqa.hpp"

#include <fstream>
#include <sstream>

#include "qlink/error.hpp"

namespace qlink {

using nlohmann::json;

MatrixOQA make_algebra(Tensor4 rho, Tensor4 rho_inv, Matrix m_up, Matrix m_down, std::string provenance) {
  const int n = rho.size();
  if (n < 1) throw AlgebraError("rank must be at least 1");
  if (rho_inv.size() != n || m_up.size() != n || m_down.size() != n) {
    throw AlgebraError("rank mismatch between rho (" + std::to_string(n) + ") and rho_inv/m_up/m_down");
  }
  auto up_inv = inverse(m_up);
  if (!up_inv) throw AlgebraError("m_up has no inverse over Z[q,q^-1]");
  auto down_inv = inverse(m_down);
  if (!down_inv) throw AlgebraError("m_down has no inverse over Z[q,q^-1]");
  MatrixOQA a;
  a.rank = n;
  a.rho = std::move(rho);
  a.rho_inv = std::move(rho_inv);
  a.m_up = std::move(m_up);
  a.m_down = std::move(m_down);
  a.m_up_inv = std::move(*up_inv);
  a.m_down_inv = std::move(*down_inv);
  a.provenance = std::move(provenance);
  return a;
}

MatrixOQA identity_algebra(int n) {
  return make_algebra(Tensor4::identity(n), Tensor4::identity(n), Matrix::identity(n), Matrix::identity(n),
                      "identity rank " + std::to_string(n));
}

bool AxiomReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.pass) {
      os << " (" << c.detail << ") at [";
      for (std::size_t i = 0; i < c.index.size(); ++i) os << (i ? "," : "") << c.index[i];
      os << "]: " << c.lhs << " != " << c.rhs;
    }
    os << '\n';
  }
  return os.str();
}

Tensor4 conj_leg(const Tensor4& t, int leg, const Matrix& m, const Matrix& m_inv) {
  const int n = t.size();
  Tensor4 r(n);
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
          LaurentPoly acc;
          for (int k = 0; k < n; ++k) {
            const LaurentPoly& mk = m(leg == 1 ? i1 : i2, k);
            if (mk.is_zero()) continue;
            for (int l = 0; l < n; ++l) {
              const LaurentPoly& ml = m_inv(l, leg == 1 ? o1 : o2);
              if (ml.is_zero()) continue;
              const LaurentPoly& tv = leg == 1 ? t(l, o2, k, i2) : t(o1, l, i1, k);
              if (tv.is_zero()) continue;
              acc += mk * tv * ml;
            }
          }
          r(o1, o2, i1, i2) = std::move(acc);
        }
  return r;
}

Tensor4 mul_op(const Tensor4& x, const Tensor4& y) {
  const int n = x.size();
  Tensor4 r(n);
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
          LaurentPoly acc;
          for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2) {
              const LaurentPoly& xv = x(k1, o2, i1, k2);
              if (xv.is_zero()) continue;
              const LaurentPoly& yv = y(o1, k2, k1, i2);
              if (!yv.is_zero()) acc.add_product(xv, yv);
            }
          r(o1, o2, i1, i2) = std::move(acc);
        }
  return r;
}

namespace {

CheckResult compare_tensors(const std::string& name, const std::string& detail, const Tensor4& lhs,
                            const Tensor4& rhs) {
  CheckResult c;
  c.name = name;
  if (auto idx = first_difference(lhs, rhs)) {
    const auto [a, b, d, e] = *idx;
    c.pass = false;
    c.detail = detail;
    c.index = {a + 1, b + 1, d + 1, e + 1};
    c.lhs = lhs(a, b, d, e);
    c.rhs = rhs(a, b, d, e);
  }
  return c;
}

// Dense N^3 x N^3 operator; rows and columns are (x1, x2, x3) row-major.
struct Op3 {
  int n;
  std::vector<LaurentPoly> a;
  explicit Op3(int n_) : n(n_), a(static_cast<std::size_t>(n_ * n_ * n_) * (n_ * n_ * n_)) {}
  int dim() const { return n * n * n; }
  LaurentPoly& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim() + c]; }
  const LaurentPoly& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim() + c]; }
};

Op3 embed(const Tensor4& rho, int first, int second) {
  const int n = rho.size();
  Op3 op(n);
  const int d = op.dim();
  for (int r = 0; r < d; ++r) {
    const int o[3] = {r / (n * n), (r / n) % n, r % n};
    for (int c = 0; c < d; ++c) {
      const int i[3] = {c / (n * n), (c / n) % n, c % n};
      const int spare = 3 - first - second;
      if (o[spare] != i[spare]) continue;
      op.at(r, c) = rho(o[first], o[second], i[first], i[second]);
    }
  }
  return op;
}

Op3 operator*(const Op3& x, const Op3& y) {
  Op3 r(x.n);
  const int d = x.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const LaurentPoly& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const LaurentPoly& yv = y.at(k, j);
        if (!yv.is_zero()) r.at(i, j).add_product(xv, yv);
      }
    }
  return r;
}

}  // namespace

CheckResult check_algebraic_ybe(const MatrixOQA& a) {
  const Op3 r12 = embed(a.rho, 0, 1);
  const Op3 r13 = embed(a.rho, 0, 2);
  const Op3 r23 = embed(a.rho, 1, 2);
  const Op3 lhs = r12 * r13 * r23;
  const Op3 rhs = r23 * r13 * r12;
  CheckResult c;
  c.name = "yang-baxter";
  const int n = a.rank;
  const int d = lhs.dim();
  for (int r = 0; r < d && c.pass; ++r) {
    for (int col = 0; col < d; ++col) {
      if (lhs.at(r, col) != rhs.at(r, col)) {
        c.pass = false;
        c.detail = "rho12 rho13 rho23 vs rho23 rho13 rho12";
        c.index = {r / (n * n) + 1, (r / n) % n + 1, r % n + 1, col / (n * n) + 1, (col / n) % n + 1, col % n + 1};
        c.lhs = lhs.at(r, col);
        c.rhs = rhs.at(r, col);
        break;
      }
    }
  }
  return c;
}

CheckResult check_symmetry(const MatrixOQA& a) {
  struct Case {
    const char* what;
    const Tensor4* t;
    const Matrix* m;
    const Matrix* mi;
  };
  const Case cases[] = {{"(U x U) rho", &a.rho, &a.m_up, &a.m_up_inv},
                        {"(D x D) rho", &a.rho, &a.m_down, &a.m_down_inv},
                        {"(U x U) rho_inv", &a.rho_inv, &a.m_up, &a.m_up_inv},
                        {"(D x D) rho_inv", &a.rho_inv, &a.m_down, &a.m_down_inv}};
  for (const auto& cs : cases) {
    const Tensor4 moved = conj_leg(conj_leg(*cs.t, 1, *cs.m, *cs.mi), 2, *cs.m, *cs.mi);
    CheckResult c = compare_tensors("symmetry", cs.what, moved, *cs.t);
    if (!c.pass) return c;
  }
  return CheckResult{"symmetry", true, "", {}, {}, {}};
}

CheckResult check_mixed_inverse(const MatrixOQA& a) {
  const Tensor4 x = conj_leg(a.rho, 2, a.m_up, a.m_up_inv);
  const Tensor4 y = conj_leg(a.rho_inv, 1, a.m_down, a.m_down_inv);
  const Tensor4 id = Tensor4::identity(a.rank);
  CheckResult c = compare_tensors("mixed-inverse", "[(1 x U)rho][(D x 1)rho_inv]", mul_op(x, y), id);
  if (!c.pass) return c;
  return compare_tensors("mixed-inverse", "[(D x 1)rho_inv][(1 x U)rho]", mul_op(y, x), id);
}

CheckResult check_rho_inverse(const MatrixOQA& a) {
  const Tensor4 id = Tensor4::identity(a.rank);
  CheckResult c = compare_tensors("rho-inverse", "rho rho_inv", matmul(a.rho, a.rho_inv), id);
  if (!c.pass) return c;
  return compare_tensors("rho-inverse", "rho_inv rho", matmul(a.rho_inv, a.rho), id);
}

CheckResult check_commute(const MatrixOQA& a) {
  const Matrix x = a.m_up * a.m_down;
  const Matrix y = a.m_down * a.m_up;
  CheckResult c;
  c.name = "commute";
  for (int i = 0; i < a.rank && c.pass; ++i) {
    for (int j = 0; j < a.rank; ++j) {
      if (x(i, j) != y(i, j)) {
        c.pass = false;
        c.detail = "m_up m_down vs m_down m_up";
        c.index = {i + 1, j + 1};
        c.lhs = x(i, j);
        c.rhs = y(i, j);
        break;
      }
    }
  }
  return c;
}

AxiomReport check_all(const MatrixOQA& a) {
  AxiomReport r;
  r.checks.push_back(check_rho_inverse(a));
  r.checks.push_back(check_algebraic_ybe(a));
  r.checks.push_back(check_symmetry(a));
  r.checks.push_back(check_mixed_inverse(a));
  r.checks.push_back(check_commute(a));
  return r;
}

StandardResult standard_from_twist(const Tensor4& rho, const Tensor4& rho_inv, const Matrix& g) {
  if (rho.size() != rho_inv.size() || rho.size() != g.size()) throw AlgebraError("rank mismatch");
  const Tensor4 id = Tensor4::identity(rho.size());
  if (matmul(rho, rho_inv) != id) throw AlgebraError("rho rho_inv is not the identity");
  if (!inverse(g)) throw AlgebraError("twist matrix g is singular over Z[q,q^-1]");
  MatrixOQA a = make_algebra(rho, rho_inv, g, Matrix::identity(rho.size()), "standard from twist");
  AxiomReport report = check_all(a);
  return {std::move(a), std::move(report)};
}

MatrixOQA standardize(const MatrixOQA& a) {
  const AxiomReport r = check_all(a);
  if (!r.all_pass()) throw AlgebraError("standardize: input fails the axioms\n" + r.to_text());
  return make_algebra(a.rho, a.rho_inv, a.m_up * a.m_down, Matrix::identity(a.rank), a.provenance + ", standardized");
}

json poly_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    json rec;
    rec["exp"] = t.exp;
    if (t.coef.is_small()) rec["coef"] = t.coef.small_value();
    else rec["coef"] = t.coef.to_string();
    arr.push_back(std::move(rec));
  }
  return arr;
}

LaurentPoly poly_from_json(const json& j) {
  if (j.is_number_integer()) return LaurentPoly(j.get<std::int64_t>());
  if (!j.is_array()) throw AlgebraError("polynomial must be an integer or a list of {exp, coef}");
  std::vector<Term> terms;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("exp") || !rec.contains("coef") || !rec["exp"].is_number_integer()) {
      throw AlgebraError("polynomial term must be {\"exp\": int, \"coef\": int}");
    }
    BigInt c;
    const auto& cj = rec["coef"];
    if (cj.is_number_integer()) c = BigInt(cj.get<std::int64_t>());
    else if (cj.is_string()) {
      try {
        c = BigInt(cj.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw AlgebraError(e.what());
      }
    } else {
      throw AlgebraError("coefficient must be an integer or a decimal string");
    }
    terms.push_back(Term{rec["exp"].get<std::int64_t>(), std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json algebra_to_json(const MatrixOQA& a) {
  const int n = a.rank;
  auto tensor_json = [n](const Tensor4& t) {
    json x = json::array();
    for (int i = 0; i < n; ++i) {
      json y = json::array();
      for (int j = 0; j < n; ++j) {
        json z = json::array();
        for (int k = 0; k < n; ++k) {
          json w = json::array();
          for (int l = 0; l < n; ++l) w.push_back(poly_to_json(t(i, j, k, l)));
          z.push_back(std::move(w));
        }
        y.push_back(std::move(z));
      }
      x.push_back(std::move(y));
    }
    return x;
  };
  auto matrix_json = [n](const Matrix& m) {
    json x = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(poly_to_json(m(i, j)));
      x.push_back(std::move(row));
    }
    return x;
  };
  json out;
  out["rank"] = n;
  out["rho"] = tensor_json(a.rho);
  out["rho_inv"] = tensor_json(a.rho_inv);
  out["m_up"] = matrix_json(a.m_up);
  out["m_down"] = matrix_json(a.m_down);
  return out;
}

namespace {

const json& sized(const json& j, int n, const std::string& what) {
  if (!j.is_array()) throw AlgebraError(what + " must be an array");
  if (static_cast<int>(j.size()) != n) {
    throw AlgebraError("rank mismatch: " + what + " has " + std::to_string(j.size()) + " entries, rank is " +
                       std::to_string(n));
  }
  return j;
}

Tensor4 tensor_from_json(const json& j, int n, const std::string& what) {
  Tensor4 t(n);
  sized(j, n, what);
  for (int a = 0; a < n; ++a) {
    sized(j[a], n, what);
    for (int b = 0; b < n; ++b) {
      sized(j[a][b], n, what);
      for (int c = 0; c < n; ++c) {
        sized(j[a][b][c], n, what);
        for (int d = 0; d < n; ++d) t(a, b, c, d) = poly_from_json(j[a][b][c][d]);
      }
    }
  }
  return t;
}

Matrix matrix_from_json(const json& j, int n, const std::string& what) {
  Matrix m(n);
  sized(j, n, what);
  for (int a = 0; a < n; ++a) {
    sized(j[a], n, what + " row");
    for (int b = 0; b < n; ++b) m(a, b) = poly_from_json(j[a][b]);
  }
  return m;
}

}  // namespace

MatrixOQA algebra_from_json(const json& j, const std::string& provenance) {
  if (!j.is_object()) throw AlgebraError("algebra file must hold a JSON object");
  for (const char* key : {"rank", "rho", "rho_inv", "m_up", "m_down"}) {
    if (!j.contains(key)) throw AlgebraError(std::string("missing field '") + key + "'");
  }
  if (!j["rank"].is_number_integer() || j["rank"].get<int>() < 1) throw AlgebraError("rank must be a positive integer");
  const int n = j["rank"].get<int>();
  return make_algebra(tensor_from_json(j["rho"], n, "rho"), tensor_from_json(j["rho_inv"], n, "rho_inv"),
                      matrix_from_json(j["m_up"], n, "m_up"), matrix_from_json(j["m_down"], n, "m_down"),
                      provenance);
}

LoadedAlgebra load_algebra_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw AlgebraError("'" + path + "' is not valid JSON: " + e.what());
  }
  MatrixOQA a = algebra_from_json(j, "file " + path);
  AxiomReport r = check_all(a);
  if (strict && !r.all_pass()) throw AlgebraError("'" + path + "' fails the axioms\n" + r.to_text());
  return {std::move(a), std::move(r)};
}

}  // namespace qlink
