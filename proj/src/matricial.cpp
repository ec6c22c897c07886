#include "gz/matricial.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "gz/error.hpp"
#include "gz/matpoly.hpp"
#include "gz/random.hpp"

namespace gz {

namespace {

Matrix embed(const Matrix& h, int size) {
  Matrix out = Matrix::Identity(size, size);
  out.topLeftCorner(h.rows(), h.cols()) = h;
  return out;
}

double mat_scale(std::initializer_list<const Matrix*> ms) {
  double s = 1.0;
  for (const Matrix* m : ms) s = std::max(s, m->norm());
  return s;
}

// Structural entries of a generalised companion matrix. In tangent mode the
// unit subdiagonal is expected to vanish as well.
double structural_residual(const Matrix& b, int m, bool tangent) {
  const int k = static_cast<int>(b.rows());
  if (k == m) return 0.0;
  double worst = 0.0;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k - 1; ++c) {
      if (r < m && c < m) continue;        // X block
      if (r == m && c < m) continue;       // a
      double expected = 0.0;
      if (!tangent && r > m && c == r - 1) expected = 1.0;
      worst = std::max(worst, std::abs(b(r, c) - expected));
    }
  return worst;
}

bool shape_ok(const MatricialData& f, std::vector<ValidationIssue>& issues) {
  const int n = f.k.n();
  bool ok = true;
  auto bad = [&](int i, const std::string& what) {
    issues.push_back({Violation::Shape, i, 0.0, what});
    ok = false;
  };
  if (static_cast<int>(f.B_minus.size()) != n || static_cast<int>(f.B_plus.size()) != n ||
      static_cast<int>(f.g.size()) != n) {
    bad(0, "expected " + std::to_string(n) + " entries for B^-, B^+ and g");
    return false;
  }
  for (int i = 1; i <= n; ++i) {
    const int ki = f.k.at(i);
    for (const Matrix* m : {&f.B_minus[static_cast<std::size_t>(i - 1)], &f.B_plus[static_cast<std::size_t>(i - 1)],
                            &f.g[static_cast<std::size_t>(i - 1)]})
      if (m->rows() != ki || m->cols() != ki) bad(i, "matrix is not " + std::to_string(ki) + " x " + std::to_string(ki));
  }
  for (int i = 1; i < n; ++i) {
    const bool needs = f.k.at(i) == f.k.at(i + 1) && f.k.at(i) >= 1;
    const UWPair* p = f.uw_for(i);
    if (needs && !p) bad(i, "missing (u, w) for equal adjacent degrees");
    if (!needs && p) bad(i, "(u, w) given for unequal adjacent degrees");
    if (p && (p->u.size() != f.k.at(i) || p->w.size() != f.k.at(i))) bad(i, "(u, w) have wrong length");
  }
  for (const UWPair& p : f.uw)
    if (p.i < 1 || p.i >= n) bad(p.i, "(u, w) index out of range");
  return ok;
}

}  // namespace

int MultiDegree::total() const { return std::accumulate(k.begin(), k.end(), 0); }

void MultiDegree::check() const {
  if (k.empty()) throw_domain("multi-degree must have n >= 1 entries");
  for (int v : k)
    if (v < 0) throw_domain("multi-degree entries must be nonnegative");
}

Matrix generalized_companion(const CompanionBlocks& blocks) {
  const auto m = blocks.X.rows();
  const auto len = blocks.c.size();
  if (len == 0) {
    if (blocks.a.size() != 0 || blocks.b.size() != 0) throw_domain("generalized_companion: a, b need k > m");
    return blocks.X;
  }
  if (blocks.a.size() != m || blocks.b.size() != m) throw_domain("generalized_companion: a, b must have length m");
  const auto k = m + len;
  Matrix out = Matrix::Zero(k, k);
  out.topLeftCorner(m, m) = blocks.X;
  out.block(0, k - 1, m, 1) = blocks.b;
  out.block(m, 0, 1, m) = blocks.a.transpose();
  out.block(m, k - 1, len, 1) = blocks.c;
  for (auto r = m + 1; r < k; ++r) out(r, r - 1) = 1.0;
  return out;
}

CompanionBlocks split_companion(const Matrix& b, int m) {
  const int k = static_cast<int>(b.rows());
  if (m < 0 || m > k) throw_domain("split_companion: block size out of range");
  if (m == k) return {b, Vector(0), Vector(0), Vector(0)};
  return {b.topLeftCorner(m, m), b.block(m, 0, 1, m).transpose(), b.block(0, k - 1, m, 1),
          b.block(m, k - 1, k - m, 1)};
}

double companion_shape_defect(const Matrix& b, int m) { return structural_residual(b, m, false); }

Matrix shift_matrix(int k) {
  Matrix n = Matrix::Zero(k, k);
  for (int r = 1; r < k; ++r) n(r, r - 1) = 1.0;
  return n;
}

const UWPair* MatricialData::uw_for(int i) const {
  for (const auto& p : uw)
    if (p.i == i) return &p;
  return nullptr;
}

UWPair* MatricialData::uw_for(int i) {
  for (auto& p : uw)
    if (p.i == i) return &p;
  return nullptr;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::Shape: return "shape";
    case Violation::CompanionForm: return "companion-form";
    case Violation::BlockMatching: return "block-matching";
    case Violation::RankOneGap: return "rank-one-gap";
    case Violation::Conjugacy: return "conjugacy";
    case Violation::Invertibility: return "invertibility";
  }
  return "unknown";
}

std::vector<ValidationIssue> md_check(const MatricialData& f, double tol) {
  f.k.check();
  std::vector<ValidationIssue> issues;
  if (!shape_ok(f, issues)) return issues;
  const int n = f.k.n();
  auto idx = [](int i) { return static_cast<std::size_t>(i - 1); };

  for (int i = 1; i <= n; ++i) {
    const Matrix& bm = f.B_minus[idx(i)];
    const Matrix& bp = f.B_plus[idx(i)];
    const double dm = structural_residual(bm, std::min(f.k.at(i - 1), f.k.at(i)), false);
    if (dm > tol * mat_scale({&bm}))
      issues.push_back({Violation::CompanionForm, i, dm, "B^- not of generalised companion form"});
    const double dp = structural_residual(bp, std::min(f.k.at(i + 1), f.k.at(i)), false);
    if (dp > tol * mat_scale({&bp}))
      issues.push_back({Violation::CompanionForm, i, dp, "B^+ not of generalised companion form"});
  }

  for (int i = 1; i < n; ++i) {
    const int ki = f.k.at(i);
    const int kj = f.k.at(i + 1);
    const Matrix& bp = f.B_plus[idx(i)];
    const Matrix& bm = f.B_minus[idx(i + 1)];
    if (ki > kj) {
      const double d = (bp.topLeftCorner(kj, kj) - bm).norm();
      if (d > tol * mat_scale({&bp, &bm}))
        issues.push_back({Violation::BlockMatching, i, d, "X-block of B_i^+ differs from B_{i+1}^-"});
    } else if (ki < kj) {
      const double d = (bm.topLeftCorner(ki, ki) - bp).norm();
      if (d > tol * mat_scale({&bp, &bm}))
        issues.push_back({Violation::BlockMatching, i, d, "X-block of B_{i+1}^- differs from B_i^+"});
    } else if (ki >= 1) {
      const UWPair& p = *f.uw_for(i);
      const double d = (bp - bm - p.u * p.w.transpose()).norm();
      if (d > tol * mat_scale({&bp, &bm}))
        issues.push_back({Violation::RankOneGap, i, d, "B_i^+ - B_{i+1}^- differs from u_i w_i^T"});
    }
  }

  for (int i = 1; i <= n; ++i) {
    const int ki = f.k.at(i);
    if (ki == 0) continue;
    const Matrix& g = f.g[idx(i)];
    const Matrix& bm = f.B_minus[idx(i)];
    const Matrix& bp = f.B_plus[idx(i)];
    const double gs = std::max(1.0, g.norm());
    const double det = std::abs(g.determinant());
    if (!(det > 1e-12 * std::pow(gs, ki))) {
      issues.push_back({Violation::Invertibility, i, det, "g_i is not invertible"});
      continue;
    }
    const Matrix conj = g * bp * g.partialPivLu().inverse();
    const double d = (conj - bm).norm();
    if (d > tol * mat_scale({&bp, &bm}))
      issues.push_back({Violation::Conjugacy, i, d, "g_i B_i^+ g_i^{-1} differs from B_i^-"});
  }
  return issues;
}

const MatricialData& md_validate(const MatricialData& f, double tol) {
  const auto issues = md_check(f, tol);
  if (!issues.empty()) {
    std::ostringstream os;
    os << "invalid matricial data:";
    for (const auto& is : issues) os << " [" << to_string(is.kind) << " at i=" << is.i << ": " << is.detail << "]";
    throw ValidationError(os.str());
  }
  return f;
}

MatricialData gk_act(const MatricialData& f, const std::vector<Matrix>& h) {
  const int n = f.k.n();
  if (static_cast<int>(h.size()) != n - 1) throw_domain("gk_act: need one h_i per i = 1..n-1");
  MatricialData out = f;
  for (int i = 1; i < n; ++i) {
    const Matrix& hi = h[static_cast<std::size_t>(i - 1)];
    const int mi = f.k.link(i);
    if (hi.rows() != mi || hi.cols() != mi) throw_domain("gk_act: h_" + std::to_string(i) + " has wrong size");
    if (mi == 0) continue;
    Eigen::FullPivLU<Matrix> lu(hi);
    if (!lu.isInvertible()) throw_domain("gk_act: h_" + std::to_string(i) + " is not invertible");
    const Matrix hi_inv = lu.inverse();
    const int ki = f.k.at(i);
    const int kj = f.k.at(i + 1);
    const Matrix left = embed(hi, ki);
    const Matrix left_inv = embed(hi_inv, ki);
    const Matrix right = embed(hi, kj);
    const Matrix right_inv = embed(hi_inv, kj);
    auto& bp = out.B_plus[static_cast<std::size_t>(i - 1)];
    auto& bm = out.B_minus[static_cast<std::size_t>(i)];
    bp = left * bp * left_inv;
    bm = right * bm * right_inv;
    out.g[static_cast<std::size_t>(i - 1)] = out.g[static_cast<std::size_t>(i - 1)] * left_inv;
    out.g[static_cast<std::size_t>(i)] = right * out.g[static_cast<std::size_t>(i)];
    if (UWPair* p = out.uw_for(i)) {
      p->u = hi * p->u;
      p->w = hi_inv.transpose() * p->w;
    }
  }
  return out;
}

MatricialData ak_act(const MatricialData& f, const std::vector<ComplexList>& lambda) {
  const int n = f.k.n();
  if (static_cast<int>(lambda.size()) != n) throw_domain("ak_act: need one coefficient list per i = 1..n");
  MatricialData out = f;
  for (int i = 1; i <= n; ++i) {
    const ComplexList& li = lambda[static_cast<std::size_t>(i - 1)];
    const int ki = f.k.at(i);
    if (static_cast<int>(li.size()) > ki) throw_domain("ak_act: deg p_" + std::to_string(i) + " exceeds k_i");
    if (ki == 0) continue;
    // p'(B) = sum_j j lambda_j B^{j-1}
    const Matrix& bm = f.B_minus[static_cast<std::size_t>(i - 1)];
    Matrix deriv = Matrix::Zero(ki, ki);
    Matrix power = Matrix::Identity(ki, ki);
    for (std::size_t j = 0; j < li.size(); ++j) {
      deriv += static_cast<double>(j + 1) * li[j] * power;
      power = power * bm;
    }
    auto& g = out.g[static_cast<std::size_t>(i - 1)];
    g = matexp(deriv) * g;
  }
  return out;
}

std::vector<Polynomial> polar(const MatricialData& f) {
  std::vector<Polynomial> out;
  out.reserve(f.B_minus.size());
  for (const Matrix& bm : f.B_minus) out.push_back(charpoly(bm));
  return out;
}

double tangent_constraint_defect(const MatricialData& f, const MatricialTangent& t) {
  const int n = f.k.n();
  if (t.k.k != f.k.k) throw_domain("tangent has a different multi-degree");
  std::vector<ValidationIssue> shape_issues;
  if (!shape_ok(t, shape_issues)) throw_domain("tangent has the wrong shape");
  auto idx = [](int i) { return static_cast<std::size_t>(i - 1); };
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    worst = std::max(worst, structural_residual(t.B_minus[idx(i)], std::min(f.k.at(i - 1), f.k.at(i)), true));
    worst = std::max(worst, structural_residual(t.B_plus[idx(i)], std::min(f.k.at(i + 1), f.k.at(i)), true));
  }
  for (int i = 1; i < n; ++i) {
    const int ki = f.k.at(i);
    const int kj = f.k.at(i + 1);
    const Matrix& dbp = t.B_plus[idx(i)];
    const Matrix& dbm = t.B_minus[idx(i + 1)];
    if (ki > kj) {
      worst = std::max(worst, (dbp.topLeftCorner(kj, kj) - dbm).norm());
    } else if (ki < kj) {
      worst = std::max(worst, (dbm.topLeftCorner(ki, ki) - dbp).norm());
    } else if (ki >= 1) {
      const UWPair& p = *f.uw_for(i);
      const UWPair& dp = *t.uw_for(i);
      worst = std::max(worst, (dbp - dbm - dp.u * p.w.transpose() - p.u * dp.w.transpose()).norm());
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (f.k.at(i) == 0) continue;
    const Matrix& g = f.g[idx(i)];
    const Matrix g_inv = g.partialPivLu().inverse();
    const Matrix& bp = f.B_plus[idx(i)];
    const Matrix& dg = t.g[idx(i)];
    const Matrix d_conj = dg * bp * g_inv + g * t.B_plus[idx(i)] * g_inv - g * bp * g_inv * dg * g_inv;
    worst = std::max(worst, (d_conj - t.B_minus[idx(i)]).norm());
  }
  return worst;
}

Complex md_symplectic(const MatricialData& f, const MatricialTangent& t1, const MatricialTangent& t2, double tol) {
  const double d1 = tangent_constraint_defect(f, t1);
  const double d2 = tangent_constraint_defect(f, t2);
  double scale = 1.0;
  for (const Matrix& m : f.B_minus) scale = std::max(scale, m.norm());
  for (const Matrix& m : f.g) scale = std::max(scale, m.norm());
  auto tangent_norm = [](const MatricialTangent& t) {
    double s = 1.0;
    for (const auto* v : {&t.B_minus, &t.B_plus, &t.g})
      for (const Matrix& m : *v) s = std::max(s, m.norm());
    return s;
  };
  if (d1 > tol * scale * tangent_norm(t1) || d2 > tol * scale * tangent_norm(t2))
    throw ValidationError("md_symplectic: tangent violates the linearised defining conditions");

  Complex omega = 0.0;
  for (int i = 1; i <= f.k.n(); ++i) {
    if (f.k.at(i) == 0) continue;
    const auto s = static_cast<std::size_t>(i - 1);
    const Matrix g_inv = f.g[s].partialPivLu().inverse();
    const Matrix rho1 = t1.g[s] * g_inv;
    const Matrix rho2 = t2.g[s] * g_inv;
    omega += (rho1 * t2.B_minus[s] - rho2 * t1.B_minus[s]).trace();
    omega -= (f.B_minus[s] * commutator(rho1, rho2)).trace();
  }
  for (const UWPair& p : f.uw) {
    const UWPair& a = *t1.uw_for(p.i);
    const UWPair& b = *t2.uw_for(p.i);
    omega -= (a.w.transpose() * b.u)(0, 0) - (b.w.transpose() * a.u)(0, 0);
  }
  return omega;
}

MatricialData rat11_from_local_model(Complex y, Complex p, Complex u, Complex w) {
  if (p == Complex(0.0)) throw_domain("rat11_from_local_model: p must be nonzero");
  const Complex z1 = 0.5 * (y - u * w);
  const Complex z2 = 0.5 * (y + u * w);
  auto scalar = [](Complex v) { return Matrix::Constant(1, 1, v); };
  MatricialData f;
  f.k = {{1, 1}};
  f.B_minus = {scalar(z1), scalar(z2)};
  f.B_plus = {scalar(z1), scalar(z2)};
  f.g = {scalar(p), scalar(1.0)};
  f.uw = {{1, Vector::Constant(1, -u), Vector::Constant(1, w)}};
  return f;
}

CompanionBlocks complete_companion(const Matrix& x, const Vector& b, const Polynomial& target) {
  const int m = static_cast<int>(x.rows());
  const int k = target.degree();
  if (!target.is_monic()) throw_domain("complete_companion: target must be monic");
  if (k <= m) throw_domain("complete_companion: target degree must exceed the X-block size");
  const int len = k - m;
  auto build = [&](const Vector& unknowns) {
    return generalized_companion({x, unknowns.head(m), b, unknowns.tail(len)});
  };
  auto lower = [&](const Matrix& bm) {
    const Polynomial p = charpoly(bm);
    Vector v(k);
    for (int j = 0; j < k; ++j) v(j) = p[j];
    return v;
  };
  // The lower coefficients of det(z - B) are affine in (a, c).
  const Vector base = lower(build(Vector::Zero(k)));
  Matrix jac(k, k);
  for (int j = 0; j < k; ++j) jac.col(j) = lower(build(Vector::Unit(k, j))) - base;
  Vector rhs(k);
  for (int j = 0; j < k; ++j) rhs(j) = target[j];
  rhs -= base;
  Eigen::FullPivLU<Matrix> lu(jac);
  if (!lu.isInvertible()) throw NumericalError("complete_companion: b is not cyclic for X");
  const Vector sol = lu.solve(rhs);
  const Polynomial got = charpoly(build(sol));
  if (got.max_coeff_distance(target) > 1e-8 * (1.0 + sol.norm()))
    throw NumericalError("complete_companion: characteristic polynomial not matched");
  return {x, sol.head(m), b, sol.tail(len)};
}

Matrix regular_conjugator(const Matrix& from, const Matrix& to) {
  const auto k = from.rows();
  if (from.cols() != k || to.rows() != k || to.cols() != k) throw_domain("regular_conjugator: size mismatch");
  if (k == 0) return Matrix(0, 0);
  auto best_krylov = [k](const Matrix& m) {
    std::vector<Vector> candidates;
    for (Eigen::Index j = 0; j < k; ++j) candidates.push_back(Vector::Unit(k, j));
    candidates.push_back(Vector::Ones(k));
    Vector mixed(k);
    for (Eigen::Index j = 0; j < k; ++j) mixed(j) = std::polar(1.0 + 0.1 * static_cast<double>(j), 0.7 * static_cast<double>(j));
    candidates.push_back(mixed);
    Matrix best;
    double best_rcond = 0.0;
    for (const Vector& v : candidates) {
      const Matrix kr = krylov_matrix(m, v);
      Eigen::JacobiSVD<Matrix> svd(kr);
      const auto& sv = svd.singularValues();
      const double rc = sv(0) > 0.0 ? sv(k - 1) / sv(0) : 0.0;
      if (rc > best_rcond) {
        best_rcond = rc;
        best = kr;
      }
    }
    if (best_rcond < 1e-12) throw NumericalError("regular_conjugator: matrix has no usable cyclic vector");
    return best;
  };
  const Matrix k_from = best_krylov(from);
  const Matrix k_to = best_krylov(to);
  const Matrix g = k_to * k_from.partialPivLu().inverse();
  const double scale = std::max({1.0, from.norm(), to.norm()}) * std::max(1.0, g.norm());
  if ((g * from - to * g).norm() > 1e-7 * scale) throw NumericalError("regular_conjugator: matrices are not conjugate");
  return g;
}

MatricialData random_matricial(const MultiDegree& k, std::mt19937_64& rng) {
  k.check();
  const int n = k.n();
  MatricialData f;
  f.k = k;
  f.B_minus.resize(static_cast<std::size_t>(n));
  f.B_plus.resize(static_cast<std::size_t>(n));
  f.g.resize(static_cast<std::size_t>(n));
  auto idx = [](int i) { return static_cast<std::size_t>(i - 1); };
  auto random_conjugate = [&](const Matrix& m) {
    const auto s = m.rows();
    const Matrix c = Matrix::Identity(s, s) * 2.0 + random_matrix(s, s, rng);
    return Matrix(c * m * c.partialPivLu().inverse());
  };

  // B_1^- is an ordinary companion matrix.
  const int k1 = k.at(1);
  f.B_minus[0] = generalized_companion({Matrix(0, 0), Vector(0), Vector(0), random_vector(k1, rng)});

  for (int i = 1; i <= n; ++i) {
    const int ki = k.at(i);
    const int kj = k.at(i + 1);
    const Matrix& bm = f.B_minus[idx(i)];
    const Polynomial qi = charpoly(bm);
    if (i == n) {
      f.B_plus[idx(i)] = ki == 0 ? Matrix(0, 0) : companion_of(qi);
    } else if (ki > kj) {
      const Matrix x = random_matrix(kj, kj, rng);
      const Vector b = random_vector(kj, rng);
      f.B_plus[idx(i)] = generalized_companion(complete_companion(x, b, qi));
      f.B_minus[idx(i + 1)] = x;
    } else if (ki < kj) {
      f.B_plus[idx(i)] = random_conjugate(bm);
      f.B_minus[idx(i + 1)] = generalized_companion(
          {f.B_plus[idx(i)], random_vector(ki, rng), random_vector(ki, rng), random_vector(kj - ki, rng)});
    } else {
      f.B_plus[idx(i)] = random_conjugate(bm);
      if (ki >= 1) {
        UWPair p{i, random_vector(ki, rng), random_vector(ki, rng)};
        f.B_minus[idx(i + 1)] = f.B_plus[idx(i)] - p.u * p.w.transpose();
        f.uw.push_back(std::move(p));
      } else {
        f.B_minus[idx(i + 1)] = Matrix(0, 0);
      }
    }
  }
  for (int i = 1; i <= n; ++i) f.g[idx(i)] = regular_conjugator(f.B_plus[idx(i)], f.B_minus[idx(i)]);
  return f;
}

}  // namespace gz
