#include "gz/sigma.hpp"

#include <cmath>
#include <numbers>

#include "gz/error.hpp"
#include "gz/matpoly.hpp"
#include "gz/random.hpp"

namespace gz {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

void require_positive_degrees(const MultiDegree& k, const char* what) {
  k.check();
  for (int v : k.k)
    if (v < 1) throw_domain(std::string(what) + ": every k_i must be >= 1 (factor the problem at zero degrees)");
}

Matrix embed(const Matrix& h, Eigen::Index size) {
  Matrix out = Matrix::Zero(size, size);
  out.topLeftCorner(h.rows(), h.cols()) = h;
  return out;
}

bool is_nilpotent(const Matrix& b, double tol) {
  const Polynomial p = charpoly(b);
  const double s = std::max(1.0, b.norm());
  const int k = static_cast<int>(b.rows());
  for (int j = 0; j < k; ++j)
    if (std::abs(p[j]) > tol * std::pow(s, k - j)) return false;
  return true;
}

bool is_shift(const Matrix& b, double tol) {
  return (b - shift_matrix(static_cast<int>(b.rows()))).norm() <= tol * std::max(1.0, b.norm());
}

// The matrix normalised to the shift at boundary i, and the one carrying (a, b).
const Matrix& normalised_at(const MatricialData& f, int i) {
  return f.k.at(i) > f.k.at(i + 1) ? f.B_minus[at(i + 1)] : f.B_plus[at(i)];
}

const Matrix& carrier_at(const MatricialData& f, int i) {
  return f.k.at(i) > f.k.at(i + 1) ? f.B_plus[at(i)] : f.B_minus[at(i + 1)];
}

void fill_conjugators(MatricialData& f) {
  f.g.resize(f.B_minus.size());
  for (int i = 1; i <= f.k.n(); ++i) f.g[at(i)] = regular_conjugator(f.B_plus[at(i)], f.B_minus[at(i)]);
}

}  // namespace

bool SigmaMap::has_zero() const {
  for (int v : values)
    if (v == 0) return true;
  return false;
}

bool is_nilpotent_fiber(const MatricialData& f, double tol) {
  for (const auto* v : {&f.B_minus, &f.B_plus})
    for (const Matrix& b : *v)
      if (!is_nilpotent(b, tol)) return false;
  return true;
}

bool in_canonical_position(const MatricialData& f, double tol) {
  for (int v : f.k.k)
    if (v < 1) return false;
  if (!is_nilpotent_fiber(f, tol)) return false;
  for (int i = 1; i < f.k.n(); ++i)
    if (!is_shift(normalised_at(f, i), tol)) return false;
  return true;
}

MatricialData to_canonical(const MatricialData& f) {
  require_positive_degrees(f.k, "to_canonical");
  if (!is_nilpotent_fiber(f)) throw_domain("to_canonical: data is not in the nilpotent fiber");
  std::vector<Matrix> h;
  for (int i = 1; i < f.k.n(); ++i) {
    const Matrix& b = normalised_at(f, i);
    try {
      h.push_back(regular_conjugator(b, shift_matrix(static_cast<int>(b.rows()))));
    } catch (const NumericalError&) {
      throw_domain("to_canonical: B at boundary " + std::to_string(i) + " is not regular nilpotent");
    }
  }
  MatricialData out = gk_act(f, h);
  // Remove rounding noise on the normalised matrices.
  for (int i = 1; i < f.k.n(); ++i) {
    auto& b = f.k.at(i) > f.k.at(i + 1) ? out.B_minus[at(i + 1)] : out.B_plus[at(i)];
    b = shift_matrix(static_cast<int>(b.rows()));
  }
  return out;
}

SigmaMap sigma_of(const MatricialData& f, double tol) {
  require_positive_degrees(f.k, "sigma_of");
  if (!in_canonical_position(f)) throw_domain("sigma_of: data is not in canonical nilpotent position");
  SigmaMap out;
  for (int i = 1; i < f.k.n(); ++i) {
    Complex neg_value;
    Complex pos_value;
    double scale = 1.0;
    if (f.k.at(i) != f.k.at(i + 1)) {
      const Matrix& carrier = carrier_at(f, i);
      const int m = f.k.link(i);
      const CompanionBlocks blocks = split_companion(carrier, m);
      neg_value = blocks.a(m - 1);
      pos_value = blocks.b(0);
      scale = std::max(1.0, carrier.norm());
    } else {
      const UWPair& p = *f.uw_for(i);
      neg_value = p.w(p.w.size() - 1);
      pos_value = p.u(0);
      scale = std::max({1.0, p.u.norm(), p.w.norm()});
    }
    const double thr = tol * scale;
    const bool neg = std::abs(neg_value) > thr;
    const bool pos = std::abs(pos_value) > thr;
    for (double v : {std::abs(neg_value), std::abs(pos_value)})
      if (v > 1e-2 * thr && v < 1e2 * thr)
        out.warnings.push_back("boundary " + std::to_string(i) + ": value " + std::to_string(v) +
                               " is near the threshold " + std::to_string(thr));
    if (neg && pos)
      out.warnings.push_back("boundary " + std::to_string(i) + ": both deciding entries are nonzero");
    out.values.push_back(neg ? -1 : (pos ? 1 : 0));
  }
  return out;
}

MatricialData canonical_representative(const MultiDegree& k, const std::vector<int>& sigma) {
  require_positive_degrees(k, "canonical_representative");
  const int n = k.n();
  if (static_cast<int>(sigma.size()) != n - 1) throw_domain("canonical_representative: sigma must have n - 1 entries");
  MatricialData f;
  f.k = k;
  f.B_minus.resize(static_cast<std::size_t>(n));
  f.B_plus.resize(static_cast<std::size_t>(n));
  f.B_minus[0] = shift_matrix(k.at(1));
  f.B_plus[at(n)] = shift_matrix(k.at(n));
  for (int i = 1; i < n; ++i) {
    const int s = sigma[at(i)];
    if (s != 1 && s != -1) throw_domain("canonical_representative: sigma entries must be +1 or -1");
    const int ki = k.at(i);
    const int kj = k.at(i + 1);
    const int m = k.link(i);
    if (ki == kj) {
      f.B_plus[at(i)] = shift_matrix(ki);
      f.B_minus[at(i + 1)] = shift_matrix(ki);
      UWPair p{i, Vector::Zero(ki), Vector::Zero(ki)};
      if (s < 0)
        p.w(ki - 1) = 1.0;
      else
        p.u(0) = 1.0;
      f.uw.push_back(std::move(p));
      continue;
    }
    const int big = std::max(ki, kj);
    // a = e_m gives the shift itself; b = e_1 gives E.
    CompanionBlocks blocks{shift_matrix(m), Vector::Zero(m), Vector::Zero(m), Vector::Zero(big - m)};
    if (s < 0)
      blocks.a(m - 1) = 1.0;
    else
      blocks.b(0) = 1.0;
    const Matrix carrier = generalized_companion(blocks);
    if (ki > kj) {
      f.B_plus[at(i)] = carrier;
      f.B_minus[at(i + 1)] = shift_matrix(kj);
    } else {
      f.B_plus[at(i)] = shift_matrix(ki);
      f.B_minus[at(i + 1)] = carrier;
    }
  }
  fill_conjugators(f);
  return f;
}

std::vector<MatricialData> enumerate_sr(const MultiDegree& k) {
  require_positive_degrees(k, "enumerate_sr");
  const int bits = k.n() - 1;
  std::vector<MatricialData> out;
  for (long long mask = 0; mask < (1LL << bits); ++mask) {
    std::vector<int> sigma(static_cast<std::size_t>(bits));
    for (int j = 0; j < bits; ++j) sigma[static_cast<std::size_t>(j)] = (mask >> (bits - 1 - j)) & 1 ? 1 : -1;
    out.push_back(canonical_representative(k, sigma));
  }
  return out;
}

IsotropyResult isotropy_dimension(const MatricialData& f) {
  const int n = f.k.n();
  std::vector<int> mu_offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) mu_offset[at(i) + 1] = mu_offset[at(i)] + f.k.at(i);
  const int mu_count = mu_offset.back();
  std::vector<int> eta_offset(static_cast<std::size_t>(std::max(n, 1)), mu_count);
  for (int i = 1; i < n; ++i) eta_offset[at(i) + 1] = eta_offset[at(i)] + f.k.link(i) * f.k.link(i);
  const int unknowns = n > 1 ? eta_offset[at(n - 1)] + f.k.link(n - 1) * f.k.link(n - 1) : mu_count;

  auto eta = [&](const Vector& x, int i) -> Matrix {
    const int m = f.k.link(i);
    if (i < 1 || i >= n || m == 0) return Matrix(0, 0);
    Matrix e(m, m);
    for (int c = 0; c < m; ++c)
      for (int r = 0; r < m; ++r) e(r, c) = x(eta_offset[at(i)] + c * m + r);
    return e;
  };

  auto residual = [&](const Vector& x) {
    std::vector<Complex> out;
    auto push = [&out](const Matrix& m) {
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(m(r, c));
    };
    for (int i = 1; i < n; ++i) {
      if (f.k.link(i) == 0) continue;
      const Matrix e = eta(x, i);
      const Matrix& bp = f.B_plus[at(i)];
      const Matrix& bm = f.B_minus[at(i + 1)];
      push(commutator(embed(e, bp.rows()), bp));
      push(commutator(embed(e, bm.rows()), bm));
      if (const UWPair* p = f.uw_for(i)) {
        push(e * p->u);
        push(p->w.transpose() * e);
      }
    }
    for (int i = 1; i <= n; ++i) {
      const int ki = f.k.at(i);
      if (ki == 0) continue;
      const Matrix& bm = f.B_minus[at(i)];
      const Matrix& g = f.g[at(i)];
      Matrix poly = Matrix::Zero(ki, ki);
      Matrix power = Matrix::Identity(ki, ki);
      for (int j = 0; j < ki; ++j) {
        poly += x(mu_offset[at(i)] + j) * power;
        power = power * bm;
      }
      Matrix r = poly * g;
      if (i > 1 && f.k.link(i - 1) > 0) r -= embed(eta(x, i - 1), ki) * g;
      if (i < n && f.k.link(i) > 0) r += g * embed(eta(x, i), ki);
      push(r);
    }
    return out;
  };

  IsotropyResult res;
  res.unknowns = unknowns;
  if (unknowns == 0) return res;
  const std::size_t rows = residual(Vector::Zero(unknowns)).size();
  Matrix system(static_cast<Eigen::Index>(rows), unknowns);
  for (int j = 0; j < unknowns; ++j) {
    const auto col = residual(Vector::Unit(unknowns, j));
    for (std::size_t r = 0; r < rows; ++r) system(static_cast<Eigen::Index>(r), j) = col[r];
  }
  // Pad to a square-or-tall system so the full right singular basis is available.
  if (system.rows() < system.cols()) {
    Matrix padded = Matrix::Zero(system.cols(), system.cols());
    padded.topRows(system.rows()) = system;
    system = padded;
  }
  Eigen::JacobiSVD<Matrix> svd(system, Eigen::ComputeFullV);
  const int rank = numerical_rank(system);
  res.nullity = unknowns - rank;
  if (res.nullity > 0 && mu_count > 0) {
    const Matrix null_basis = svd.matrixV().rightCols(res.nullity);
    const Matrix mu_part = null_basis.topRows(mu_count);
    Eigen::JacobiSVD<Matrix> svd_mu(mu_part);
    for (Eigen::Index j = 0; j < svd_mu.singularValues().size(); ++j)
      if (svd_mu.singularValues()(j) > 1e-8) ++res.mu_dimension;
  }
  return res;
}

StrongRegularity md_strongly_regular(const MatricialData& f) {
  require_positive_degrees(f.k, "md_strongly_regular");
  const MatricialData canon = in_canonical_position(f) ? f : to_canonical(f);
  StrongRegularity out;
  out.sigma = sigma_of(canon);
  out.isotropy = isotropy_dimension(canon);
  out.strongly_regular = !out.sigma.has_zero();
  out.consistent = out.strongly_regular == (out.isotropy.mu_dimension == 0);
  return out;
}

double adjugate_pairing_defect(const Matrix& x, const Vector& left, const Vector& right) {
  const auto m = x.rows();
  if (left.size() != m || right.size() != m) throw_domain("adjugate_pairing_defect: size mismatch");
  if (m == 0) return 0.0;
  // left^T adj(z - X) right has degree <= m - 1: m samples determine it.
  const double radius = 1.0 + x.norm();
  Matrix vander(m, m);
  Vector values(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double t = std::cos(std::numbers::pi * (2.0 * static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(m)));
    const Complex z = radius * t;
    Complex power = 1.0;
    for (Eigen::Index p = 0; p < m; ++p) {
      vander(j, p) = power;
      power *= z;
    }
    const Matrix shifted = z * Matrix::Identity(m, m) - x;
    values(j) = (left.transpose() * adjugate(shifted) * right)(0, 0);
  }
  const Vector coeffs = vander.fullPivLu().solve(values);
  return coeffs.cwiseAbs().maxCoeff();
}

double pairing_identity_defect(const MatricialData& f) {
  if (!in_canonical_position(f)) throw_domain("pairing_identity_defect: data is not in canonical nilpotent position");
  double worst = 0.0;
  for (int i = 1; i < f.k.n(); ++i) {
    if (f.k.at(i) != f.k.at(i + 1)) {
      const CompanionBlocks blocks = split_companion(carrier_at(f, i), f.k.link(i));
      worst = std::max(worst, adjugate_pairing_defect(blocks.X, blocks.a, blocks.b));
    } else {
      const UWPair& p = *f.uw_for(i);
      worst = std::max(worst, adjugate_pairing_defect(f.B_plus[at(i)], p.w, p.u));
    }
  }
  return worst;
}

MatricialData random_canonical_nilpotent(const MultiDegree& k, std::mt19937_64& rng) {
  require_positive_degrees(k, "random_canonical_nilpotent");
  const int n = k.n();
  MatricialData f;
  f.k = k;
  f.B_minus.resize(static_cast<std::size_t>(n));
  f.B_plus.resize(static_cast<std::size_t>(n));
  f.B_minus[0] = shift_matrix(k.at(1));
  f.B_plus[at(n)] = shift_matrix(k.at(n));
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i < n; ++i) {
    const int ki = k.at(i);
    const int kj = k.at(i + 1);
    const int m = k.link(i);
    if (ki == kj) {
      UWPair p{i, Vector::Zero(ki), Vector::Zero(ki)};
      if (coin(rng))
        p.w = random_vector(ki, rng);
      else
        p.u = random_vector(ki, rng);
      f.B_plus[at(i)] = shift_matrix(ki);
      f.B_minus[at(i + 1)] = shift_matrix(ki) - p.u * p.w.transpose();
      f.uw.push_back(std::move(p));
      continue;
    }
    const int big = std::max(ki, kj);
    const Vector b = random_vector(m, rng);
    const Matrix carrier = generalized_companion(complete_companion(shift_matrix(m), b, Polynomial::monomial(big, 1.0)));
    if (ki > kj) {
      f.B_plus[at(i)] = carrier;
      f.B_minus[at(i + 1)] = shift_matrix(kj);
    } else {
      f.B_plus[at(i)] = shift_matrix(ki);
      f.B_minus[at(i + 1)] = carrier;
    }
  }
  fill_conjugators(f);
  std::vector<ComplexList> lambda;
  for (int i = 1; i <= n; ++i) {
    ComplexList l;
    for (int j = 0; j < k.at(i); ++j) l.push_back(random_unit_disk(rng));
    lambda.push_back(std::move(l));
  }
  return ak_act(f, lambda);
}

}  // namespace gz
