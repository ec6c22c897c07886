#include "suite.hpp"

#include <random>

#include "gz/gzcore.hpp"
#include "gz/kw_chart.hpp"
#include "gz/lax.hpp"
#include "gz/matpoly.hpp"
#include "gz/random.hpp"

namespace gz::suite {

namespace {

verify::MatrixFunction trace_power(GZIndex idx) {
  return [idx](const Matrix& b) {
    const Matrix minor = leading_minor(b, idx.m);
    Matrix p = Matrix::Identity(idx.m, idx.m);
    for (int j = 0; j < idx.i; ++j) p = p * minor;
    return p.trace();
  };
}

GZIndex random_index(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, gz_count(n) - 1);
  return gz_unflat(pick(rng));
}

}  // namespace

verify::VerificationReport bracket_commutativity(std::uint64_t seed, int samples, int n) {
  std::mt19937_64 rng(seed);
  verify::VerificationReport r{"bracket-commutativity-n" + std::to_string(n), 0, 0.0, 1e-6, false};
  const auto indices = gz_indices(n);
  for (int s = 0; s < samples; ++s) {
    const Matrix b = random_matrix(n, n, rng);
    const double nb = std::max(1.0, b.norm());
    std::vector<Matrix> grads;
    for (GZIndex idx : indices) grads.push_back(verify::matrix_gradient(trace_power(idx), b));
    double worst = 0.0;
    for (std::size_t p = 0; p < indices.size(); ++p)
      for (std::size_t q = p + 1; q < indices.size(); ++q) {
        const double scale = std::pow(nb, indices[p].i + indices[q].i - 1) * indices[p].i * indices[q].i;
        worst = std::max(worst, std::abs(verify::lie_poisson_bracket_from_gradients(grads[p], grads[q], b)) / scale);
      }
    r.record(worst);
  }
  return r.finish();
}

verify::VerificationReport flow_commutativity(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 5);
  verify::VerificationReport r{"flow-commutativity", 0, 0.0, 1e-9, false};
  for (int s = 0; s < samples; ++s) {
    const int n = size(rng);
    const Matrix b = random_matrix(n, n, rng);
    const GZIndex i1 = random_index(n, rng);
    const GZIndex i2 = random_index(n, rng);
    const Complex z = random_unit_disk(rng);
    const Complex w = random_unit_disk(rng);
    r.record(verify::commute_defect([&](const Matrix& x) { return gz_flow_single(x, i1, z); },
                                    [&](const Matrix& x) { return gz_flow_single(x, i2, w); }, b));
  }
  return r.finish();
}

verify::VerificationReport flow_conservation(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 5);
  verify::VerificationReport r{"flow-conservation", 0, 0.0, 1e-9, false};
  for (int s = 0; s < samples; ++s) {
    const int n = size(rng);
    const Matrix b = random_matrix(n, n, rng);
    GZGroupElement lambda = GZGroupElement::zero(n);
    for (auto& p : lambda.params) p = random_unit_disk(rng);
    r.record(verify::conservation_defect([&](const Matrix& x) { return gz_flow(x, lambda); },
                                         [](const Matrix& x) { return gz_map(x).values; }, b));
  }
  return r.finish();
}

verify::VerificationReport kw_relations(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 4);
  verify::VerificationReport r{"kw-relations", 0, 0.0, 1e-6, false};
  for (int s = 0; s < samples; ++s) {
    MultiDegree k;
    const int n = size(rng);
    for (int i = 1; i <= n; ++i) k.k.push_back(i);
    const OpenStratumChart c = random_chart(k, rng);
    const int len = c.size();
    double worst = 0.0;
    for (int l = 0; l < len; ++l)
      for (int q = 0; q < len; ++q) {
        const Complex sq = 1.0 / c.rho[static_cast<std::size_t>(q)];
        const Complex expect = l == q ? sq : Complex(0.0);
        worst = std::max(worst, std::abs(chart_bracket(c, chart_r(len, l), chart_s(len, q)) - expect) / std::abs(sq));
        worst = std::max(worst, std::abs(chart_bracket(c, chart_r(len, l), chart_r(len, q))));
        worst = std::max(worst, std::abs(chart_bracket(c, chart_s(len, l), chart_s(len, q))) / std::abs(sq));
      }
    r.record(worst);
  }
  return r.finish();
}

verify::VerificationReport kw_fd_cross_check(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 4);
  verify::VerificationReport r{"kw-fd-cross-check", 0, 0.0, 1e-7, false};
  for (int s = 0; s < samples; ++s) {
    MultiDegree k;
    const int n = size(rng);
    for (int i = 1; i <= n; ++i) k.k.push_back(i);
    const OpenStratumChart c = random_chart(k, rng);
    const int len = c.size();
    std::vector<ChartFunction> fs;
    for (int l = 0; l < len; ++l) {
      fs.push_back(chart_r(len, l));
      fs.push_back(chart_s(len, l));
    }
    double worst = 0.0;
    for (const auto& f : fs)
      for (const auto& g : fs) {
        const Complex exact = chart_bracket(c, f, g);
        const Complex fd = chart_bracket_fd(c, f, g);
        worst = std::max(worst, std::abs(exact - fd) / (1.0 + std::abs(exact)));
      }
    r.record(worst);
  }
  return r.finish();
}

verify::VerificationReport lax_closed_form(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 4);
  verify::VerificationReport r{"lax-closed-form", 0, 0.0, 1e-8, false};
  for (int s = 0; s < samples; ++s) {
    const int n = size(rng);
    const Matrix alpha = clamp_norm(random_matrix(n, n, rng), 1.0);
    const Matrix beta = clamp_norm(random_matrix(n, n, rng), 1.0);
    const LaxPath path = lax_integrate([&](double) { return alpha; }, beta, 0.0, 1.0, 200, false);
    double worst = 0.0;
    for (std::size_t j = 0; j < path.grid.size(); ++j) {
      const double t = path.grid[j];
      const Matrix exact = matexp(-t * alpha) * beta * matexp(t * alpha);
      worst = std::max(worst, (path.beta[j] - exact).norm());
    }
    r.record(worst);
  }
  return r.finish();
}

verify::VerificationReport kernel_round_trips(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, 8);
  verify::VerificationReport r{"kernel-round-trips", 0, 0.0, 1e-10, false};
  for (int s = 0; s < samples; ++s) {
    const int n = size(rng);
    ComplexList coeffs;
    for (int j = 0; j < n; ++j) coeffs.push_back(random_unit_disk(rng));
    coeffs.push_back(1.0);
    const Polynomial p(coeffs);
    double worst = charpoly(companion_of(p)).max_coeff_distance(p);
    const Matrix a = clamp_norm(random_matrix(n, n, rng), 2.0);
    worst = std::max(worst, (matexp(a) * matexp(-a) - Matrix::Identity(n, n)).norm());
    const ComplexList sums = charpoly_to_power_sums(p);
    worst = std::max(worst, power_sums_to_charpoly(sums).max_coeff_distance(p) / (1.0 + std::abs(sums.back())));
    r.record(worst);
  }
  return r.finish();
}

std::vector<verify::VerificationReport> run_all(std::uint64_t seed, int samples) {
  return {bracket_commutativity(seed, samples, 3), bracket_commutativity(seed + 1, samples, 4),
          flow_commutativity(seed + 2, samples),   flow_conservation(seed + 3, samples),
          kw_relations(seed + 4, samples),         kw_fd_cross_check(seed + 5, samples),
          lax_closed_form(seed + 6, samples),      kernel_round_trips(seed + 7, samples)};
}

}  // namespace gz::suite
