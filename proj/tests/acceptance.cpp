// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "gz/gzcore.hpp"
#include "gz/kw_chart.hpp"
#include "gz/lax.hpp"
#include "gz/matpoly.hpp"
#include "gz/matricial.hpp"
#include "gz/random.hpp"
#include "gz/sigma.hpp"
#include "gz/spaces.hpp"
#include "gz/verify.hpp"
#include "oracles.hpp"

using namespace gz;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

GZIndex random_index(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, gz_count(n) - 1);
  return gz_unflat(pick(rng));
}

GZGroupElement random_lambda(int n, std::mt19937_64& rng) {
  GZGroupElement g = GZGroupElement::zero(n);
  for (auto& p : g.params) p = random_unit_disk(rng);
  return g;
}

double coord_defect(const GZCoordinates& a, const GZCoordinates& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]) / (1.0 + std::abs(a.values[k])));
  return worst;
}

// 1. Gelfand-Zeitlin functions Poisson-commute.
Criterion poisson_commutativity() {
  Criterion c{1, "poisson-commutativity"};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int n : {3, 4}) {
    const auto indices = gz_indices(n);
    for (int s = 0; s < 50; ++s) {
      const Matrix b = random_matrix(n, n, rng);
      const double nb = std::max(1.0, b.norm());
      for (std::size_t p = 0; p < indices.size(); ++p)
        for (std::size_t q = p + 1; q < indices.size(); ++q) {
          const GZIndex ip = indices[p], iq = indices[q];
          auto f = [ip](const Matrix& x) { return oracle::power(x.topLeftCorner(ip.m, ip.m), ip.i).trace(); };
          auto g = [iq](const Matrix& x) { return oracle::power(x.topLeftCorner(iq.m, iq.m), iq.i).trace(); };
          const double scale = std::pow(nb, ip.i + iq.i - 1) * ip.i * iq.i;
          worst = std::max(worst, std::abs(verify::lie_poisson_bracket(f, g, b)) / scale);
        }
    }
  }
  const double elapsed = seconds_since(t0);
  c.check(worst <= 1e-6, "bracket " + fmt(worst));
  c.check(elapsed <= 10.0, "runtime " + fmt(elapsed) + " s");
  c.note("max scaled bracket " + fmt(worst) + ", " + fmt(elapsed) + " s");
  return c;
}

// 2. Flows commute and conserve the Gelfand-Zeitlin map.
Criterion flow_properties() {
  Criterion c{2, "flow-commutativity-conservation"};
  std::mt19937_64 rng(1002);
  std::uniform_int_distribution<int> size(1, 5);
  double commute = 0.0, conserve = 0.0, composite = 0.0;
  for (int s = 0; s < 50; ++s) {
    const int n = size(rng);
    const Matrix b = random_matrix(n, n, rng);
    const GZIndex i1 = random_index(n, rng), i2 = random_index(n, rng);
    const Complex z = random_unit_disk(rng), w = random_unit_disk(rng);
    auto f = [&](const Matrix& x) { return gz_flow_single(x, i1, z); };
    auto g = [&](const Matrix& x) { return gz_flow_single(x, i2, w); };
    auto moments = [](const Matrix& x) { return gz_map(x).values; };
    commute = std::max(commute, verify::commute_defect(f, g, b));
    conserve = std::max(conserve, verify::conservation_defect(f, moments, b));
    conserve = std::max(conserve, verify::conservation_defect(g, moments, b));
    const GZGroupElement lambda = random_lambda(n, rng);
    composite = std::max(composite, verify::conservation_defect([&](const Matrix& x) { return gz_flow(x, lambda); }, moments, b));
  }
  c.check(commute <= 1e-9, "commute " + fmt(commute));
  c.check(conserve <= 1e-9, "conservation " + fmt(conserve));
  c.check(composite <= 1e-9, "conservation under all flows " + fmt(composite));
  c.note("commute " + fmt(commute) + ", conservation " + fmt(conserve) + ", all flows at once " + fmt(composite));
  return c;
}

struct Family {
  std::vector<ComplexList> roots;  // roots of q_1..q_n
  int t;
  int s;
};

// Expected t and s worked out by hand from the root tables.
const std::vector<Family>& families() {
  const Complex i(0.0, 1.0);
  static const std::vector<Family> f{
      {{{1.0}}, 0, 1},
      {{{0.0}, {0.0, 0.0}}, 1, 2},
      {{{1.0}, {2.0, 3.0}}, 0, 3},
      {{{1.0}, {1.0, 2.0}}, 1, 3},
      {{{0.0}, {1.0, 1.0}}, 0, 2},
      {{{0.0}, {0.0, 5.0}}, 1, 3},
      {{{i}, {i, -i}}, 1, 3},
      {{{0.0}, {0.0, 0.0}, {0.0, 0.0, 0.0}}, 2, 3},
      {{{0.0}, {1.0, 2.0}, {0.0, 3.0, 4.0}}, 0, 6},
      {{{1.0}, {1.0, 2.0}, {2.0, 3.0, 4.0}}, 2, 6},
      {{{1.0}, {2.0, 3.0}, {4.0, 5.0, 6.0}}, 0, 6},
      {{{i}, {i, -1.0}, {i, -1.0, 1.0}}, 3, 6},
      {{{0.0}, {1.0, 1.0}, {0.0, 1.0, 2.0}}, 1, 5},
      {{{1.0}, {1.0, 1.0}, {1.0, 1.0, 1.0}}, 2, 3},
      {{{0.0}, {0.0, 1.0}, {0.0, 1.0, 2.0}, {0.0, 1.0, 2.0, 3.0}}, 6, 10},
      {{{1.0}, {2.0, 3.0}, {4.0, 5.0, 6.0}, {7.0, 8.0, 9.0, 10.0}}, 0, 10},
      {{{0.0}, {1.0, 2.0}, {0.0, 3.0, 4.0}, {1.0, 5.0, 6.0, 7.0}}, 0, 10},
      {{{0.0}, {0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}}, 3, 4},
      {{{2.0}, {1.0, 3.0}, {2.0, 4.0, 5.0}, {1.0, 3.0, 6.0, 7.0}}, 0, 10},
      {{{0.0}, {0.0, 1.0}, {2.0, 3.0, 4.0}, {0.0, 2.0, 5.0, 6.0}, {0.0, 1.0, 2.0, 3.0, 4.0}}, 4, 15},
  };
  return f;
}

// Orbits of maximal dimension in {[[0, b], [a, 0]] : ab = 0}, grouped by the
// one nontrivial flow, which scales b by e^z and a by e^{-z}.
int brute_force_two_by_two_orbits() {
  const std::vector<Complex> values{Complex(1.0), Complex(-2.0), Complex(0.3, 0.4), Complex(0.0, -1.5), Complex(5.0, 5.0)};
  std::vector<Matrix> points{Matrix::Zero(2, 2)};
  for (Complex v : values) {
    Matrix upper = Matrix::Zero(2, 2), lower = Matrix::Zero(2, 2);
    upper(0, 1) = v;
    lower(1, 0) = v;
    points.push_back(upper);
    points.push_back(lower);
  }
  int best = 0;
  for (const Matrix& p : points) best = std::max(best, strongly_regular(p).rank);
  std::vector<int> maximal;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (strongly_regular(points[j]).rank == best) maximal.push_back(static_cast<int>(j));
  std::vector<int> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : find(parent[static_cast<std::size_t>(x)]);
  };
  for (int p : maximal)
    for (int q : maximal) {
      const Matrix& bp = points[static_cast<std::size_t>(p)];
      const Matrix& bq = points[static_cast<std::size_t>(q)];
      Complex z;
      if (bp(0, 1) != Complex(0.0) && bq(0, 1) != Complex(0.0)) z = std::log(bq(0, 1) / bp(0, 1));
      else if (bp(1, 0) != Complex(0.0) && bq(1, 0) != Complex(0.0)) z = -std::log(bq(1, 0) / bp(1, 0));
      else continue;
      if ((gz_flow_single(bp, {1, 1}, z) - bq).norm() <= 1e-12 * (1.0 + bq.norm()))
        parent[static_cast<std::size_t>(find(p))] = find(q);
    }
  std::set<int> roots;
  for (int p : maximal) roots.insert(find(p));
  return static_cast<int>(roots.size());
}

// 3. Orbit counts in nilpotent fibers and general fibers.
Criterion orbit_counts() {
  Criterion c{3, "orbit-counts"};
  for (const MultiDegree& k : {MultiDegree{{1, 1}}, MultiDegree{{1, 1, 1}}, MultiDegree{{1, 2}}, MultiDegree{{2, 2}},
                               MultiDegree{{1, 2, 3}}}) {
    std::string label = "k=(";
    for (int ki : k.k) label += std::to_string(ki) + ",";
    label.back() = ')';
    const auto reps = enumerate_sr(k);
    c.check(reps.size() == (std::size_t{1} << (k.n() - 1)), label + " count " + std::to_string(reps.size()));
    std::set<std::vector<int>> seen;
    for (const MatricialData& f : reps) {
      c.check(md_check(f).empty(), label + " representative invalid");
      const StrongRegularity sr = md_strongly_regular(f);
      c.check(sr.strongly_regular, label + " representative not strongly regular");
      seen.insert(sigma_of(f).values);
    }
    c.check(seen.size() == reps.size(), label + " sigma values repeat");
  }
  int family = 0;
  for (const Family& fam : families()) {
    ++family;
    std::vector<Polynomial> polys;
    int total = 0;
    for (const ComplexList& r : fam.roots) {
      polys.push_back(Polynomial::from_roots(r));
      total += static_cast<int>(r.size());
    }
    const FiberOrbitData d = fiber_orbit_data(polys, FiberMode::Matrices);
    const std::string tag = "family " + std::to_string(family);
    c.check(d.t == fam.t, tag + " t " + std::to_string(d.t));
    c.check(d.s == fam.s, tag + " s " + std::to_string(d.s));
    c.check(d.count == (1LL << fam.t), tag + " count " + std::to_string(d.count));
    c.check(d.cstar_factors == fam.s && d.c_factors == total - fam.s, tag + " shape");
  }
  const int brute = brute_force_two_by_two_orbits();
  const std::vector<Polynomial> chi{Polynomial::monomial(1), Polynomial::monomial(2)};
  c.check(brute == 2, "brute-force orbits " + std::to_string(brute));
  c.check(fiber_orbit_data(chi, FiberMode::Matrices).count == brute, "2x2 fiber count disagrees with brute force");
  c.note(std::to_string(families().size()) + " families, 2x2 brute force " + std::to_string(brute) + " orbits");
  return c;
}

// 4. Canonical relations in root coordinates.
Criterion kw_relations() {
  Criterion c{4, "kw-relations"};
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<int> size(1, 4), degree(1, 3);
  double rel = 0.0, fd = 0.0;
  for (int s = 0; s < 50; ++s) {
    MultiDegree k;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) k.k.push_back(degree(rng));
    const OpenStratumChart chart = random_chart(k, rng);
    const int len = chart.size();
    for (int l = 0; l < len; ++l)
      for (int q = 0; q < len; ++q) {
        const ChartFunction rl = chart_r(len, l), rq = chart_r(len, q);
        const ChartFunction sl = chart_s(len, l), sq = chart_s(len, q);
        const Complex s_q = 1.0 / chart.rho[static_cast<std::size_t>(q)];
        const Complex rs = chart_bracket(chart, rl, sq);
        const Complex rr = chart_bracket(chart, rl, rq);
        const Complex ss = chart_bracket(chart, sl, sq);
        rel = std::max(rel, std::abs(rs - (l == q ? s_q : Complex(0.0))) / std::abs(s_q));
        rel = std::max(rel, std::abs(rr));
        rel = std::max(rel, std::abs(ss) / std::abs(s_q));
        fd = std::max(fd, std::abs(rs - chart_bracket_fd(chart, rl, sq)) / (1.0 + std::abs(rs)));
        fd = std::max(fd, std::abs(rr - chart_bracket_fd(chart, rl, rq)) / (1.0 + std::abs(rr)));
        fd = std::max(fd, std::abs(ss - chart_bracket_fd(chart, sl, sq)) / (1.0 + std::abs(ss)));
      }
  }
  c.check(rel <= 1e-6, "relations " + fmt(rel));
  c.check(fd <= 1e-7, "finite differences " + fmt(fd));
  c.note("relations " + fmt(rel) + ", fd " + fmt(fd));
  return c;
}

// 5. Left flows on the cotangent bundle descend to the GZ flows; right flows fix B.
Criterion descent() {
  Criterion c{5, "descent"};
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<int> size(1, 5);
  double numeric = 0.0, right = 0.0;
  bool exact = true, fixed = true;
  for (int s = 0; s < 50; ++s) {
    const int n = size(rng);
    const CotangentPoint x = cotangent_validate(random_matrix(n, n, rng) + 2.0 * Matrix::Identity(n, n), random_matrix(n, n, rng));
    const GZIndex idx = random_index(n, rng);
    const Complex z = random_unit_disk(rng);
    const CotangentPoint y = tgl_flow(x, Side::Left, idx, z);
    exact = exact && y.B == gz_flow_single(x.B, idx, z);
    // Independent flow: conjugation by exp(z pad(B_m^{i-1})) from a Taylor series.
    Matrix pad = Matrix::Zero(n, n);
    pad.topLeftCorner(idx.m, idx.m) = oracle::power(x.B.topLeftCorner(idx.m, idx.m), idx.i - 1);
    const Matrix h = oracle::taylor_exp(z * pad);
    const Matrix expected = h * x.B * h.inverse();
    numeric = std::max(numeric, (y.B - expected).norm() / (1.0 + x.B.norm()));

    const CotangentPoint r = tgl_flow(x, Side::Right, random_index(n, rng), random_unit_disk(rng));
    fixed = fixed && r.B == x.B;
    right = std::max(right, coord_defect(gz_map(right_moment(x)), gz_map(right_moment(r))));
  }
  c.check(exact, "left B-projection differs from gz_flow");
  c.check(numeric <= 1e-12, "left vs conjugation " + fmt(numeric));
  c.check(fixed, "right flow moved B");
  c.check(right <= 1e-9, "right moment " + fmt(right));
  c.note("left vs conjugation " + fmt(numeric) + ", right moment " + fmt(right));
  return c;
}

std::vector<Violation> kinds(const MatricialData& f) {
  std::vector<Violation> out;
  for (const auto& is : md_check(f)) out.push_back(is.kind);
  return out;
}

double polar_defect(const MatricialData& a, const MatricialData& b) {
  const auto pa = polar(a);
  const auto pb = polar(b);
  double d = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) d = std::max(d, pa[i].max_coeff_distance(pb[i]));
  return d;
}

// 6. Matricial model: validation, invariance of the pole map, pairing identities.
Criterion matricial_model() {
  Criterion c{6, "matricial-model"};
  std::mt19937_64 rng(1006);
  const std::vector<MultiDegree> degrees{{{1}}, {{2}}, {{1, 1}}, {{1, 2}}, {{2, 1}}, {{2, 2}}, {{1, 1, 1}},
                                         {{1, 2, 3}}, {{3, 1, 2}}, {{2, 2, 2}}, {{1, 0, 1}}, {{2, 0, 0, 1}}};
  int accepted = 0;
  double polar_worst = 0.0;
  for (const MultiDegree& k : degrees)
    for (int rep = 0; rep < 3; ++rep) {
      const MatricialData f = random_matricial(k, rng);
      const bool ok = md_check(f).empty();
      c.check(ok, "fixture rejected");
      accepted += ok;
      std::vector<Matrix> h;
      for (int i = 1; i < k.n(); ++i) h.push_back(random_matrix(k.link(i), k.link(i), rng) + 2.0 * Matrix::Identity(k.link(i), k.link(i)));
      std::vector<ComplexList> lambda;
      for (int ki : k.k) {
        ComplexList li;
        for (int j = 0; j < ki; ++j) li.push_back(0.5 * random_unit_disk(rng));
        lambda.push_back(li);
      }
      polar_worst = std::max(polar_worst, polar_defect(gk_act(f, h), f));
      polar_worst = std::max(polar_worst, polar_defect(ak_act(f, lambda), f));
    }
  c.check(polar_worst <= 1e-9, "polar " + fmt(polar_worst));

  Matrix unipotent(2, 2);
  unipotent << 1.0, 0.5, 0.0, 1.0;
  std::vector<std::pair<Violation, MatricialData>> broken;
  {
    MatricialData f = random_matricial({{2}}, rng);
    f.B_minus[0] = Matrix::Constant(1, 1, 1.0);
    broken.emplace_back(Violation::Shape, f);
  }
  {
    MatricialData f = random_matricial({{2}}, rng);
    f.B_minus[0] = unipotent * f.B_minus[0] * unipotent.inverse();
    f.g[0] = unipotent * f.g[0];
    broken.emplace_back(Violation::CompanionForm, f);
  }
  {
    MatricialData f = random_matricial({{2, 1}}, rng);
    f.B_minus[1](0, 0) += 0.25;
    f.B_plus[1](0, 0) += 0.25;
    broken.emplace_back(Violation::BlockMatching, f);
  }
  {
    MatricialData f = random_matricial({{2, 2}}, rng);
    f.uw[0].u(0) += 0.25;
    broken.emplace_back(Violation::RankOneGap, f);
  }
  {
    MatricialData f = random_matricial({{2}}, rng);
    f.g[0] = f.g[0] * unipotent;
    broken.emplace_back(Violation::Conjugacy, f);
  }
  {
    MatricialData f = random_matricial({{2}}, rng);
    f.g[0] = Matrix::Zero(2, 2);
    broken.emplace_back(Violation::Invertibility, f);
  }
  for (const auto& [kind, f] : broken) c.check(kinds(f) == std::vector<Violation>{kind}, "missed " + to_string(kind));

  double pairing = 0.0;
  for (const MultiDegree& k : {MultiDegree{{1, 2}}, MultiDegree{{3, 1}}, MultiDegree{{2, 2}}, MultiDegree{{1, 2, 3}}, MultiDegree{{3, 3, 1}}})
    for (int rep = 0; rep < 5; ++rep) {
      const MatricialData f = random_canonical_nilpotent(k, rng);
      c.check(md_check(f).empty() && is_nilpotent_fiber(f), "canonical nilpotent sample invalid");
      pairing = std::max(pairing, pairing_identity_defect(f));
    }
  c.check(pairing <= 1e-8, "pairing " + fmt(pairing));

  double local = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Complex y = random_unit_disk(rng), p = random_unit_disk(rng) + 2.0;
    const Complex u = random_unit_disk(rng), w = random_unit_disk(rng);
    const MatricialData f = rat11_from_local_model(y, p, u, w);
    c.check(md_check(f).empty(), "local model invalid");
    const auto q = polar(f);
    local = std::max(local, std::abs((-q[1][0] + q[0][0]) - u * w));
  }
  c.check(local <= 1e-12, "z2 - z1 - uw " + fmt(local));
  c.note(std::to_string(accepted) + " fixtures, polar " + fmt(polar_worst) + ", pairing " + fmt(pairing) + ", local " + fmt(local));
  return c;
}

// 7. Lax equation: integration, gauge fixing and the round trip.
Criterion lax_pipeline() {
  Criterion c{7, "lax-pipeline"};
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> size(1, 4);
  double closed = 0.0, spectrum = 0.0, round_trip = 0.0;
  for (int s = 0; s < 20; ++s) {
    const int n = size(rng);
    const Matrix alpha = clamp_norm(random_matrix(n, n, rng), 1.0);
    const Matrix beta = clamp_norm(random_matrix(n, n, rng), 1.0);
    const LaxPath path = lax_integrate([&](double) { return alpha; }, beta, 0.0, 1.0, 200, false);
    for (std::size_t j = 0; j < path.grid.size(); ++j) {
      const double t = path.grid[j];
      const Matrix exact = oracle::taylor_exp(-t * alpha) * beta * oracle::taylor_exp(t * alpha);
      closed = std::max(closed, (path.beta[j] - exact).norm());
    }
    const GaugeFix fix = gauge_fix_regular(path);
    spectrum = std::max(spectrum, oracle::max_coeff_diff(oracle::charpoly_by_determinants(fix.X),
                                                         oracle::charpoly_by_determinants(path.beta.front())));
    const LaxPath fixed = gauge_apply(fix.g_path, path);
    std::vector<Matrix> inverse;
    for (const Matrix& g : fix.g_path) inverse.push_back(g.inverse());
    const LaxPath back = gauge_apply(inverse, fixed);
    for (std::size_t j = 0; j < path.grid.size(); ++j) {
      round_trip = std::max(round_trip, (back.alpha[j] - path.alpha[j]).norm());
      round_trip = std::max(round_trip, (back.beta[j] - path.beta[j]).norm());
    }
  }
  c.check(closed <= 1e-8, "closed form " + fmt(closed));
  c.check(spectrum <= 1e-8, "charpoly " + fmt(spectrum));
  c.check(round_trip <= 1e-6, "round trip " + fmt(round_trip));
  c.note("closed form " + fmt(closed) + ", charpoly " + fmt(spectrum) + ", round trip " + fmt(round_trip));
  return c;
}

// 8. Polynomial and matrix kernels.
Criterion kernels(Clock::time_point start) {
  Criterion c{8, "kernel-self-consistency"};
  std::mt19937_64 rng(1008);
  auto random_monic = [&](int degree) {
    ComplexList coeffs;
    for (int j = 0; j < degree; ++j) coeffs.push_back(random_unit_disk(rng));
    coeffs.push_back(1.0);
    return Polynomial(coeffs);
  };
  double comp = 0.0, root = 0.0, newton = 0.0, expo = 0.0;
  for (int s = 0; s < 50; ++s) {
    const Polynomial p4 = random_monic(4);
    comp = std::max(comp, oracle::max_coeff_diff(oracle::charpoly_by_determinants(companion_of(p4)), p4.coefficients()));
    comp = std::max(comp, charpoly(companion_of(p4)).max_coeff_distance(p4));

    const Polynomial p5 = random_monic(5);
    const ComplexList r = roots(p5);
    root = std::max(root, oracle::max_coeff_diff(oracle::poly_from_roots(r), p5.coefficients()));

    const Polynomial p6 = random_monic(6);
    const ComplexList low(p6.coefficients().begin(), p6.coefficients().end() - 1);
    const ComplexList sums = newton_convert(low, NewtonDirection::CoeffsToPowerSums);
    const ComplexList again = newton_convert(sums, NewtonDirection::PowerSumsToCoeffs);
    for (std::size_t j = 0; j < low.size(); ++j) newton = std::max(newton, std::abs(again[j] - low[j]));

    for (int n = 1; n <= 6; ++n) {
      const Matrix a = clamp_norm(random_matrix(n, n, rng), 2.0);
      expo = std::max(expo, (matexp(a) * matexp(-a) - Matrix::Identity(n, n)).norm());
    }
  }
  const double total = seconds_since(start);
  c.check(comp <= 1e-10, "companion " + fmt(comp));
  c.check(root <= 1e-8, "roots " + fmt(root));
  c.check(newton <= 1e-11, "newton " + fmt(newton));
  c.check(expo <= 1e-12, "matexp inverse " + fmt(expo));
  c.check(total <= 60.0, "total runtime " + fmt(total) + " s");
  c.note("companion " + fmt(comp) + ", roots " + fmt(root) + ", newton " + fmt(newton) + ", matexp " + fmt(expo) +
         ", total " + fmt(total) + " s");
  return c;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::vector<std::function<Criterion()>> runs{poisson_commutativity, flow_properties, orbit_counts, kw_relations,
                                               descent,               matricial_model, lax_pipeline,
                                               [start] { return kernels(start); }};
  bool all = true;
  int id = 0;
  for (const auto& run : runs) {
    ++id;
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c = Criterion{id, "criterion-" + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    all = all && c.pass;
    std::printf("%s criterion %d %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
