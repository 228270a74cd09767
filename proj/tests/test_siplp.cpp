#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rmeasure/siplp.hpp"
#include "rmeasure/tables.hpp"

using namespace rmeasure;

TEST_SUITE_BEGIN("siplp");

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

void check_chain(const SIPTrace& tr) {
  for (std::size_t i = 0; i < tr.iterations.size(); ++i) {
    const auto& it = tr.iterations[i];
    CHECK(it.m_lower <= it.m_upper);
    if (i) {
      CHECK(it.m_lower >= tr.iterations[i - 1].m_lower);
      CHECK(it.m_upper <= tr.iterations[i - 1].m_upper);
      CHECK(it.points >= tr.iterations[i - 1].points);
    }
  }
}

}  // namespace

TEST_CASE("control sets are sorted and merged") {
  ControlSet s({3.0, 1.0, 2.0, 1.0 + 1e-13, -1.0, 0.0});
  CHECK(s.points() == std::vector<double>{1.0, 2.0, 3.0});
  CHECK_FALSE(s.add(2.0 + 5e-13));
  CHECK(s.add(2.5));
  CHECK(s.merge(std::vector<double>{0.5, 2.5, 4.0}) == 2);
  CHECK(std::is_sorted(s.points().begin(), s.points().end()));

  auto d = ControlSet::default_seed();
  CHECK(d.size() == 549);  // 0.1 appears in both families
  CHECK(d.points().front() > 0);
  CHECK(d.points().back() == 50.0);
  auto j1 = ControlSet::default_seed(50, 7), j2 = ControlSet::default_seed(50, 7);
  CHECK(j1.points() == j2.points());
  CHECK(j1.points() != d.points());
}

TEST_CASE("two-point program has a hand solution") {
  auto r = solve_lp(ControlSet({0.5, 2.0}), {P("x")}, WeightKind::positive_real());
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.coeffs[0] == doctest::Approx(1 / std::log(2.0)).epsilon(1e-12));
  CHECK(r.m_inner == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.active == 2);

  auto one = solve_lp(ControlSet({2.0}), {P("x")}, WeightKind::positive_real());
  CHECK(one.coeffs[0] == 0.0);
  CHECK(one.m_inner == doctest::Approx(2.0));
}

TEST_CASE("points on a root impose no constraint") {
  auto r = solve_lp(ControlSet({1.0, 2.0}), {P("x - 1")}, WeightKind::positive_real());
  CHECK(r.rows == 1);
  auto none = solve_lp(ControlSet({1.0}), {P("x - 1")}, WeightKind::positive_real());
  CHECK(none.status == LPStatus::Unbounded);
}

TEST_CASE("one-variable programs match the breakpoint oracle") {
  // m(c) = min_i (w_i - c L_i) is concave piecewise linear; its maximum over
  // c >= 0 is at c = 0 or at a pairwise crossing.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> xd(0.02, 20.0);
  const char* qs[] = {"x", "x - 1", "x^2 - 3x + 1", "x^2 + 1"};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> xs;
    for (int i = 0; i < 6 + trial % 5; ++i) xs.push_back(xd(rng));
    ControlSet pts(xs);
    IntPolynomial q = P(qs[trial % 4]);
    auto r = solve_lp(pts, {q}, WeightKind::positive_real());
    std::vector<double> w, L;
    for (double x : pts.points()) {
      double v = std::fabs(eval_double(q, x));
      if (v == 0) continue;
      w.push_back(x > 1 ? x : 0);
      L.push_back(std::log(v));
    }
    auto mval = [&](double c) {
      double m = INFINITY;
      for (std::size_t i = 0; i < w.size(); ++i) m = std::min(m, w[i] - c * L[i]);
      return m;
    };
    std::vector<double> cands{0.0};
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (L[i] != L[j]) {
          double c = (w[i] - w[j]) / (L[i] - L[j]);
          if (c > 0) cands.push_back(c);
        }
    bool unbounded = std::all_of(L.begin(), L.end(), [](double l) { return l < 0; });
    CAPTURE(trial);
    if (unbounded) {
      CHECK(r.status == LPStatus::Unbounded);
      continue;
    }
    double best = -INFINITY;
    for (double c : cands) best = std::max(best, mval(c));
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.m_inner == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("SIP on {x, x-1} closes the gap and beats a coarse coefficient grid") {
  auto res = semi_infinite_optimize({P("x"), P("x - 1")}, WeightKind::positive_real());
  REQUIRE(res.trace.converged);
  const auto& last = res.trace.iterations.back();
  CHECK(last.m_upper - last.m_lower <= 1e-6);
  check_chain(res.trace);
  CHECK(global_min(res.best).m == doctest::Approx(res.m).epsilon(1e-9));

  double grid_best = -INFINITY;
  AuxFunction f;
  f.terms = {{0, P("x")}, {0, P("x - 1")}};
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      f.terms[0].c = 0.1 * i;
      f.terms[1].c = 0.1 * j;
      grid_best = std::max(grid_best, global_min(f).m);
    }
  CHECK(res.m >= grid_best - 1e-6);
  CHECK(res.m == doctest::Approx(1.30850).epsilon(1e-5));
}

TEST_CASE("single polynomial x takes the zero branch") {
  auto res = semi_infinite_optimize({P("x")}, WeightKind::positive_real());
  CHECK(res.trace.iterations.size() <= 2);
  CHECK(res.m == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(res.trace.converged);
}

TEST_CASE("re-optimizing a sector function does not lose ground") {
  const AuxFunction& f2 = sector_function(2);
  double published = global_min(f2).m;
  auto res = semi_infinite_optimize(f2.polynomials(), f2.weight);
  check_chain(res.trace);
  CHECK(res.m >= published - 1e-6);
}

TEST_CASE("SIP is deterministic") {
  auto a = semi_infinite_optimize({P("x"), P("x - 1"), P("x^2 - 3x + 1")}, WeightKind::positive_real());
  auto b = semi_infinite_optimize({P("x"), P("x - 1"), P("x^2 - 3x + 1")}, WeightKind::positive_real());
  REQUIRE(a.trace.iterations.size() == b.trace.iterations.size());
  CHECK(a.m == b.m);
  CHECK(a.best.coefficients() == b.best.coefficients());
  CHECK(a.trace.tsv() == b.trace.tsv());
}

TEST_SUITE_END();
