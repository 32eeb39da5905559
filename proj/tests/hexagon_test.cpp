#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "hexatlas/error.hpp"
#include "hexatlas/hexagon.hpp"

using namespace hexatlas;

namespace {

using ld = long double;

// Textbook forms, evaluated in extended precision.
ld oracle_opposite(ld a, ld b, ld c) {
  return std::acosh((std::cosh(c) + std::cosh(a) * std::cosh(b)) / (std::sinh(a) * std::sinh(b)));
}

const double s = std::acosh(2.0);

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

double max_rel(const HexagonLengths& g, const HexagonLengths& h) {
  double e = 0;
  for (Arc x : kArcs) e = std::max(e, rel(g[x], h[x]));
  return e;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalConsistency;
}

}  // namespace

TEST(Hexagon, RegularFixedPoint) {
  const HexagonLengths h = solve_from_alternating(s, s, s);
  for (Arc x : kArcs) EXPECT_NEAR(h[x], is_spanning(x) ? std::acosh(3.0) : s, 1e-12) << arc_name(x);
  EXPECT_NEAR(h[Arc::alpha], 1.762747174039086, 1e-12);
}

TEST(Hexagon, OppositeSideMatchesTextbookForm) {
  EXPECT_NEAR(opposite_side(1, 1, 1), 1.70491, 1e-5);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    EXPECT_LT(rel(opposite_side(a, b, c), static_cast<double>(oracle_opposite(a, b, c))), 1e-13);
  }
}

TEST(Hexagon, PerpendicularMatchesTextbookForm) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 500; ++i) {
    const ld a = u(rng), b = u(rng), c = u(rng);
    const ld C = oracle_opposite(a, b, c);
    const ld B = oracle_opposite(c, a, b);
    const ld alpha = std::acosh(std::sinh(b) * std::sinh(C));
    EXPECT_LT(rel(perpendicular_length(a, b, c), static_cast<double>(alpha)), 1e-12);
    EXPECT_LT(rel(perpendicular_length(a, b, c), static_cast<double>(std::acosh(std::sinh(c) * std::sinh(B)))),
              1e-12);
  }
}

TEST(Hexagon, RoundTripThroughEveryTriple) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 200; ++i) {
    const HexagonLengths h = solve_from_alternating(u(rng), u(rng), u(rng));
    for (const ArcTriple& t : compatible_triples()) {
      const HexagonLengths g = solve_from_triple(t, {h[t[0]], h[t[1]], h[t[2]]});
      EXPECT_LT(max_rel(g, h), 1e-9) << t.to_string();
    }
  }
}

TEST(Hexagon, TrigResidualsSmall) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 300; ++i) {
    const TrigResiduals r = trig_residuals(solve_from_alternating(u(rng), u(rng), u(rng)));
    EXPECT_LT(r.cosh_rule, 1e-10);
    EXPECT_LT(r.law_of_sines, 1e-10);
    EXPECT_LT(r.perpendicular, 1e-10);
  }
}

TEST(Hexagon, SymmetricRelabeling) {
  const HexagonLengths h = solve_from_alternating(0.7, 1.9, 3.1);
  const HexagonLengths r = relabeled(h, rotate_labels);
  EXPECT_LT(max_rel(r, solve_from_alternating(3.1, 0.7, 1.9)), 1e-13);
  const HexagonLengths w = relabeled(h, swap_case);
  EXPECT_LT(max_rel(w, solve_from_alternating(h[Arc::A], h[Arc::B], h[Arc::C])), 1e-12);
}

TEST(Hexagon, Pentagon) {
  const double u = std::atanh(1 / std::sqrt(2.0));
  EXPECT_NEAR(pentagon_between(u, u), s, 1e-14);
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> d(0.1, 5.0);
  for (int i = 0; i < 200; ++i) {
    const PentagonLengths p = complete_pentagon(i % 5, d(rng), d(rng));
    EXPECT_LT(pentagon_residual(p), 1e-11);
  }
}

TEST(Hexagon, PerpendicularFeet) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 100; ++i) {
    const HexagonLengths h = solve_from_alternating(u(rng), u(rng), u(rng));
    const FeetSolution f = perpendicular_feet(h, Arc::alpha);
    ASSERT_GT(f.x, 0);
    ASSERT_LT(f.x, h[Arc::a]);
    ASSERT_GT(f.y, 0);
    ASSERT_LT(f.y, h[Arc::A]);
    // Right pentagon (x, C, b, y, alpha): cosh b = sinh alpha sinh x and cosh y = sinh x sinh C.
    EXPECT_LT(rel(std::cosh(h[Arc::b]), std::sinh(h[Arc::alpha]) * std::sinh(f.x)), 1e-10);
    EXPECT_LT(rel(std::cosh(f.y), std::sinh(f.x) * std::sinh(h[Arc::C])), 1e-10);
    const FeetSolution g = perpendicular_feet(h, Arc::gamma);
    EXPECT_LT(rel(std::cosh(h[Arc::a]), std::sinh(h[Arc::gamma]) * std::sinh(g.x)), 1e-10);
  }
  const FeetSolution r = perpendicular_feet(solve_from_alternating(s, s, s), Arc::beta);
  EXPECT_NEAR(r.x, s / 2, 1e-12);
  EXPECT_NEAR(r.y, s / 2, 1e-12);
}

TEST(Hexagon, ScaledOpposite) {
  EXPECT_NEAR(scaled_opposite(s, s, s, 2), std::acosh(7.0 / 6), 1e-13);
  EXPECT_NEAR(scaled_opposite(s, s, s, 2), 0.56962, 1e-5);
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 50; ++i) {
    // C is the side opposite the shortest alternating side.
    std::array<double, 3> l{u(rng), u(rng), u(rng)};
    std::sort(l.rbegin(), l.rend());
    const double a = l[0], b = l[1], c = l[2];
    double prev = scaled_opposite(a, b, c, 0.05);
    for (double t = 0.1; t <= 5.0; t += 0.05) {
      const double cur = scaled_opposite(a, b, c, t);
      EXPECT_LT(cur, prev);
      EXPECT_LT(scaling_kernel(a, b, c, t), 0);
      prev = cur;
    }
  }
}

TEST(Hexagon, ExtremeScales) {
  const HexagonLengths tiny = solve_from_alternating(1e-10, 1e-10, 1e-10);
  for (Arc x : kArcs) EXPECT_TRUE(std::isfinite(tiny[x]));
  EXPECT_NEAR(tiny[Arc::A], 2 * std::log(2e10), 1e-6);
  const HexagonLengths big = solve_from_alternating(1e3, 1e3, 1e3);
  EXPECT_GT(big[Arc::A], 0);
  EXPECT_LT(big[Arc::A], 1e-100);
  const HexagonLengths huge = solve_from_triple(ArcTriple::parse("a,b,c"), {1e17, 40, 40});
  EXPECT_TRUE(std::isfinite(huge[Arc::A]));
  EXPECT_NEAR(huge[Arc::A] / 1e17, 1.0, 1e-12);
}

TEST(Hexagon, ShortSideForcesLongNeighbours) {
  for (double b : {0.2, 0.5, 1.0}) {
    const HexagonLengths h = solve_from_alternating(1e-3, b, 0.7);
    EXPECT_GT(h[Arc::alpha], 5);
    EXPECT_GT(h[Arc::C], 5);
  }
}

TEST(Hexagon, TwoLongSidesForceShortThird) {
  for (double c : {0.1, 0.5, 1.0}) EXPECT_LT(opposite_side(20, 20, c), 1e-3);
}

TEST(Hexagon, Errors) {
  const ArcTriple t = ArcTriple::parse("a,b,c");
  EXPECT_EQ(kind_of([&] { solve_from_triple(t, {0, 1, 1}); }), ErrorKind::NonPositiveLength);
  EXPECT_EQ(kind_of([&] { solve_from_triple(t, {-1, 1, 1}); }), ErrorKind::NonPositiveLength);
  EXPECT_EQ(kind_of([&] { solve_from_triple(t, {NAN, 1, 1}); }), ErrorKind::NonPositiveLength);
  EXPECT_EQ(kind_of([&] { solve_from_triple(t, {1e-13, 1, 1}); }), ErrorKind::NonPositiveLength);
  EXPECT_EQ(kind_of([] { opposite_side(INFINITY, 1, 1); }), ErrorKind::NonPositiveLength);
}
