#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <iostream>
#include <random>

#include "hexatlas/error.hpp"
#include "hexatlas/teichmueller.hpp"

using namespace hexatlas;

namespace {

const double s = std::acosh(2.0);

ArcTriple T(const char* text) { return ArcTriple::parse(text); }

TeichPoint regular() { return teich_from_triple(T("a,b,c"), {s, s, s}); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalConsistency;
}

TeichPoint random_point(std::mt19937_64& rng, double lo = 0.2, double hi = 4.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return teich_from_triple(T("a,b,c"), {u(rng), u(rng), u(rng)});
}

FoliationClass random_foliation(std::mt19937_64& rng) {
  const auto& triples = compatible_triples();
  std::uniform_int_distribution<int> w(0, 9);
  const ArcTriple& face = triples[rng() % triples.size()];
  for (;;) {
    FoliationClass f{{face[0], w(rng)}, {face[1], w(rng)}, {face[2], w(rng)}};
    if (!f.empty()) return f;
  }
}

}  // namespace

TEST(Teich, LengthVector) {
  for (double x : length_vector6(regular())) EXPECT_NEAR(x, s, 1e-14);
  const TeichPoint p = teich_from_triple(T("a,b,c"), {0.5, 1.5, 2.5});
  const auto v = length_vector6(p);
  EXPECT_DOUBLE_EQ(v[0], 0.5);
  EXPECT_DOUBLE_EQ(v[1], 1.5);
  EXPECT_DOUBLE_EQ(v[2], 2.5);
  for (double x : v) EXPECT_GT(x, 0);
}

TEST(Teich, FromMixedTriple) {
  const TeichPoint p = teich_from_triple(T("a,b,gamma"), {s, s, std::acosh(3.0)});
  for (Arc x : kArcs) EXPECT_NEAR(p.hexagon[x], regular().hexagon[x], 1e-12);
}

TEST(Teich, ProjectiveEmbedding) {
  for (double x : projective_embed(regular()).v) EXPECT_NEAR(x, 1.0 / 6, 1e-15);
  const auto f = projective_embed_f(FoliationClass{{Arc::A, 1}, {Arc::B, 1}, {Arc::C, 1}}).v;
  const std::array<double, 6> expected{1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, 0};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(f[i], expected[i], 1e-15);
  EXPECT_EQ(kind_of([] { projective_embed_f(FoliationClass{}); }), ErrorKind::ZeroFoliation);
}

TEST(Teich, ImagesDisjoint) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    for (double x : projective_embed(random_point(rng)).v) EXPECT_GT(x, 0);
    const auto f = projective_embed_f(random_foliation(rng)).v;
    EXPECT_EQ(*std::min_element(f.begin(), f.end()), 0.0);
  }
}

TEST(Teich, NoHomotheticHexagons) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const TeichPoint p = random_point(rng);
    const auto base = projective_embed(p).v;
    for (double t : {1.1, 2.0, 5.0}) {
      const auto scaled = projective_embed(teich_from_triple(
          T("a,b,c"), {t * p.hexagon[Arc::a], t * p.hexagon[Arc::b], t * p.hexagon[Arc::c]})).v;
      double d = 0;
      for (std::size_t k = 0; k < 6; ++k) d = std::max(d, std::abs(scaled[k] - base[k]));
      EXPECT_GT(d, 1e-6);
    }
  }
}

TEST(Teich, ThickParts) {
  EXPECT_TRUE(in_thick_part(regular(), T("a,b,c"), 1.0));
  EXPECT_FALSE(in_thick_part(regular(), T("a,b,c"), 2.0));
  EXPECT_TRUE(in_thick_part(regular(), T("alpha,b,c"), 1.3));
  EXPECT_TRUE(in_thick_part(regular(), T("A,B,gamma"), 1e-300));
}

TEST(Teich, ThickPartsCover) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> log_len(-4, 4);
  double eps0 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2000; ++i) {
    const TeichPoint p = teich_from_triple(
        T("a,b,c"), {std::exp(log_len(rng)), std::exp(log_len(rng)), std::exp(log_len(rng))});
    const ThickWitness w = thickest_triple(p);
    EXPECT_TRUE(in_thick_part(p, w.triple, 0.5 * w.min_length));
    eps0 = std::min(eps0, w.min_length);
  }
  RecordProperty("eps0", std::to_string(eps0));
  std::cout << "empirical eps0 = " << eps0 << '\n';
  EXPECT_GT(eps0, 0.1);
}

TEST(Teich, QProjection) {
  const FoliationClass q = q_projection(regular(), T("a,b,c"));
  const Rational half = rational_from_double(s) / 2;
  EXPECT_EQ(q, (FoliationClass{{Arc::A, half}, {Arc::B, half}, {Arc::C, half}}));
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    const TeichPoint p = random_point(rng);
    for (const ArcTriple& t : compatible_triples()) {
      const FoliationClass f = q_projection(p, t);
      for (Arc x : t.arcs()) EXPECT_EQ(intersection_number(f, x), rational_from_double(p.hexagon[x]));
    }
  }
}

TEST(Teich, QProjectionInjective) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 100; ++i) {
    const TeichPoint p = random_point(rng, 1.0, 3.0), r = random_point(rng, 1.0, 3.0);
    EXPECT_FALSE(q_projection(p, T("a,b,c")) == q_projection(r, T("a,b,c")));
    EXPECT_FALSE(q_projection(p, T("A,a,beta")) == q_projection(r, T("A,a,beta")));
  }
}

TEST(Teich, BoundaryChartRegular) {
  const BoundaryChartPoint b = boundary_chart(regular(), T("a,b,c"));
  for (const Rational& x : b.point.chart.coords) EXPECT_EQ(x, Rational(1, 3));
  EXPECT_NEAR(b.collar, std::exp(-3 * s), 1e-15);
  EXPECT_NEAR(b.collar, 0.01923, 1e-5);
}

TEST(Teich, BoundaryChartRoundTrip) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 200; ++i) {
    const TeichPoint p = random_point(rng);
    const ArcTriple& t = compatible_triples()[i % 14];
    const TeichPoint back = from_boundary_chart(boundary_chart(p, t));
    for (Arc x : kArcs) EXPECT_NEAR(back.hexagon[x], p.hexagon[x], 1e-8 * p.hexagon[x]);
  }
}

TEST(Teich, CollarDecreasesAlongGrowingFamily) {
  double prev = 1;
  for (int n = 1; n <= 20; ++n) {
    const double c = boundary_chart(teich_from_triple(T("a,b,c"), {1.0 * n, 1.0 * n, 1.0 * n}), T("a,b,c")).collar;
    EXPECT_LT(c, prev);
    prev = c;
  }
}

TEST(Teich, BoundaryPoints) {
  const PMFPoint x = normalize(make_chart(T("a,b,c"), {1, 2, 3}));
  const BoundaryChartPoint b = boundary_chart(x, T("a,b,c"));
  EXPECT_EQ(b.collar, 0.0);
  EXPECT_EQ(b.point.chart.coords, x.chart.coords);
  const PMFPoint edge = normalize(make_chart(T("a,b,c"), {0, 2, 3}));
  EXPECT_EQ(kind_of([&] { boundary_chart(edge, T("a,b,c")); }), ErrorKind::NotInChart);
  EXPECT_EQ(kind_of([&] { boundary_chart(x, T("A,B,C")); }), ErrorKind::NotInChart);
  EXPECT_EQ(kind_of([&] { from_boundary_chart(b); }), ErrorKind::NotInChart);
}

TEST(Teich, DivergenceTable) {
  struct Case {
    const char* spec;
    const char* witness;
  };
  const Case cases[] = {
      {"a=n;b=n;c=n", "a,b,c"},       {"a=1/n;b=1/n;c=1/n", "A,B,C"},
      {"a=n;b=n;c=1", "a,b,gamma"},   {"a=1;b=exp(n);c=2*n", "alpha,b,c"},
      {"a=n;b=1;c=1", "A,a,gamma"},   {"a=1;b=n;c=1", "B,alpha,b"},
      {"a=1;b=1;c=n", "C,beta,c"},    {"a=1;b=1;c=1/n", "A,B,gamma"},
      {"a=1/n;b=2;c=3", "B,C,alpha"}, {"A=n;B=n;C=1", "A,B,gamma"},
      {"A=1;B=1;C=1/n", "a,b,gamma"}, {"A=1/n;B=1/n;C=1/n", "a,b,c"},
      {"a=n;b=n;gamma=n", "a,b,gamma"},
  };
  for (const Case& c : cases) {
    const SequenceSpec spec = SequenceSpec::parse(c.spec);
    const Divergence d = diverges(spec);
    EXPECT_TRUE(d.diverges) << c.spec;
    EXPECT_TRUE(d.symbolic) << c.spec;
    ASSERT_TRUE(d.witness.has_value()) << c.spec;
    EXPECT_EQ(d.witness->to_string(), c.witness) << c.spec;
    // The witness lengths really grow.
    const HexagonLengths early = solve_from_triple(spec.triple, spec.at(8));
    const HexagonLengths late = solve_from_triple(spec.triple, spec.at(30));
    for (Arc x : d.witness->arcs()) EXPECT_GT(late[x], early[x]) << c.spec << " " << arc_name(x);
  }
  const Divergence bounded = diverges(SequenceSpec::parse("a=1;b=1;c=1"));
  EXPECT_FALSE(bounded.diverges);
  EXPECT_FALSE(bounded.witness.has_value());
  EXPECT_FALSE(diverges(SequenceSpec::parse("a=1;b=2+1/n;gamma=3")).diverges);
}

TEST(Teich, DivergenceBySampling) {
  const Divergence d = diverges(SequenceSpec::parse("a=n;b=n;c=1/n"));
  EXPECT_TRUE(d.diverges);
  EXPECT_FALSE(d.symbolic);
  ASSERT_TRUE(d.witness.has_value());
  const HexagonLengths h = solve_from_triple(T("a,b,c"), {64, 64, 1.0 / 64});
  for (Arc x : d.witness->arcs()) EXPECT_GE(h[x], kNumericDivergenceThreshold);
}

TEST(Teich, BoundaryLimits) {
  struct Case {
    const char* spec;
    std::array<double, 6> limit;
    const char* chart;
  };
  const Case cases[] = {
      {"a=n;b=n;c=n", {1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, 0}, "a,b,c"},
      {"a=1/n;b=1/n;c=1/n", {0, 0, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3}, "A,B,C"},
      {"a=exp(n);b=n;c=n", {0.5, 0, 0, 0.5, 0, 0}, "A,B,C"},
  };
  for (const Case& c : cases) {
    const BoundaryLimit lim = boundary_limit(SequenceSpec::parse(c.spec));
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(lim.limit.v[i], c.limit[i], 1e-3) << c.spec;
    EXPECT_EQ(lim.chart.to_string(), c.chart) << c.spec;
    EXPECT_LE(lim.error_estimate, 1e-3);
    EXPECT_GE(lim.collar_at_nmax, 0);
    EXPECT_LT(lim.collar_at_nmax, 1e-10);
    // The fitted foliation reproduces the limit.
    const auto f = projective_embed_f(lim.foliation).v;
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(f[i], c.limit[i], 1e-3) << c.spec;
  }
}

TEST(Teich, BoundaryLimitTrace) {
  LimitOptions opts;
  opts.n_max = 12;
  opts.keep_trace = true;
  opts.tol = 1;
  const BoundaryLimit lim = boundary_limit(SequenceSpec::parse("a=n;b=n;c=n"), opts);
  ASSERT_EQ(lim.trace.size(), 12u);
  EXPECT_EQ(lim.trace.back().n, 12);
  EXPECT_DOUBLE_EQ(lim.trace.back().hexagon[Arc::a], 12);
}

TEST(Teich, BoundaryLimitFailures) {
  EXPECT_EQ(kind_of([] { boundary_limit(SequenceSpec::parse("a=1;b=1;c=1")); }), ErrorKind::UnsupportedSpec);
  // Lengths of order ln n: the normalized vectors drift too slowly.
  EXPECT_EQ(kind_of([] { boundary_limit(SequenceSpec::parse("a=1;b=1;c=1/n")); }), ErrorKind::NotConverged);
  LimitOptions two;
  two.n_max = 2;
  EXPECT_EQ(kind_of([&] { boundary_limit(SequenceSpec::parse("a=n;b=n;c=n"), two); }), ErrorKind::NotConverged);
  two.tol = 10;
  EXPECT_NO_THROW(boundary_limit(SequenceSpec::parse("a=n;b=n;c=n"), two));
  LimitOptions one;
  one.n_max = 1;
  EXPECT_THROW(boundary_limit(SequenceSpec::parse("a=n;b=n;c=n"), one), std::invalid_argument);
}

TEST(Teich, PantsDouble) {
  for (double c : pants_double(regular())) EXPECT_NEAR(c, 2 * s, 1e-14);
  const auto cuffs = pants_double(teich_from_triple(T("a,b,c"), {1, 1, 1}));
  EXPECT_EQ(cuffs, (std::array<double, 3>{2, 2, 2}));
}
