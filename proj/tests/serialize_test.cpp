#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hexatlas/error.hpp"
#include "hexatlas/serialize.hpp"

using namespace hexatlas;

TEST(Serialize, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(u(rng));
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(2), "2");
}

TEST(Serialize, FoliationJson) {
  const FoliationClass f{{Arc::A, Rational(1, 2)}, {Arc::B, Rational(1, 2)}, {Arc::C, 3}};
  const Json j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"weights":{"A":"1/2","B":"1/2","C":"3"}})");
  EXPECT_EQ(foliation_from_json(j), f);
  EXPECT_THROW(foliation_from_json(Json::parse(R"({"weights":{"a":"1","alpha":"1"}})")), Error);
  EXPECT_THROW(foliation_from_json(Json::parse(R"({"weights":{"a":1}})")), Error);
}

TEST(Serialize, ChartJson) {
  const ChartCoords cc = make_chart(ArcTriple::parse("a,b,c"), {1, 1, 1});
  const Json j = to_json(cc);
  EXPECT_EQ(j.dump(), R"({"triple":["a","b","c"],"coords":["1","1","1"],"region":"CENTRAL"})");
  const ChartCoords back = chart_from_json(j);
  EXPECT_EQ(back.triple, cc.triple);
  EXPECT_EQ(back.coords, cc.coords);
}

TEST(Serialize, ComplexJsonRoundTrip) {
  const PMFCellComplex k = pmf_cell_complex();
  const Json j = to_json(k);
  EXPECT_EQ(j["vertices"].size(), 9u);
  EXPECT_EQ(j["edges"].size(), 21u);
  EXPECT_EQ(j["faces"].size(), 14u);
  EXPECT_EQ(complex_from_json(Json::parse(j.dump())), k);
  EXPECT_THROW(complex_from_json(Json::parse(R"({"vertices":[],"edges":[["a"]],"faces":[]})")), Error);
}

TEST(Serialize, HexagonJsonRoundTrip) {
  const HexagonLengths h = solve_from_alternating(0.3, 1.7, 2.9);
  const Json j = to_json(h);
  EXPECT_EQ(j["sides"].size(), 6u);
  EXPECT_EQ(j["perp"].size(), 3u);
  EXPECT_EQ(j["sides"].begin().key(), "a");
  const HexagonLengths back = hexagon_from_json(Json::parse(j.dump()));
  for (Arc x : kArcs) EXPECT_EQ(back[x], h[x]);
}

TEST(Serialize, TextInputs) {
  const FoliationClass f = parse_weights("alpha=1, b=1/2");
  EXPECT_EQ(f.weight(Arc::alpha), 1);
  EXPECT_EQ(f.weight(Arc::b), Rational(1, 2));
  EXPECT_THROW(parse_weights("alpha=1,A=1"), Error);
  EXPECT_THROW(parse_weights("alpha"), Error);
  EXPECT_THROW(parse_weights("a=1,a=2"), Error);
  EXPECT_EQ(parse_rational_triple("1/2,3,0.25"), (std::array<Rational, 3>{Rational(1, 2), 3, Rational(1, 4)}));
  EXPECT_THROW(parse_rational_triple("1,2"), Error);
  EXPECT_EQ(parse_length_triple("1.5,2,3e-2"), (std::array<double, 3>{1.5, 2, 0.03}));
  EXPECT_THROW(parse_length_triple("1,2,x"), Error);
  EXPECT_THROW(parse_length_triple("1,,2"), Error);
}

TEST(Serialize, Csv) {
  const std::string csv = hexagon_csv(solve_from_alternating(1, 1, 1));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "a,C,b,A,c,B,alpha,beta,gamma");
  LimitStep step;
  step.n = 3;
  step.hexagon = solve_from_alternating(3, 3, 3);
  step.normalized = {1, 0, 0, 0, 0, 0};
  const std::string trace = trace_csv({step});
  EXPECT_EQ(trace.substr(0, trace.find('\n')),
            "n,a,C,b,A,c,B,alpha,beta,gamma,p_a,p_b,p_c,p_A,p_B,p_C");
  EXPECT_EQ(trace.substr(trace.find('\n') + 1, 4), "3,3,");
}

TEST(Serialize, LimitJson) {
  LimitOptions opts;
  const SequenceSpec spec = SequenceSpec::parse("a=n;b=n;c=n");
  const Json j = to_json(diverges(spec), boundary_limit(spec, opts));
  EXPECT_EQ(j["diverges"], true);
  EXPECT_EQ(j["witness"], Json::parse(R"(["a","b","c"])"));
  EXPECT_EQ(j["chart"], Json::parse(R"(["a","b","c"])"));
  EXPECT_EQ(j["limit"].size(), 6u);
  EXPECT_TRUE(j.contains("collar_at_nmax"));
  EXPECT_FALSE(j.contains("trace"));
}
