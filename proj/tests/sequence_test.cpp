#include <gtest/gtest.h>

#include <cmath>

#include "hexatlas/error.hpp"
#include "hexatlas/sequence.hpp"

using namespace hexatlas;

namespace {

ErrorKind parse_error(const char* text) {
  try {
    SequenceSpec::parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalConsistency;
}

}  // namespace

TEST(Sequence, ParsesAllTermKinds) {
  const SequenceSpec s = SequenceSpec::parse("a=2*exp(n)+3; b=n; c=1/n");
  EXPECT_EQ(s.triple, ArcTriple::parse("a,b,c"));
  EXPECT_DOUBLE_EQ(s.lengths[0].exp_coeff, 2);
  EXPECT_DOUBLE_EQ(s.lengths[0].constant, 3);
  EXPECT_DOUBLE_EQ(s.lengths[1].linear_coeff, 1);
  EXPECT_DOUBLE_EQ(s.lengths[2].inverse_coeff, 1);
  const auto v = s.at(2);
  EXPECT_DOUBLE_EQ(v[0], 2 * std::exp(2.0) + 3);
  EXPECT_DOUBLE_EQ(v[1], 2);
  EXPECT_DOUBLE_EQ(v[2], 0.5);
}

TEST(Sequence, ReordersToCanonicalTriple) {
  const SequenceSpec s = SequenceSpec::parse("gamma = 0.5*n + 4/n ; b=1;a=exp(n)");
  EXPECT_EQ(s.triple.to_string(), "a,b,gamma");
  EXPECT_DOUBLE_EQ(s.lengths[0].exp_coeff, 1);
  EXPECT_DOUBLE_EQ(s.lengths[1].constant, 1);
  EXPECT_DOUBLE_EQ(s.lengths[2].linear_coeff, 0.5);
  EXPECT_DOUBLE_EQ(s.lengths[2].inverse_coeff, 4);
  EXPECT_EQ(s.to_string(), "a=exp(n); b=1; gamma=0.5*n+4/n");
  const SequenceSpec again = SequenceSpec::parse(s.to_string());
  EXPECT_EQ(again.to_string(), s.to_string());
}

TEST(Sequence, Growth) {
  EXPECT_EQ(LengthExpression::parse("exp(n)").growth(), Growth::Infinite);
  EXPECT_EQ(LengthExpression::parse("1/n+0.1*n").growth(), Growth::Infinite);
  EXPECT_EQ(LengthExpression::parse("3+1/n").growth(), Growth::Bounded);
  EXPECT_EQ(LengthExpression::parse("2/n").growth(), Growth::Zero);
  EXPECT_EQ(to_string(Growth::Infinite), "inf");
}

TEST(Sequence, Rejects) {
  EXPECT_EQ(parse_error("a=n;b=n"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("a=n;b=n;c=n^2"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("a=n;b=n;c=-1"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("a=n;b=n;c=0"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("a=n;b=n;d=n"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("a=n;b=n;c"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("a=n;b=n;alpha=n"), ErrorKind::InvalidTriple);
  EXPECT_EQ(parse_error("a=n;b=n;c=n+"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("a=n;b=n;c=2*sin(n)"), ErrorKind::Parse);
}
