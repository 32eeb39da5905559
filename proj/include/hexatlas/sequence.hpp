#pragma once

// One-parameter families of hexagons n -> lengths of an arc triple, each
// length of the form k1 e^n + k2 n + k3 + k4 / n with k_i >= 0.

#include <array>
#include <string>
#include <string_view>

#include "hexatlas/arcs.hpp"

namespace hexatlas {

enum class Growth { Zero, Bounded, Infinite };

std::string_view to_string(Growth g);

struct LengthExpression {
  double exp_coeff = 0;
  double linear_coeff = 0;
  double constant = 0;
  double inverse_coeff = 0;

  double operator()(double n) const;
  Growth growth() const;
  /// Parses "2*exp(n)+3", "n", "1/n", "0.5*n + 4/n", ...
  static LengthExpression parse(std::string_view text);
  std::string to_string() const;
};

struct SequenceSpec {
  ArcTriple triple;
  std::array<LengthExpression, 3> lengths;  // in the triple's canonical order

  /// "a=2*exp(n)+3; b=n; c=1/n". The three names must form an arc triple.
  static SequenceSpec parse(std::string_view text);
  std::string to_string() const;
  std::array<double, 3> at(double n) const;
};

}  // namespace hexatlas
