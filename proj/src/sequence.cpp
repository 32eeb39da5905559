#include "hexatlas/sequence.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "hexatlas/error.hpp"

namespace hexatlas {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_coefficient(const std::string& text, std::string_view context) {
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value) || value < 0)
    throw Error(ErrorKind::Parse, "bad coefficient '" + text + "' in '" + std::string(context) + "'");
  return value;
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::string_view to_string(Growth g) {
  switch (g) {
    case Growth::Zero: return "0";
    case Growth::Bounded: return "K";
    case Growth::Infinite: return "inf";
  }
  return "?";
}

double LengthExpression::operator()(double n) const {
  double value = constant;
  if (exp_coeff > 0) value += exp_coeff * std::exp(n);
  if (linear_coeff > 0) value += linear_coeff * n;
  if (inverse_coeff > 0) value += inverse_coeff / n;
  return value;
}

Growth LengthExpression::growth() const {
  if (exp_coeff > 0 || linear_coeff > 0) return Growth::Infinite;
  if (constant > 0) return Growth::Bounded;
  return Growth::Zero;
}

LengthExpression LengthExpression::parse(std::string_view text) {
  const std::string body = strip(text);
  if (body.empty()) throw Error(ErrorKind::Parse, "empty length expression");
  LengthExpression e;
  for (const std::string& term : split(body, '+')) {
    if (term.empty()) throw Error(ErrorKind::Parse, "empty term in '" + body + "'");
    std::string coeff = "1";
    std::string atom = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff = term.substr(0, star);
      atom = term.substr(star + 1);
    } else if (term.size() > 2 && term.compare(term.size() - 2, 2, "/n") == 0) {
      coeff = term.substr(0, term.size() - 2);
      atom = "1/n";
    }
    const double k = parse_coefficient(coeff, body);
    if (atom == "exp(n)") {
      e.exp_coeff += k;
    } else if (atom == "n") {
      e.linear_coeff += k;
    } else if (atom == "1/n") {
      e.inverse_coeff += k;
    } else if (term.find('*') == std::string::npos) {
      e.constant += parse_coefficient(term, body);
    } else {
      throw Error(ErrorKind::Parse, "unknown term '" + term + "'; use exp(n), n, 1/n or a constant");
    }
  }
  if (e.exp_coeff + e.linear_coeff + e.constant + e.inverse_coeff <= 0)
    throw Error(ErrorKind::Parse, "length expression '" + body + "' is not positive");
  return e;
}

std::string LengthExpression::to_string() const {
  std::string out;
  auto add = [&](double k, const char* atom) {
    if (k == 0) return;
    if (!out.empty()) out += '+';
    if (atom == nullptr) {
      out += format_number(k);
    } else if (k == 1) {
      out += atom;
    } else if (std::string_view(atom) == "1/n") {
      out += format_number(k) + "/n";
    } else {
      out += format_number(k) + "*" + atom;
    }
  };
  add(exp_coeff, "exp(n)");
  add(linear_coeff, "n");
  add(constant, nullptr);
  add(inverse_coeff, "1/n");
  return out;
}

SequenceSpec SequenceSpec::parse(std::string_view text) {
  std::vector<std::pair<Arc, LengthExpression>> parts;
  for (const std::string& piece : split(std::string(text), ';')) {
    const std::string item = strip(piece);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Parse, "expected name=expression, got '" + item + "'");
    parts.emplace_back(parse_arc_or_throw(item.substr(0, eq)),
                       LengthExpression::parse(item.substr(eq + 1)));
  }
  if (parts.size() != 3)
    throw Error(ErrorKind::Parse, "a sequence needs exactly three lengths");
  const ArcTriple t = ArcTriple::from_arcs(parts[0].first, parts[1].first, parts[2].first);
  SequenceSpec spec{t, {}};
  for (const auto& [x, e] : parts) spec.lengths[*t.position(x)] = e;
  return spec;
}

std::string SequenceSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += "; ";
    out += std::string(arc_name(triple[i])) + "=" + lengths[i].to_string();
  }
  return out;
}

std::array<double, 3> SequenceSpec::at(double n) const {
  return {lengths[0](n), lengths[1](n), lengths[2](n)};
}

}  // namespace hexatlas
