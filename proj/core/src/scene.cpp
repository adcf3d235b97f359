#include "optigraph/scene.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "optigraph/errors.hpp"

namespace optigraph {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

double parse_number(Cursor& c) {
  c.skip_ws();
  const char* begin = c.text.data() + c.pos;
  const char* end = c.text.data() + c.text.size();
  double value{};
  auto [next, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{}) throw SceneError("bad number in pathlength expression: \"" + c.text + "\"");
  c.pos = static_cast<std::size_t>(next - c.text.data());
  return value;
}

std::string parse_ident(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.text.size() &&
         (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '_'))
    ++c.pos;
  if (c.pos == start) throw SceneError("bad pathlength expression: \"" + c.text + "\"");
  return c.text.substr(start, c.pos - start);
}

}  // namespace

double PathLength::resolve(const std::map<std::string, double>& params) const {
  double value = constant;
  for (const auto& [name, factor] : terms) {
    auto it = params.find(name);
    if (it == params.end()) throw SceneError("pathlength references unknown parameter \"" + name + "\"");
    value += factor * it->second;
  }
  return value;
}

PathLength PathLength::parse(const std::string& text) {
  // term ::= [number ['*']] [ident] ; expr ::= ['-'] term (('+'|'-') term)*
  PathLength result;
  Cursor c{text};
  double sign = 1.0;
  if (c.peek() == '+' || c.peek() == '-') {
    sign = c.peek() == '-' ? -1.0 : 1.0;
    ++c.pos;
  }
  while (true) {
    double factor = sign;
    bool saw_number = false, saw_star = false;
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      factor = sign * parse_number(c);
      saw_number = true;
      if (c.peek() == '*') {
        ++c.pos;
        saw_star = true;
      }
    }
    ch = c.peek();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      result.terms.emplace_back(parse_ident(c), factor);
    } else if (saw_number && !saw_star) {
      result.constant += factor;
    } else {
      throw SceneError("bad pathlength expression: \"" + text + "\"");
    }
    if (c.done()) break;
    ch = c.peek();
    if (ch != '+' && ch != '-') throw SceneError("bad pathlength expression: \"" + text + "\"");
    sign = ch == '-' ? -1.0 : 1.0;
    ++c.pos;
  }
  return result;
}

std::string PathLength::to_string() const {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  bool first = true;
  for (const auto& [name, factor] : terms) {
    if (!first) out << (factor < 0 ? " - " : " + ");
    const double mag = first ? factor : std::abs(factor);
    first = false;
    if (mag != 1.0) out << mag << "*";
    out << name;
  }
  if (constant != 0.0 || first) {
    if (!first) out << (constant < 0 ? " - " : " + ");
    out << (first ? constant : std::abs(constant));
  }
  return out.str();
}

OpticalGraph assemble_scene(const SceneSpec& spec, const EvalContext& ctx) {
  OpticalGraph g;
  std::map<std::string, StateId> ids;
  for (const std::string& label : spec.states) ids.emplace(label, g.add_state(label));

  const auto lookup = [&](const std::string& label) {
    auto it = ids.find(label);
    if (it == ids.end()) throw SceneError("edge references undeclared state \"" + label + "\"");
    return it->second;
  };

  for (const auto& e : spec.edges) {
    if (!is_finite(e.coeff)) throw SceneError("non-finite coefficient on edge " + e.from + " -> " + e.to);
    const WeightMonomial w{e.coeff, e.pathlength.resolve(spec.params)};
    g.add_edge(lookup(e.from), lookup(e.to), w.evaluate(ctx));
  }
  for (const std::string& label : spec.inputs) {
    auto it = ids.find(label);
    if (it == ids.end()) throw SceneError("undeclared input state \"" + label + "\"");
    g.add_input(it->second);
  }
  for (const std::string& label : spec.outputs) {
    auto it = ids.find(label);
    if (it == ids.end()) throw SceneError("undeclared output state \"" + label + "\"");
    g.add_output(it->second);
  }
  return g;
}

}  // namespace optigraph
