#include <cctype>
#include <charconv>
#include <optional>

#include "optigraph/errors.hpp"
#include "optigraph/quantum.hpp"

namespace optigraph {

namespace {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' uint)*
// base   := number | 'i' | mode | '(' expr ')'
class ExprParser {
 public:
  ExprParser(const std::string& text, const std::vector<std::string>& modes)
      : text_(text), modes_(modes) {}

  FockPolynomial parse() {
    FockPolynomial result = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ExpressionError("bad state expression \"" + text_ + "\": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  FockPolynomial parse_expr() {
    bool negate = false;
    if (consume('-'))
      negate = true;
    else
      consume('+');
    FockPolynomial sum = parse_term();
    if (negate) sum *= Amplitude{-1.0, 0.0};
    while (true) {
      if (consume('+')) {
        sum += parse_term();
      } else if (consume('-')) {
        sum += Amplitude{-1.0, 0.0} * parse_term();
      } else {
        return sum;
      }
    }
  }

  FockPolynomial parse_term() {
    FockPolynomial product = parse_factor();
    while (consume('*')) product *= parse_factor();
    return product;
  }

  FockPolynomial parse_factor() {
    FockPolynomial base = parse_base();
    while (consume('^')) {
      const char c = peek();
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("exponent must be a nonnegative integer");
      int exponent = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        exponent = exponent * 10 + (text_[pos_++] - '0');
      FockPolynomial power = FockPolynomial::constant(base.modes(), {1.0, 0.0});
      for (int rep = 0; rep < exponent; ++rep) power *= base;
      base = std::move(power);
    }
    return base;
  }

  FockPolynomial parse_base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FockPolynomial inner = parse_expr();
      if (!consume(')')) fail("missing )");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value{};
      auto [next, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc{}) fail("bad number");
      pos_ = static_cast<std::size_t>(next - text_.data());
      return FockPolynomial::constant(modes_, {value, 0.0});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = parse_ident();
      if (auto index = resolve_mode(name)) return FockPolynomial::creation(modes_, *index);
      if (name == "i" || name == "j") return FockPolynomial::constant(modes_, {0.0, 1.0});
      fail("\"" + name + "\" is not an input mode");
    }
    fail("expected a number, mode name, or (");
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::optional<std::size_t> resolve_mode(const std::string& name) const {
    for (std::size_t i = 0; i < modes_.size(); ++i)
      if (modes_[i] == name) return i;
    // unique case-insensitive match, so "a*b" addresses modes A and B
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      if (modes_[i].size() != name.size()) continue;
      bool equal = true;
      for (std::size_t k = 0; k < name.size(); ++k)
        if (std::tolower(static_cast<unsigned char>(modes_[i][k])) !=
            std::tolower(static_cast<unsigned char>(name[k]))) {
          equal = false;
          break;
        }
      if (equal) {
        if (found) return std::nullopt;  // ambiguous
        found = i;
      }
    }
    return found;
  }

  const std::string& text_;
  const std::vector<std::string>& modes_;
  std::size_t pos_ = 0;
};

}  // namespace

FockPolynomial parse_fock_expression(const std::string& text,
                                     const std::vector<std::string>& modes) {
  return ExprParser(text, modes).parse();
}

}  // namespace optigraph
