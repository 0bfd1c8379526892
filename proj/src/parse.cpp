#include "triang/parse.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>

#include "triang/errors.hpp"

namespace triang {

// --------------------------------------------------------------------- AST

namespace ast {

namespace {

struct Evaluator {
  Polynomial operator()(const Literal& n) const { return Polynomial(n.value); }
  Polynomial operator()(const Variable& v) const { return Polynomial::variable(v.index); }
  Polynomial operator()(const Sum& s) const { return evaluate(*s.lhs) + evaluate(*s.rhs); }
  Polynomial operator()(const Difference& d) const {
    return evaluate(*d.lhs) - evaluate(*d.rhs);
  }
  Polynomial operator()(const Product& p) const { return evaluate(*p.lhs) * evaluate(*p.rhs); }
  Polynomial operator()(const Power& p) const { return evaluate(*p.base).pow(p.exponent); }
  Polynomial operator()(const Negation& n) const { return -evaluate(*n.operand); }
};

}  // namespace

Polynomial evaluate(const Expr& expr) { return std::visit(Evaluator{}, expr.node); }

}  // namespace ast

// ------------------------------------------------------------------ parser

namespace {

template <typename Node>
ast::ExprPtr make_node(Node node) {
  return std::make_unique<ast::Expr>(ast::Expr{std::move(node)});
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  ast::ExprPtr parse() {
    auto expr = poly();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_ + pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class natural(const char* what) {
    if (!peek_digit()) fail(std::string("expected ") + what);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t exponent() {
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == '-') fail("negative exponent");
      if (text_[pos_] == '(') fail("exponent must be a non-negative integer literal");
    }
    const mpz_class e = natural("exponent");
    if (pos_ < text_.size() && text_[pos_] == '.') fail("fractional exponent");
    if (e > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
    return static_cast<std::uint32_t>(e.get_ui());
  }

  ast::ExprPtr poly() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_node(ast::Sum{std::move(lhs), term()});
      } else if (accept('-')) {
        lhs = make_node(ast::Difference{std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  ast::ExprPtr term() {
    auto lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = make_node(ast::Product{std::move(lhs), factor()});
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const mpz_class d = natural("integer divisor");
        if (d == 0) {
          pos_ = at;
          fail("division by zero");
        }
        auto inverse = make_node(ast::Literal{Rational(mpz_class(1), d)});
        lhs = make_node(ast::Product{std::move(lhs), std::move(inverse)});
      } else {
        return lhs;
      }
    }
  }

  ast::ExprPtr factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    ast::ExprPtr base;
    if (c == '-') {
      ++pos_;
      return make_node(ast::Negation{factor()});
    }
    if (c == '(') {
      ++pos_;
      base = poly();
      if (!accept(')')) fail("expected ')'");
    } else if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected variable index after 'x'");
      }
      const std::size_t at = pos_;
      const mpz_class index = natural("variable index");
      if (index == 0) {
        pos_ = at;
        fail("variable index must be >= 1");
      }
      if (index > 1000000) fail("variable index too large");
      base = make_node(ast::Variable{index.get_ui()});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class value = natural("number");
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported");
      return make_node(ast::Literal{Rational(value)});
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (accept('^')) base = make_node(ast::Power{std::move(base), exponent()});
    return base;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace

ast::ExprPtr parse_expression(std::string_view text, std::size_t line, std::size_t column) {
  return ExpressionParser(text, line, column).parse();
}

Polynomial parse_polynomial(std::string_view text) {
  return ast::evaluate(*parse_expression(text));
}

// ------------------------------------------------------------ block format

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (!text.empty() || number == 1) {
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    const std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, raw});
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
    ++number;
  }
  return out;
}

std::size_t column_of(const Line& line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.text.data()) + 1;
}

std::optional<std::size_t> header_dimension(const Line& line) {
  std::string_view t = trim(line.text);
  if (t.empty() || t.front() != 'n') return std::nullopt;
  t = trim(t.substr(1));
  if (t.empty() || t.front() != '=') return std::nullopt;
  t = trim(t.substr(1));
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
  if (ec != std::errc() || ptr != t.data() + t.size() || n == 0) {
    throw ParseError("header must be n=<positive integer>", line.number, column_of(line, t));
  }
  return n;
}

// Parses "<prefix><i> <arrow> <polynomial>" and returns (i, polynomial).
std::pair<std::size_t, Polynomial> mapping_line(const Line& line, std::string_view prefix,
                                                std::string_view arrow) {
  std::string_view t = trim(line.text);
  if (!t.starts_with(prefix)) {
    throw ParseError("expected '" + std::string(prefix) + "<i> " + std::string(arrow) + " ...'",
                     line.number, column_of(line, t));
  }
  std::string_view rest = t.substr(prefix.size());
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (ec != std::errc() || index == 0) {
    throw ParseError("expected a variable index >= 1", line.number, column_of(line, rest));
  }
  rest = trim(rest.substr(static_cast<std::size_t>(ptr - rest.data())));
  if (!rest.starts_with(arrow)) {
    throw ParseError("expected '" + std::string(arrow) + "'", line.number, column_of(line, rest));
  }
  rest = rest.substr(arrow.size());
  auto expr = parse_expression(rest, line.number, column_of(line, rest));
  return {index, ast::evaluate(*expr)};
}

// Splits lines into blocks of (n, mapping lines) and collects each block's
// polynomials indexed by coordinate.
template <typename Build>
auto parse_blocks(std::string_view text, std::string_view prefix, std::string_view arrow,
                  Build build) {
  const auto lines = significant_lines(text);
  using Result = decltype(build(std::size_t{}, std::vector<Polynomial>{}, std::vector<Line>{}));
  std::vector<Result> out;
  if (lines.empty()) throw InputError("empty input: expected an n=<int> header");

  std::size_t i = 0;
  while (i < lines.size()) {
    const auto n = header_dimension(lines[i]);
    if (!n) throw ParseError("expected n=<int> header", lines[i].number, 1);
    const Line header = lines[i++];
    std::vector<std::optional<Polynomial>> slots(*n);
    std::vector<Line> where(*n, header);
    while (i < lines.size() && !header_dimension(lines[i])) {
      auto [index, poly] = mapping_line(lines[i], prefix, arrow);
      if (index > *n) {
        throw ParseError("index " + std::to_string(index) + " exceeds n=" + std::to_string(*n),
                         lines[i].number, 1);
      }
      if (slots[index - 1]) {
        throw ParseError("duplicate line for index " + std::to_string(index), lines[i].number, 1);
      }
      if (poly.max_variable() > *n) {
        throw ParseError("polynomial mentions x" + std::to_string(poly.max_variable()) +
                             " but n=" + std::to_string(*n),
                         lines[i].number, 1);
      }
      slots[index - 1] = std::move(poly);
      where[index - 1] = lines[i];
      ++i;
    }
    std::vector<Polynomial> polys;
    for (std::size_t k = 0; k < *n; ++k) {
      if (!slots[k]) {
        throw ParseError("missing line for index " + std::to_string(k + 1), header.number, 1);
      }
      polys.push_back(slots[k]->with_ambient(*n));
    }
    out.push_back(build(*n, std::move(polys), where));
  }
  return out;
}

TriangularAutomorphism build_automorphism(std::size_t n, std::vector<Polynomial> coords,
                                          const std::vector<Line>& where) {
  std::vector<Rational> lambdas;
  std::vector<Polynomial> tails;
  for (std::size_t i = 1; i <= n; ++i) {
    const Polynomial& f = coords[i - 1];
    const Monomial xi = Monomial::variable(i);
    const Rational lambda = f.coefficient(xi);
    Polynomial h = f - Polynomial(xi, lambda, n);
    if (sgn(lambda) == 0 || h.max_variable() >= i) {
      throw InputError("line " + std::to_string(where[i - 1].number) + ": coordinate " +
                       std::to_string(i) + " (" + to_string(f) +
                       ") is not triangular: expected lambda*x" + std::to_string(i) +
                       " plus a polynomial in x1..x" + std::to_string(i - 1) +
                       " with lambda nonzero");
    }
    lambdas.push_back(lambda);
    tails.push_back(std::move(h));
  }
  return TriangularAutomorphism::make(n, std::move(lambdas), std::move(tails));
}

TriangularDerivation build_derivation(std::size_t n, std::vector<Polynomial> coeffs,
                                      const std::vector<Line>& where) {
  for (std::size_t i = 1; i <= n; ++i) {
    if (coeffs[i - 1].max_variable() >= i) {
      throw InputError("line " + std::to_string(where[i - 1].number) + ": coefficient of dx" +
                       std::to_string(i) + " (" + to_string(coeffs[i - 1]) +
                       ") is not triangular: only x1..x" + std::to_string(i - 1) +
                       " may appear");
    }
  }
  return TriangularDerivation::make(n, std::move(coeffs));
}

template <typename T>
T exactly_one(std::vector<T> items, const char* what) {
  if (items.size() != 1) {
    throw InputError(std::string("expected exactly one ") + what + ", found " +
                     std::to_string(items.size()));
  }
  return std::move(items.front());
}

}  // namespace

std::vector<TriangularAutomorphism> parse_automorphisms(std::string_view text) {
  return parse_blocks(text, "x", "->", build_automorphism);
}

TriangularAutomorphism parse_automorphism(std::string_view text) {
  return exactly_one(parse_automorphisms(text), "automorphism");
}

std::vector<TriangularDerivation> parse_derivations(std::string_view text) {
  return parse_blocks(text, "dx", "<-", build_derivation);
}

TriangularDerivation parse_derivation(std::string_view text) {
  return exactly_one(parse_derivations(text), "derivation");
}

std::string format_automorphism(const TriangularAutomorphism& phi) {
  std::string out = "n=" + std::to_string(phi.dimension()) + "\n";
  for (std::size_t i = 1; i <= phi.dimension(); ++i) {
    out += "x" + std::to_string(i) + " -> " + to_string(phi.coordinate(i)) + "\n";
  }
  return out;
}

std::string format_derivation(const TriangularDerivation& d) {
  std::string out = "n=" + std::to_string(d.dimension()) + "\n";
  for (std::size_t i = 1; i <= d.dimension(); ++i) {
    out += "dx" + std::to_string(i) + " <- " + to_string(d.coefficient(i)) + "\n";
  }
  return out;
}

}  // namespace triang
