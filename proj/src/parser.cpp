#include "cclab/parser.hpp"

#include <cctype>
#include <vector>

namespace cclab {

const char* to_string(ParseDiagnostic::Kind kind) {
  switch (kind) {
    case ParseDiagnostic::Kind::lex:
      return "lex";
    case ParseDiagnostic::Kind::syntax:
      return "syntax";
    case ParseDiagnostic::Kind::semantic:
      return "semantic";
  }
  return "unknown";
}

namespace {

std::string describe(const ParseDiagnostic& d, const std::string& component) {
  std::string s = std::string(to_string(d.kind)) + " error at offset " + std::to_string(d.byte_offset) + ": " + d.message;
  if (!component.empty()) s = component + ": " + s;
  return s;
}

}  // namespace

ParseError::ParseError(ParseDiagnostic diag, std::string component)
    : Error("expr_parser", describe(diag, component)), diag_(std::move(diag)), component_(std::move(component)) {}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

using Kind = ParseDiagnostic::Kind;

[[noreturn]] void fail(std::size_t offset, Kind kind, std::string message) {
  throw ParseError(ParseDiagnostic{offset, std::move(message), kind});
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(c)) {
      while (i < s.size() && digit(s[i])) ++i;
      if (i < s.size() && (ident_char(s[i]) || s[i] == '.'))
        fail(start, Kind::lex, "malformed numeric literal");
      out.push_back({Tok::number, start, s.substr(start, i - start)});
      continue;
    }
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::ident, start, s.substr(start, i - start)});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        fail(start, Kind::lex, "unexpected character");
    }
    out.push_back({k, start, s.substr(start, 1)});
    ++i;
  }
  out.push_back({Tok::end, s.size(), {}});
  return out;
}

std::size_t coefficient_bits(const Poly2& p) {
  std::size_t bits = 0;
  for (const auto& [e, c] : p.terms()) {
    const std::size_t b = mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
    bits = std::max(bits, b);
  }
  return bits;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const VarNames& vars, const ParserLimits& limits)
      : toks_(std::move(toks)), vars_(vars), limits_(limits) {}

  Poly2 parse() {
    Poly2 p = expr();
    if (peek().kind != Tok::end) {
      if (peek().kind == Tok::rparen) fail(peek().offset, Kind::syntax, "unbalanced ')'");
      if (peek().kind == Tok::number || peek().kind == Tok::ident || peek().kind == Tok::lparen)
        fail(peek().offset, Kind::syntax, "missing operator (multiplication must be written with '*')");
      fail(peek().offset, Kind::syntax, "unexpected token");
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser, std::size_t offset) : p(parser) {
      if (++p.depth_ > p.limits_.max_nesting) fail(offset, Kind::semantic, "expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  void check_size(const Poly2& p, std::size_t offset) {
    if (coefficient_bits(p) > limits_.max_coefficient_bits) fail(offset, Kind::semantic, "coefficient too large");
  }

  Poly2 expr() {
    DepthGuard guard(*this, peek().offset);
    Poly2 acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool add = next().kind == Tok::plus;
      Poly2 rhs = term();
      if (add)
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  Poly2 term() {
    Poly2 acc = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = next();
      const std::size_t rhs_offset = peek().offset;
      Poly2 rhs = unary();
      if (op.kind == Tok::star) {
        if (!acc.is_zero() && !rhs.is_zero() && acc.total_degree() + rhs.total_degree() > limits_.max_degree)
          fail(op.offset, Kind::semantic, "polynomial degree exceeds limit");
        acc = acc * rhs;
        check_size(acc, op.offset);
      } else {
        if (!rhs.is_constant()) fail(rhs_offset, Kind::semantic, "division by a non-constant expression");
        const Rational d = rhs.coefficient({0, 0});
        if (sgn(d) == 0) fail(rhs_offset, Kind::semantic, "division by zero");
        acc *= Rational(1 / d);
        check_size(acc, op.offset);
      }
    }
    return acc;
  }

  Poly2 unary() {
    DepthGuard guard(*this, peek().offset);
    if (peek().kind == Tok::minus) {
      next();
      return -unary();
    }
    return power();
  }

  Poly2 power() {
    Poly2 base = primary();
    if (peek().kind != Tok::caret) return base;
    const Token& caret = next();
    const std::size_t exp_offset = peek().offset;
    const Poly2 e = unary();
    if (!e.is_constant()) fail(exp_offset, Kind::semantic, "exponent must be a constant");
    const Rational ev = e.coefficient({0, 0});
    if (ev.get_den() != 1) fail(exp_offset, Kind::semantic, "exponent must be an integer");
    if (sgn(ev) < 0) fail(exp_offset, Kind::semantic, "exponent must be nonnegative");
    if (ev > limits_.max_exponent) fail(exp_offset, Kind::semantic, "exponent exceeds limit");
    const auto k = static_cast<unsigned>(ev.get_num().get_ui());
    if (base.total_degree() > 0 && static_cast<long>(base.total_degree()) * k > static_cast<long>(limits_.max_degree))
      fail(caret.offset, Kind::semantic, "polynomial degree exceeds limit");
    if (base.is_constant() && coefficient_bits(base) * k > limits_.max_coefficient_bits)
      fail(caret.offset, Kind::semantic, "coefficient too large");
    Poly2 r = pow(base, k);
    check_size(r, caret.offset);
    return r;
  }

  Poly2 primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number:
        return Poly2(vars_, Rational(BigInt(std::string(t.text), 10)));
      case Tok::ident:
        if (t.text == vars_[0]) return Poly2::variable(vars_, 0);
        if (t.text == vars_[1]) return Poly2::variable(vars_, 1);
        fail(t.offset, Kind::semantic, "unknown identifier '" + std::string(t.text) + "'");
      case Tok::lparen: {
        Poly2 inner = expr();
        if (peek().kind != Tok::rparen) fail(t.offset, Kind::syntax, "unbalanced '('");
        next();
        return inner;
      }
      case Tok::end:
        fail(t.offset, Kind::syntax, "unexpected end of input");
      case Tok::rparen:
        fail(t.offset, Kind::syntax, "unbalanced ')'");
      default:
        fail(t.offset, Kind::syntax, "expected a number, variable or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  const VarNames& vars_;
  const ParserLimits& limits_;
};

}  // namespace

Poly2 parse_polynomial(std::string_view text, const VarNames& vars, const ParserLimits& limits) {
  Parser parser(lex(text), vars, limits);
  return parser.parse();
}

}  // namespace cclab
