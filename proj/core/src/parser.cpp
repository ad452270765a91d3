#include "lpdo/parser.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "lpdo/errors.hpp"

namespace lpdo {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t line = line_;
      const std::size_t col = col_;
      if (pos_ >= s_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const unsigned char c = static_cast<unsigned char>(s_[pos_]);
      if (std::isdigit(c)) {
        std::string text;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) text += next();
        out.push_back({Tok::Number, text, line, col});
      } else if (std::isalpha(c) || c == '_') {
        std::string text;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
          text += next();
        }
        out.push_back({Tok::Ident, text, line, col});
      } else if (starts_with("\xE2\x88\x82")) {  // ∂
        advance_bytes(3);
        if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y')) {
          out.push_back({Tok::Ident, std::string("D") + next(), line, col});
        } else {
          throw ParseError(line, col, "expected x or y after the partial sign");
        }
      } else if (starts_with("\xE2\x88\x92")) {  // U+2212 minus
        advance_bytes(3);
        out.push_back({Tok::Minus, "-", line, col});
      } else {
        Tok kind;
        switch (c) {
          case '+':
            kind = Tok::Plus;
            break;
          case '-':
            kind = Tok::Minus;
            break;
          case '*':
            kind = Tok::Star;
            break;
          case '/':
            kind = Tok::Slash;
            break;
          case '^':
            kind = Tok::Caret;
            break;
          case '(':
            kind = Tok::LParen;
            break;
          case ')':
            kind = Tok::RParen;
            break;
          default:
            throw ParseError(line, col, "unexpected character '" + utf8_char() + "'");
        }
        out.push_back({kind, std::string(1, next()), line, col});
      }
    }
  }

private:
  bool starts_with(std::string_view p) const { return s_.substr(pos_, p.size()) == p; }

  char next() {
    const char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++col_;
    }
    return c;
  }

  void advance_bytes(std::size_t n) {
    pos_ += n;
    ++col_;
  }

  std::string utf8_char() const {
    std::size_t end = pos_ + 1;
    while (end < s_.size() && (static_cast<unsigned char>(s_[end]) & 0xC0) == 0x80) ++end;
    return std::string(s_.substr(pos_, end - pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) next();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
public:
  Parser(std::vector<Token> toks, const ParseOptions& options) : toks_(std::move(toks)), options_(options) {}

  LPDO parse() {
    if (peek().kind == Tok::End) error(peek(), "empty expression");
    LPDO out = expression();
    if (peek().kind != Tok::End) error(peek(), "unexpected '" + peek().text + "'");
    return out;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] static void error(const Token& t, const std::string& what) {
    throw ParseError(t.line, t.column, what);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) error(peek(), std::string("expected ") + what);
    take();
  }

  LPDO expression() {
    LPDO acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      LPDO rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  LPDO term() {
    LPDO acc = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = take();
      const Token& at = peek();
      LPDO rhs = unary();
      if (op.kind == Tok::Star) {
        acc = compose(acc, rhs);
        continue;
      }
      if (rhs.order() > 0) error(at, "cannot divide by a differential operator");
      const RatExpr d = rhs.coeff(0, 0);
      if (d.is_zero()) error(at, "division by zero");
      if (acc.order() > 0 && !d.is_constant()) {
        error(at, "an operator can only be divided by a constant");
      }
      acc = d.inverse() * acc;
    }
    return acc;
  }

  LPDO unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      take();
      return unary();
    }
    return factor();
  }

  LPDO factor() {
    LPDO base = atom();
    if (peek().kind != Tok::Caret) return base;
    take();
    const Token& e = peek();
    if (e.kind != Tok::Number) error(e, "expected a positive integer exponent");
    take();
    if (e.text.size() > 4) error(e, "exponent too large");
    const int n = std::stoi(e.text);
    if (n < 1) error(e, "expected a positive integer exponent");
    if (base.order() <= 0) return LPDO(base.coeff(0, 0).pow(static_cast<unsigned>(n)));
    LPDO out = base;
    for (int i = 1; i < n; ++i) out = compose(out, base);
    return out;
  }

  LPDO atom() {
    const Token t = take();
    switch (t.kind) {
      case Tok::Number:
        return LPDO(RatExpr(mpq_class(mpz_class(t.text))));
      case Tok::LParen: {
        LPDO inner = expression();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return identifier(t);
      case Tok::End:
        error(t, "unexpected end of input");
      default:
        error(t, "unexpected '" + t.text + "'");
    }
  }

  LPDO identifier(const Token& t) {
    const std::string& name = t.text;
    if (name == "x") return LPDO(RatExpr::x());
    if (name == "y") return LPDO(RatExpr::y());
    if (name == "i") return LPDO(RatExpr(ConstScalar::imaginary_unit()));
    if (name == "Dx") return LPDO::dx();
    if (name == "Dy") return LPDO::dy();
    if (name == "sqrt") return sqrt_call();
    const bool declared =
        std::find(options_.parameters.begin(), options_.parameters.end(), name) != options_.parameters.end();
    if (declared || (options_.implicit_parameters && !Symbol::is_reserved(name) && name.front() != '_')) {
      try {
        return LPDO(RatExpr::parameter(name));
      } catch (const std::invalid_argument& e) {
        error(t, e.what());
      }
    }
    error(t, "unknown symbol '" + name + "'");
  }

  LPDO sqrt_call() {
    expect(Tok::LParen, "'(' after sqrt");
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    const Token& n = peek();
    if (n.kind != Tok::Number) error(n, "sqrt takes an integer argument");
    take();
    expect(Tok::RParen, "')'");
    mpz_class v(n.text);
    if (negative) v = -v;
    auto r = ConstScalar(mpq_class(v)).sqrt();
    if (!r) error(n, "cannot take the square root of " + v.get_str());
    return LPDO(RatExpr(*r));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
};

}  // namespace

LPDO parse_operator(std::string_view text, const ParseOptions& options) {
  for (const auto& p : options.parameters) Symbol::parameter(p);
  return Parser(Lexer(text).run(), options).parse();
}

RatExpr parse_function(std::string_view text, const ParseOptions& options) {
  const LPDO a = parse_operator(text, options);
  if (a.order() > 0) throw ParseError(1, 1, "expected a function, found a differential operator");
  return a.coeff(0, 0);
}

std::vector<std::string> split_parameters(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

}  // namespace lpdo
