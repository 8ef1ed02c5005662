#include "enriques/spec_parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace enriques {
namespace {

struct Token {
  enum Kind { Number, X, Y, Caret, Plus, Star, LParen, RParen, Comma, End } kind;
  std::size_t position;
  std::string text;
  long value = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > std::numeric_limits<int>::max()) {
          throw ParseError("number too large", start);
        }
        ++i;
      }
      out.push_back({Token::Number, start, std::string(text.substr(start, i - start)), value});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case 'x': kind = Token::X; break;
      case 'y': kind = Token::Y; break;
      case '^': kind = Token::Caret; break;
      case '+': kind = Token::Plus; break;
      case '*': kind = Token::Star; break;
      case '(': kind = Token::LParen; break;
      case ')': kind = Token::RParen; break;
      case ',': kind = Token::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Token::End, text.size(), "end of input"});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  QuasihomogeneousSpec parse() {
    QuasihomogeneousSpec spec =
        peek().kind == Token::Number ? parse_tuple() : parse_polynomial();
    expect(Token::End, "end of input");
    if (spec.p > spec.q) {
      std::swap(spec.p, spec.q);
      std::swap(spec.k, spec.l);
    }
    return spec;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  const Token& expect(Token::Kind kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw ParseError(std::string("expected ") + what + " but found '" + t.text + "'",
                       t.position);
    }
    ++pos_;
    return t;
  }

  int number() { return static_cast<int>(expect(Token::Number, "a number").value); }

  QuasihomogeneousSpec parse_tuple() {
    QuasihomogeneousSpec spec;
    spec.k = number();
    expect(Token::Comma, "','");
    spec.l = number();
    expect(Token::Comma, "','");
    spec.p = number();
    expect(Token::Comma, "','");
    spec.q = number();
    return spec;
  }

  QuasihomogeneousSpec parse_polynomial() {
    QuasihomogeneousSpec spec{0, 0, 0, 0};
    bool has_factor = false;
    if (peek().kind == Token::X && peek(1).kind == Token::Star) {
      spec.k = 1;
      pos_ += 2;
      has_factor = true;
    }
    if (peek().kind == Token::Y && peek(1).kind == Token::Star) {
      spec.l = 1;
      pos_ += 2;
      has_factor = true;
    }
    const bool parenthesized = peek().kind == Token::LParen;
    if (has_factor && !parenthesized) expect(Token::LParen, "'('");
    if (parenthesized) ++pos_;

    std::optional<int> px, py;
    for (int term = 0; term < 2; ++term) {
      if (term == 1) expect(Token::Plus, "'+'");
      const Token& var = peek();
      if (var.kind != Token::X && var.kind != Token::Y) {
        throw ParseError("expected 'x' or 'y' but found '" + var.text + "'", var.position);
      }
      ++pos_;
      int exponent = 1;
      if (peek().kind == Token::Caret) {
        ++pos_;
        exponent = number();
      }
      auto& slot = var.kind == Token::X ? px : py;
      if (slot) throw ParseError("repeated variable '" + var.text + "'", var.position);
      slot = exponent;
    }
    if (parenthesized) expect(Token::RParen, "')'");
    spec.p = *px;
    spec.q = *py;
    return spec;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

QuasihomogeneousSpec parse_spec(std::string_view text) {
  auto spec = Parser(tokenize(text)).parse();
  spec.validate();
  return spec;
}

}  // namespace enriques
