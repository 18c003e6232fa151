#include "pls/parser.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "pls/error.hpp"

namespace pls {

namespace {

enum class Tok { Atom, Top, Bot, Neg, And, Or, Sup, DualSup, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= input_.size()) {
        out.push_back({Tok::End, "", pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < input_.size() &&
           (input_[pos_] == ' ' || input_[pos_] == '\t' || input_[pos_] == '\n' ||
            input_[pos_] == '\r'))
      ++pos_;
  }

  Token next() {
    const std::size_t start = pos_;
    const char c = input_[pos_];
    switch (c) {
      case '~': ++pos_; return {Tok::Neg, "~", start};
      case '&': ++pos_; return {Tok::And, "&", start};
      case '|': ++pos_; return {Tok::Sup, "|", start};
      case '@': ++pos_; return {Tok::DualSup, "@", start};
      case '(': ++pos_; return {Tok::LParen, "(", start};
      case ')': ++pos_; return {Tok::RParen, ")", start};
      case '\\':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '/') {
          pos_ += 2;
          return {Tok::Or, "\\/", start};
        }
        throw ParseError("expected '/' after '\\'", start);
      case '-':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Tok::Implies, "->", start};
        }
        throw ParseError("expected '>' after '-'", start);
      case '<':
        if (pos_ + 2 < input_.size() && input_[pos_ + 1] == '-' && input_[pos_ + 2] == '>') {
          pos_ += 3;
          return {Tok::Iff, "<->", start};
        }
        throw ParseError("expected '->' after '<'", start);
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < input_.size() &&
             ((input_[end] >= 'a' && input_[end] <= 'z') ||
              (input_[end] >= '0' && input_[end] <= '9') || input_[end] == '_'))
        ++end;
      std::string word(input_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "top") return {Tok::Top, word, start};
      if (word == "bot") return {Tok::Bot, word, start};
      return {Tok::Atom, word, start};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Sentence run() {
    Sentence s = parse_iff();
    expect(Tok::End, "unexpected trailing input");
    return s;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token take() { return tokens_[index_++]; }

  void expect(Tok type, const std::string& message) {
    if (peek().type != type) throw ParseError(message, peek().pos);
  }

  // Iff ::= Implies ('<->' Implies)*
  Sentence parse_iff() {
    Sentence s = parse_implies();
    while (peek().type == Tok::Iff) {
      take();
      s = iff(std::move(s), parse_implies());
    }
    return s;
  }

  // Implies ::= Sup ('->' Implies)?     (right associative)
  Sentence parse_implies() {
    Sentence s = parse_sup();
    if (peek().type == Tok::Implies) {
      take();
      return implies(std::move(s), parse_implies());
    }
    return s;
  }

  // Sup ::= Or (('|' | '@') Or)*
  Sentence parse_sup() {
    Sentence s = parse_or();
    while (peek().type == Tok::Sup || peek().type == Tok::DualSup) {
      const bool is_dual = take().type == Tok::DualSup;
      Sentence rhs = parse_or();
      s = is_dual ? dual_sup(std::move(s), std::move(rhs))
                  : sup(std::move(s), std::move(rhs));
    }
    return s;
  }

  // Or ::= And ('\/' And)*
  Sentence parse_or() {
    Sentence s = parse_and();
    while (peek().type == Tok::Or) {
      take();
      s = disj(std::move(s), parse_and());
    }
    return s;
  }

  // And ::= Unary ('&' Unary)*
  Sentence parse_and() {
    Sentence s = parse_unary();
    while (peek().type == Tok::And) {
      take();
      s = conj(std::move(s), parse_unary());
    }
    return s;
  }

  // Unary ::= '~' Unary | Primary
  Sentence parse_unary() {
    if (peek().type == Tok::Neg) {
      take();
      return neg(parse_unary());
    }
    return parse_primary();
  }

  // Primary ::= atom | 'top' | 'bot' | '(' Iff ')'
  Sentence parse_primary() {
    switch (peek().type) {
      case Tok::Atom: return atom(take().text);
      case Tok::Top: take(); return top();
      case Tok::Bot: take(); return bot();
      case Tok::LParen: {
        take();
        Sentence s = parse_iff();
        expect(Tok::RParen, "expected ')'");
        take();
        return s;
      }
      default: throw ParseError("expected a sentence", peek().pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Sentence parse(std::string_view input) {
  return Parser(Lexer(input).run()).run();
}

}  // namespace pls
