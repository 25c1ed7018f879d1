#pragma once

// Recursive-descent parser for the formula / program DSL.
//
//   formula  := iff
//   iff      := implies ("<->" implies)*
//   implies  := or ("->" implies)?
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "~" unary | "[" program "]" unary | "<" program ">" unary | atom
//   atom     := "T" | "win(" name ")" | "label(" text ")" | "u" int ("=" | ">=" | ">") rational
//             | "(" term ("," term)+ ")" | "(" formula ")"
//   program  := seq ("+" seq)*
//   seq      := postfix (";" postfix)*
//   postfix  := primary "*"*
//   primary  := "?" unary | "ag" int ["^"] | "(" term ("," term)+ ")" | "(" program ")"
//   term     := name | "??" | "!!"
//
// "u1>=v" and "u1>v" expand to disjunctions over the signature's utility range.

#include "masl/abbreviations.hpp"
#include "masl/ast.hpp"
#include "masl/signature.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace masl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

namespace detail {

enum class Tok {
  End, Ident, Number,
  LParen, RParen, LBrack, RBrack, LBrace, RBrace, Lt, Gt, Comma, Semi, Plus, Star, Caret,
  Question, Adversary, Current, Tilde, Amp, Bar, Arrow, DoubleArrow, Eq, Geq,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token peek() const { return lex(skip_ws(pos_)); }

  Token next() {
    Token t = peek();
    pos_ = t.offset + t.text.size();
    return t;
  }

  std::size_t mark() const { return pos_; }
  void reset(std::size_t m) { pos_ = m; }

  /// Consumes raw text up to (not including) `close`, then `close` itself.
  std::string raw_until(char close) {
    auto end = src_.find(close, pos_);
    if (end == std::string_view::npos) error(src_.size(), std::string("expected '") + close + "'");
    std::string text(src_.substr(pos_, end - pos_));
    pos_ = end + 1;
    auto b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return text.substr(b, text.find_last_not_of(" \t\r\n") - b + 1);
  }

  [[noreturn]] void error(std::size_t offset, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < offset && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

 private:
  std::size_t skip_ws(std::size_t p) const {
    while (p < src_.size() && std::isspace(static_cast<unsigned char>(src_[p]))) ++p;
    return p;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Token lex(std::size_t p) const {
    if (p >= src_.size()) return {Tok::End, "", p};
    auto at = [&](std::size_t k) { return p + k < src_.size() ? src_[p + k] : '\0'; };
    auto tok = [&](Tok kind, std::size_t len) { return Token{kind, std::string(src_.substr(p, len)), p}; };
    char c = src_[p];
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && std::isdigit(static_cast<unsigned char>(at(1))))) {
      std::size_t len = 1;
      while (std::isdigit(static_cast<unsigned char>(at(len)))) ++len;
      if (at(len) == '/' && std::isdigit(static_cast<unsigned char>(at(len + 1)))) {
        len += 2;
        while (std::isdigit(static_cast<unsigned char>(at(len)))) ++len;
      }
      // Digits followed by letters form a name such as "2nd".
      if (c != '-' && (std::isalpha(static_cast<unsigned char>(at(len))) || at(len) == '_')) {
        while (ident_char(at(len))) ++len;
        return tok(Tok::Ident, len);
      }
      return tok(Tok::Number, len);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 1;
      while (ident_char(at(len))) ++len;
      return tok(Tok::Ident, len);
    }
    switch (c) {
      case '(': return tok(Tok::LParen, 1);
      case ')': return tok(Tok::RParen, 1);
      case '[': return tok(Tok::LBrack, 1);
      case ']': return tok(Tok::RBrack, 1);
      case '{': return tok(Tok::LBrace, 1);
      case '}': return tok(Tok::RBrace, 1);
      case ',': return tok(Tok::Comma, 1);
      case ';': return tok(Tok::Semi, 1);
      case '+': return tok(Tok::Plus, 1);
      case '*': return tok(Tok::Star, 1);
      case '^': return tok(Tok::Caret, 1);
      case '~': return tok(Tok::Tilde, 1);
      case '&': return tok(Tok::Amp, 1);
      case '|': return tok(Tok::Bar, 1);
      case '=': return tok(Tok::Eq, 1);
      case '?': return at(1) == '?' ? tok(Tok::Adversary, 2) : tok(Tok::Question, 1);
      case '!':
        if (at(1) == '!') return tok(Tok::Current, 2);
        break;
      case '-':
        if (at(1) == '>') return tok(Tok::Arrow, 2);
        break;
      case '<':
        if (at(1) == '-' && at(2) == '>') return tok(Tok::DoubleArrow, 3);
        return tok(Tok::Lt, 1);
      case '>': return at(1) == '=' ? tok(Tok::Geq, 2) : tok(Tok::Gt, 1);
      default: break;
    }
    error(p, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

/// "u12" -> 12, anything else -> nullopt.
inline std::optional<std::size_t> indexed_name(std::string_view text, std::string_view prefix) {
  if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::size_t v = 0;
  for (char c : text.substr(prefix.size())) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : lex_(text), sig_(sig) {}

  Formula formula() { return iff(); }

  Program program() {
    Program p = seq();
    while (accept(detail::Tok::Plus)) p = choice(p, seq());
    return p;
  }

  void expect_end() {
    auto t = lex_.peek();
    if (t.kind != detail::Tok::End) fail(t, "unexpected '" + t.text + "'");
  }

  /// T, win(x), label(s) or a payoff atom; nullopt if the next token starts none of these.
  std::optional<Formula> basic_atom() {
    auto t = lex_.peek();
    if (t.kind != detail::Tok::Ident) return std::nullopt;
    if (t.text == "T") {
      lex_.next();
      return top();
    }
    auto m = lex_.mark();
    lex_.next();
    if ((t.text == "win" || t.text == "label") && lex_.peek().kind == detail::Tok::LParen) {
      lex_.next();
      if (t.text == "label") return label(lex_.raw_until(')'));
      auto name = lex_.next();
      if (name.kind != detail::Tok::Ident && name.kind != detail::Tok::Number) fail(name, "expected alternative name");
      if (!sig_.has_alternative(name.text)) fail(name, "unknown alternative '" + name.text + "'");
      expect(detail::Tok::RParen, "')'");
      return winner(name.text);
    }
    if (auto idx = detail::indexed_name(t.text, "u")) {
      auto op = lex_.peek();
      if (op.kind == detail::Tok::Eq || op.kind == detail::Tok::Geq || op.kind == detail::Tok::Gt) {
        lex_.next();
        Player i = player_index(*idx, t);
        auto num = lex_.next();
        if (num.kind != detail::Tok::Number) fail(num, "expected a rational utility value");
        Rational v;
        try {
          v = parse_rational(num.text);
        } catch (const std::invalid_argument& e) {
          fail(num, e.what());
        }
        if (op.kind == detail::Tok::Eq) return util_eq(i, v);
        if (op.kind == detail::Tok::Geq) return payoff_geq(sig_, i, v);
        return payoff_gt(sig_, i, v);
      }
    }
    lex_.reset(m);
    return std::nullopt;
  }

  detail::Lexer& lexer() { return lex_; }
  const Signature& signature() const { return sig_; }

  [[noreturn]] void fail(const detail::Token& t, const std::string& msg) const { lex_.error(t.offset, msg); }

  bool accept(detail::Tok k) {
    if (lex_.peek().kind != k) return false;
    lex_.next();
    return true;
  }

  detail::Token expect(detail::Tok k, const std::string& what) {
    auto t = lex_.next();
    if (t.kind != k) fail(t, "expected " + what + (t.kind == detail::Tok::End ? " at end of input" : ", got '" + t.text + "'"));
    return t;
  }

  Player player_index(std::size_t one_based, const detail::Token& at) const {
    if (one_based < 1 || one_based > sig_.players())
      fail(at, "player " + std::to_string(one_based) + " out of range 1.." + std::to_string(sig_.players()));
    return one_based - 1;
  }

 private:
  Formula iff() {
    Formula f = implication();
    while (accept(detail::Tok::DoubleArrow)) f = masl::iff(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (accept(detail::Tok::Arrow)) return implies(f, implication());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(detail::Tok::Bar)) f = disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(detail::Tok::Amp)) f = conj(f, unary());
    return f;
  }

 public:
  Formula unary() {
    auto t = lex_.peek();
    switch (t.kind) {
      case detail::Tok::Tilde:
        lex_.next();
        return neg(unary());
      case detail::Tok::LBrack: {
        lex_.next();
        Program p = program();
        expect(detail::Tok::RBrack, "']'");
        return box(p, unary());
      }
      case detail::Tok::Lt: {
        lex_.next();
        Program p = program();
        expect(detail::Tok::Gt, "'>'");
        return diamond(p, unary());
      }
      default: return atom();
    }
  }

 private:
  Formula atom() {
    if (auto a = basic_atom()) return *a;
    auto t = lex_.peek();
    if (t.kind == detail::Tok::LParen) {
      if (auto v = try_vector()) return vec_atom(std::move(*v));
      lex_.next();
      Formula f = formula();
      expect(detail::Tok::RParen, "')'");
      return f;
    }
    if (t.kind == detail::Tok::End) fail(t, "unexpected end of input, expected a formula");
    fail(t, "unexpected '" + t.text + "', expected a formula");
  }

  Program seq() {
    Program p = postfix();
    while (accept(detail::Tok::Semi)) p = masl::seq(p, postfix());
    return p;
  }

  Program postfix() {
    Program p = primary();
    while (accept(detail::Tok::Star)) p = star(p);
    return p;
  }

  Program primary() {
    auto t = lex_.peek();
    if (t.kind == detail::Tok::Question) {
      lex_.next();
      return test(unary());
    }
    if (t.kind == detail::Tok::Ident) {
      if (auto idx = detail::indexed_name(t.text, "ag")) {
        lex_.next();
        Player i = player_index(*idx, t);
        if (accept(detail::Tok::Caret)) return agent_converse(i);
        return agent(i);
      }
    }
    if (t.kind == detail::Tok::LParen) {
      if (auto v = try_vector()) return vec(std::move(*v));
      lex_.next();
      Program p = program();
      expect(detail::Tok::RParen, "')'");
      return p;
    }
    if (t.kind == detail::Tok::End) fail(t, "unexpected end of input, expected a program");
    fail(t, "unexpected '" + t.text + "', expected a program");
  }

  // "(" term ("," term)+ ")"; restores the lexer and returns nullopt on shape mismatch.
  std::optional<VectorExpr> try_vector() {
    auto m = lex_.mark();
    auto open = lex_.next();
    std::vector<detail::Token> raw;
    for (;;) {
      auto t = lex_.next();
      if (t.kind != detail::Tok::Ident && t.kind != detail::Tok::Number && t.kind != detail::Tok::Adversary &&
          t.kind != detail::Tok::Current) {
        lex_.reset(m);
        return std::nullopt;
      }
      raw.push_back(t);
      auto sep = lex_.next();
      if (sep.kind == detail::Tok::RParen) break;
      if (sep.kind != detail::Tok::Comma) {
        lex_.reset(m);
        return std::nullopt;
      }
    }
    if (raw.size() < 2) {
      lex_.reset(m);
      return std::nullopt;
    }
    if (raw.size() != sig_.players())
      fail(open, "strategy vector has " + std::to_string(raw.size()) + " terms, expected " +
                     std::to_string(sig_.players()));
    VectorExpr v;
    for (Player i = 0; i < raw.size(); ++i) {
      const auto& t = raw[i];
      if (t.kind == detail::Tok::Adversary) v.terms.push_back(StrategyTerm::adversary());
      else if (t.kind == detail::Tok::Current) v.terms.push_back(StrategyTerm::current());
      else {
        if (!sig_.form.strategy_index(i, t.text))
          fail(t, "unknown strategy '" + t.text + "' for player " + std::to_string(i + 1));
        v.terms.push_back(StrategyTerm::concrete(t.text));
      }
    }
    return v;
  }

  detail::Lexer lex_;
  const Signature& sig_;
};

inline Formula parse_formula(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

inline Program parse_program(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Program prog = p.program();
  p.expect_end();
  return prog;
}

}  // namespace masl
