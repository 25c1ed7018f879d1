#pragma once

// Coalition logic over strategic games: direct exists-forall semantics, the
// coalition vectors C-dot, and the translation into MASL as a disjunction of
// boxes over those vectors.

#include "masl/ast.hpp"
#include "masl/model.hpp"
#include "masl/parser.hpp"
#include "masl/printer.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace masl {

struct CLNode;
using CLFormula = std::shared_ptr<const CLNode>;

namespace cl {
struct Top {};
struct Atom { Formula atom; };  // Winner, UtilEq or Label
struct Not { CLFormula sub; };
struct And { CLFormula lhs, rhs; };
struct CoalBox { Coalition coalition; CLFormula sub; };
}  // namespace cl

struct CLNode {
  std::variant<cl::Top, cl::Atom, cl::Not, cl::And, cl::CoalBox> node;
};

inline CLFormula cl_make(decltype(CLNode::node) v) { return std::make_shared<const CLNode>(CLNode{std::move(v)}); }
inline CLFormula cl_top() { return cl_make(cl::Top{}); }
inline CLFormula cl_atom(Formula a) {
  if (!as<ast::Winner>(a) && !as<ast::UtilEq>(a) && !as<ast::Label>(a))
    throw std::invalid_argument("coalition-logic atoms are win(x), u<i>=v or label(s)");
  return cl_make(cl::Atom{std::move(a)});
}
inline CLFormula cl_not(CLFormula f) { return cl_make(cl::Not{std::move(f)}); }
inline CLFormula cl_and(CLFormula a, CLFormula b) { return cl_make(cl::And{std::move(a), std::move(b)}); }
inline CLFormula cl_or(CLFormula a, CLFormula b) { return cl_not(cl_and(cl_not(std::move(a)), cl_not(std::move(b)))); }
inline CLFormula cl_box(Coalition c, CLFormula f) { return cl_make(cl::CoalBox{std::move(c), std::move(f)}); }

inline bool same(const CLFormula& a, const CLFormula& b) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, cl::Top>) return true;
        else if constexpr (std::is_same_v<T, cl::Atom>) return same(x.atom, y.atom);
        else if constexpr (std::is_same_v<T, cl::Not>) return same(x.sub, y.sub);
        else if constexpr (std::is_same_v<T, cl::And>) return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
        else return x.coalition == y.coalition && same(x.sub, y.sub);
      },
      a->node);
}

inline std::string render(const CLFormula& f, int ctx = 0) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, cl::Top>) return "T";
        else if constexpr (std::is_same_v<T, cl::Atom>) return render(x.atom);
        else if constexpr (std::is_same_v<T, cl::Not>) return "~" + render(x.sub, 2);
        else if constexpr (std::is_same_v<T, cl::And>) {
          auto s = render(x.lhs, 1) + " & " + render(x.rhs, 2);
          return ctx > 1 ? "(" + s + ")" : s;
        } else {
          std::string c = "[C {";
          for (std::size_t k = 0; k < x.coalition.members().size(); ++k) {
            if (k) c += ',';
            c += std::to_string(x.coalition.members()[k] + 1);
          }
          return c + "}] " + render(x.sub, 2);
        }
      },
      f->node);
}

namespace detail {

inline CLFormula cl_from_boolean(const Formula& f) {
  if (as<ast::Top>(f)) return cl_top();
  if (auto n = as<ast::Not>(f)) return cl_not(cl_from_boolean(n->sub));
  if (auto a = as<ast::And>(f)) return cl_and(cl_from_boolean(a->lhs), cl_from_boolean(a->rhs));
  if (auto o = as<ast::Or>(f)) return cl_or(cl_from_boolean(o->lhs), cl_from_boolean(o->rhs));
  return cl_atom(f);
}

class CLParser {
 public:
  CLParser(std::string_view text, const Signature& sig) : p_(text, sig) {}

  CLFormula formula() {
    CLFormula f = implication();
    while (p_.accept(Tok::DoubleArrow)) {
      CLFormula g = implication();
      f = cl_and(cl_not(cl_and(f, cl_not(g))), cl_not(cl_and(g, cl_not(f))));
    }
    return f;
  }

  void expect_end() { p_.expect_end(); }

 private:
  CLFormula implication() {
    CLFormula f = disjunction();
    if (p_.accept(Tok::Arrow)) return cl_not(cl_and(f, cl_not(implication())));
    return f;
  }

  CLFormula disjunction() {
    CLFormula f = conjunction();
    while (p_.accept(Tok::Bar)) f = cl_or(f, conjunction());
    return f;
  }

  CLFormula conjunction() {
    CLFormula f = unary();
    while (p_.accept(Tok::Amp)) f = cl_and(f, unary());
    return f;
  }

  CLFormula unary() {
    auto& lex = p_.lexer();
    auto t = lex.peek();
    if (t.kind == Tok::Tilde) {
      lex.next();
      return cl_not(unary());
    }
    if (t.kind == Tok::LBrack) {
      lex.next();
      auto c = lex.next();
      if (c.kind != Tok::Ident || c.text != "C") p_.fail(c, "expected 'C' after '[' in a coalition box");
      p_.expect(Tok::LBrace, "'{'");
      std::vector<Player> members;
      if (!p_.accept(Tok::RBrace)) {
        for (;;) {
          auto num = p_.expect(Tok::Number, "player number");
          members.push_back(p_.player_index(std::stoul(num.text), num));
          if (p_.accept(Tok::RBrace)) break;
          p_.expect(Tok::Comma, "',' or '}'");
        }
      }
      p_.expect(Tok::RBrack, "']'");
      return cl_box(Coalition(std::move(members)), unary());
    }
    if (auto a = p_.basic_atom()) return cl_from_boolean(*a);
    if (t.kind == Tok::LParen) {
      lex.next();
      CLFormula f = formula();
      p_.expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::End) p_.fail(t, "unexpected end of input, expected a formula");
    p_.fail(t, "unexpected '" + t.text + "', expected a coalition-logic formula");
  }

  Parser p_;
};

}  // namespace detail

/// "[C {1,3}] f" boxes over T, atoms, ~, &, |, ->, <->.
inline CLFormula parse_cl(std::string_view text, const Signature& sig) {
  detail::CLParser p(text, sig);
  CLFormula f = p.formula();
  p.expect_end();
  return f;
}

/// Direct truth of an atom at a world.
inline bool atom_holds(const Model& m, std::size_t w, const Formula& atom) {
  const auto& o = m.outcome(w);
  if (auto x = as<ast::UtilEq>(atom)) return o.utils.at(x->player) == x->value;
  if (auto x = as<ast::Winner>(atom))
    return o.winners && std::find(o.winners->begin(), o.winners->end(), x->alternative) != o.winners->end();
  if (auto x = as<ast::Label>(atom)) return o.label == x->text;
  throw EvalError("not an atom: " + render(atom));
}

namespace detail {

// Every assignment of strategies to `players`, first player slowest.
inline std::vector<Assignment> assignments(const GameForm& form, const std::vector<Player>& players) {
  std::vector<Assignment> out(1);
  for (auto i : players) {
    std::vector<Assignment> next;
    for (const auto& a : out)
      for (StrategyIndex s = 0; s < form.strategies(i).size(); ++s) {
        auto b = a;
        b[i] = s;
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Player> complement(const Coalition& c, std::size_t n) {
  std::vector<Player> out;
  for (Player i = 0; i < n; ++i)
    if (!c.contains(i)) out.push_back(i);
  return out;
}

}  // namespace detail

/// Coalition-logic truth at world s of a flat model.
inline bool cl_check(const Model& m, std::size_t s, const CLFormula& f) {
  if (m.intensional()) throw EvalError("coalition logic is evaluated on flat game models");
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, cl::Top>) return true;
        else if constexpr (std::is_same_v<T, cl::Atom>) return atom_holds(m, s, x.atom);
        else if constexpr (std::is_same_v<T, cl::Not>) return !cl_check(m, s, x.sub);
        else if constexpr (std::is_same_v<T, cl::And>) return cl_check(m, s, x.lhs) && cl_check(m, s, x.rhs);
        else {
          const auto& form = m.game().form();
          for (auto i : x.coalition.members())
            if (i >= form.players()) throw EvalError("coalition member out of range");
          auto rest = detail::complement(x.coalition, form.players());
          for (const auto& t : detail::assignments(form, x.coalition.members())) {
            bool forced = true;
            for (const auto& u : detail::assignments(form, rest)) {
              auto w = m.find(0, combine(form, x.coalition, t, u));
              if (!cl_check(m, *w, x.sub)) {
                forced = false;
                break;
              }
            }
            if (forced) return true;
          }
          return false;
        }
      },
      f->node);
}

/// C-dot: concrete strategies at coalition positions, ?? elsewhere.
inline std::vector<VectorExpr> coalition_vectors(const Coalition& c, const GameForm& form) {
  std::vector<VectorExpr> out;
  for (const auto& t : detail::assignments(form, c.members())) {
    VectorExpr v = VectorExpr::all(form.players(), StrategyTerm::adversary());
    for (const auto& [i, s] : t) v.terms[i] = StrategyTerm::concrete(form.strategies(i)[s]);
    out.push_back(std::move(v));
  }
  return out;
}

inline Formula translate(const CLFormula& f, const GameForm& form) {
  return std::visit(
      [&](const auto& x) -> Formula {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, cl::Top>) return top();
        else if constexpr (std::is_same_v<T, cl::Atom>) return x.atom;
        else if constexpr (std::is_same_v<T, cl::Not>) return neg(translate(x.sub, form));
        else if constexpr (std::is_same_v<T, cl::And>) return conj(translate(x.lhs, form), translate(x.rhs, form));
        else {
          auto body = translate(x.sub, form);
          std::vector<Formula> parts;
          for (auto& c : coalition_vectors(x.coalition, form)) parts.push_back(box(vec(std::move(c)), body));
          return disj(parts);
        }
      },
      f->node);
}

}  // namespace masl
