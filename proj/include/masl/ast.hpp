#pragma once

// Abstract syntax for MASL / EMASL formulas and programs. Nodes are immutable
// and shared; structural equality is provided by `same`.

#include "masl/game.hpp"
#include "masl/rational.hpp"

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace masl {

struct StrategyTerm {
  enum class Kind { Concrete, Adversary, Current };
  Kind kind = Kind::Adversary;
  std::string name;  // Concrete only

  static StrategyTerm concrete(std::string n) { return {Kind::Concrete, std::move(n)}; }
  static StrategyTerm adversary() { return {Kind::Adversary, {}}; }
  static StrategyTerm current() { return {Kind::Current, {}}; }

  bool is_concrete() const { return kind == Kind::Concrete; }
  bool is_adversary() const { return kind == Kind::Adversary; }
  bool is_current() const { return kind == Kind::Current; }
  friend bool operator==(const StrategyTerm&, const StrategyTerm&) = default;
};

struct VectorExpr {
  std::vector<StrategyTerm> terms;

  std::size_t size() const { return terms.size(); }
  const StrategyTerm& operator[](Player i) const { return terms.at(i); }

  /// No adversary term anywhere.
  bool determined() const {
    for (const auto& t : terms)
      if (t.is_adversary()) return false;
    return true;
  }

  /// `at` in position i, `rest` everywhere else.
  static VectorExpr with(std::size_t n, Player i, StrategyTerm at, StrategyTerm rest) {
    VectorExpr v{std::vector<StrategyTerm>(n, rest)};
    v.terms.at(i) = std::move(at);
    return v;
  }
  static VectorExpr all(std::size_t n, StrategyTerm t) { return {std::vector<StrategyTerm>(n, t)}; }

  VectorExpr replaced(Player i, StrategyTerm t) const {
    VectorExpr v = *this;
    v.terms.at(i) = std::move(t);
    return v;
  }

  friend bool operator==(const VectorExpr&, const VectorExpr&) = default;
};

struct FormulaNode;
struct ProgramNode;
using Formula = std::shared_ptr<const FormulaNode>;
using Program = std::shared_ptr<const ProgramNode>;

namespace ast {

struct Top {};
struct VecAtom { VectorExpr vec; };
struct Winner { std::string alternative; };
struct UtilEq { Player player; Rational value; };
struct Label { std::string text; };
struct Not { Formula sub; };
struct And { Formula lhs, rhs; };
struct Or { Formula lhs, rhs; };
struct Implies { Formula lhs, rhs; };
struct Iff { Formula lhs, rhs; };
struct Box { Program prog; Formula sub; };
struct Diamond { Program prog; Formula sub; };

struct Vec { VectorExpr vec; };
struct Test { Formula cond; };
struct Seq { Program lhs, rhs; };
struct Choice { Program lhs, rhs; };
struct Star { Program sub; };
struct Agent { Player player; };
struct AgentConverse { Player player; };

}  // namespace ast

struct FormulaNode {
  using Variant = std::variant<ast::Top, ast::VecAtom, ast::Winner, ast::UtilEq, ast::Label, ast::Not, ast::And,
                               ast::Or, ast::Implies, ast::Iff, ast::Box, ast::Diamond>;
  Variant node;
};

struct ProgramNode {
  using Variant = std::variant<ast::Vec, ast::Test, ast::Seq, ast::Choice, ast::Star, ast::Agent, ast::AgentConverse>;
  Variant node;
};

template <class T>
const T* as(const Formula& f) {
  return std::get_if<T>(&f->node);
}
template <class T>
const T* as(const Program& p) {
  return std::get_if<T>(&p->node);
}

// Formula constructors.
inline Formula make(FormulaNode::Variant v) { return std::make_shared<const FormulaNode>(FormulaNode{std::move(v)}); }
inline Formula top() { return make(ast::Top{}); }
inline Formula bottom() { return make(ast::Not{top()}); }
inline Formula vec_atom(VectorExpr v) { return make(ast::VecAtom{std::move(v)}); }
inline Formula winner(std::string x) { return make(ast::Winner{std::move(x)}); }
inline Formula util_eq(Player i, Rational v) { return make(ast::UtilEq{i, v}); }
inline Formula label(std::string s) { return make(ast::Label{std::move(s)}); }
inline Formula neg(Formula f) { return make(ast::Not{std::move(f)}); }
inline Formula conj(Formula a, Formula b) { return make(ast::And{std::move(a), std::move(b)}); }
inline Formula disj(Formula a, Formula b) { return make(ast::Or{std::move(a), std::move(b)}); }
inline Formula implies(Formula a, Formula b) { return make(ast::Implies{std::move(a), std::move(b)}); }
inline Formula iff(Formula a, Formula b) { return make(ast::Iff{std::move(a), std::move(b)}); }
inline Formula box(Program p, Formula f) { return make(ast::Box{std::move(p), std::move(f)}); }
inline Formula diamond(Program p, Formula f) { return make(ast::Diamond{std::move(p), std::move(f)}); }

/// Left-folded conjunction; empty gives T.
inline Formula conj(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = conj(acc, fs[k]);
  return acc;
}

/// Left-folded disjunction; empty gives ~T.
inline Formula disj(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) acc = disj(acc, fs[k]);
  return acc;
}

// Program constructors.
inline Program make(ProgramNode::Variant v) { return std::make_shared<const ProgramNode>(ProgramNode{std::move(v)}); }
inline Program vec(VectorExpr v) { return make(ast::Vec{std::move(v)}); }
inline Program test(Formula f) { return make(ast::Test{std::move(f)}); }
inline Program seq(Program a, Program b) { return make(ast::Seq{std::move(a), std::move(b)}); }
inline Program choice(Program a, Program b) { return make(ast::Choice{std::move(a), std::move(b)}); }
inline Program star(Program p) { return make(ast::Star{std::move(p)}); }
inline Program agent(Player i) { return make(ast::Agent{i}); }
inline Program agent_converse(Player i) { return make(ast::AgentConverse{i}); }

inline bool same(const Formula& a, const Formula& b);
inline bool same(const Program& a, const Program& b);

inline bool same(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, ast::Top>) return true;
        else if constexpr (std::is_same_v<T, ast::VecAtom>) return x.vec == y.vec;
        else if constexpr (std::is_same_v<T, ast::Winner>) return x.alternative == y.alternative;
        else if constexpr (std::is_same_v<T, ast::UtilEq>) return x.player == y.player && x.value == y.value;
        else if constexpr (std::is_same_v<T, ast::Label>) return x.text == y.text;
        else if constexpr (std::is_same_v<T, ast::Not>) return same(x.sub, y.sub);
        else if constexpr (std::is_same_v<T, ast::Box> || std::is_same_v<T, ast::Diamond>)
          return same(x.prog, y.prog) && same(x.sub, y.sub);
        else return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
      },
      a->node);
}

inline bool same(const Program& a, const Program& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, ast::Vec>) return x.vec == y.vec;
        else if constexpr (std::is_same_v<T, ast::Test>) return same(x.cond, y.cond);
        else if constexpr (std::is_same_v<T, ast::Star>) return same(x.sub, y.sub);
        else if constexpr (std::is_same_v<T, ast::Agent> || std::is_same_v<T, ast::AgentConverse>)
          return x.player == y.player;
        else return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
      },
      a->node);
}

}  // namespace masl
