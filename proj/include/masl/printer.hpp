#pragma once

// Canonical concrete syntax with minimal parentheses. `render` is the inverse
// of `parse_formula` / `parse_program` up to structural equality.

#include "masl/ast.hpp"

#include <string>

namespace masl {

namespace detail {

enum FormulaPrec { kIff = 1, kImplies, kOr, kAnd, kUnary, kAtom };
enum ProgramPrec { kChoice = 1, kSeq, kStar, kPrimary };

inline std::string render_formula(const Formula& f, int ctx);
inline std::string render_program(const Program& p, int ctx);

inline std::string render_vector(const VectorExpr& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    switch (v[i].kind) {
      case StrategyTerm::Kind::Concrete: out += v[i].name; break;
      case StrategyTerm::Kind::Adversary: out += "??"; break;
      case StrategyTerm::Kind::Current: out += "!!"; break;
    }
  }
  return out + ")";
}

inline std::string wrap(std::string s, bool parens) { return parens ? "(" + s + ")" : s; }

inline std::string render_formula(const Formula& f, int ctx) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::Top>) return "T";
        else if constexpr (std::is_same_v<T, ast::VecAtom>) return render_vector(x.vec);
        else if constexpr (std::is_same_v<T, ast::Winner>) return "win(" + x.alternative + ")";
        else if constexpr (std::is_same_v<T, ast::UtilEq>)
          return "u" + std::to_string(x.player + 1) + "=" + to_string(x.value);
        else if constexpr (std::is_same_v<T, ast::Label>) return "label(" + x.text + ")";
        else if constexpr (std::is_same_v<T, ast::Not>) return wrap("~" + render_formula(x.sub, kUnary), ctx > kUnary);
        else if constexpr (std::is_same_v<T, ast::Box>)
          return wrap("[" + render_program(x.prog, kChoice) + "] " + render_formula(x.sub, kUnary), ctx > kUnary);
        else if constexpr (std::is_same_v<T, ast::Diamond>)
          return wrap("<" + render_program(x.prog, kChoice) + "> " + render_formula(x.sub, kUnary), ctx > kUnary);
        else if constexpr (std::is_same_v<T, ast::And>)
          return wrap(render_formula(x.lhs, kAnd) + " & " + render_formula(x.rhs, kAnd + 1), ctx > kAnd);
        else if constexpr (std::is_same_v<T, ast::Or>)
          return wrap(render_formula(x.lhs, kOr) + " | " + render_formula(x.rhs, kOr + 1), ctx > kOr);
        else if constexpr (std::is_same_v<T, ast::Implies>)
          return wrap(render_formula(x.lhs, kImplies + 1) + " -> " + render_formula(x.rhs, kImplies), ctx > kImplies);
        else
          return wrap(render_formula(x.lhs, kIff) + " <-> " + render_formula(x.rhs, kIff + 1), ctx > kIff);
      },
      f->node);
}

inline std::string render_program(const Program& p, int ctx) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::Vec>) return render_vector(x.vec);
        else if constexpr (std::is_same_v<T, ast::Agent>) return "ag" + std::to_string(x.player + 1);
        else if constexpr (std::is_same_v<T, ast::AgentConverse>) return "ag" + std::to_string(x.player + 1) + "^";
        else if constexpr (std::is_same_v<T, ast::Test>) return "?" + render_formula(x.cond, kUnary);
        else if constexpr (std::is_same_v<T, ast::Star>) return wrap(render_program(x.sub, kStar) + "*", ctx > kStar);
        else if constexpr (std::is_same_v<T, ast::Seq>)
          return wrap(render_program(x.lhs, kSeq) + ";" + render_program(x.rhs, kSeq + 1), ctx > kSeq);
        else
          return wrap(render_program(x.lhs, kChoice) + "+" + render_program(x.rhs, kChoice + 1), ctx > kChoice);
      },
      p->node);
}

}  // namespace detail

inline std::string render(const Formula& f) { return detail::render_formula(f, detail::kIff); }
inline std::string render(const Program& p) { return detail::render_program(p, detail::kChoice); }
inline std::string render(const VectorExpr& v) { return detail::render_vector(v); }

}  // namespace masl
