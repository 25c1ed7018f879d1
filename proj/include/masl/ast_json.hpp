#pragma once

// AST as JSON, for the `parse` subcommand. Players are 1-based.

#include "masl/ast.hpp"
#include "masl/printer.hpp"
#include "masl/rational.hpp"

#include <json.hpp>

namespace masl {

inline nlohmann::json to_json(const VectorExpr& v) {
  auto out = nlohmann::json::array();
  for (const auto& t : v.terms) {
    if (t.is_concrete()) out.push_back(t.name);
    else out.push_back(t.is_adversary() ? "??" : "!!");
  }
  return out;
}

inline nlohmann::json to_json(const Program& p);

inline nlohmann::json to_json(const Formula& f) {
  using nlohmann::json;
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::Top>) return {{"type", "top"}};
        else if constexpr (std::is_same_v<T, ast::VecAtom>) return {{"type", "vector"}, {"terms", to_json(x.vec)}};
        else if constexpr (std::is_same_v<T, ast::Winner>) return {{"type", "win"}, {"alternative", x.alternative}};
        else if constexpr (std::is_same_v<T, ast::UtilEq>)
          return {{"type", "utilEq"}, {"player", x.player + 1}, {"value", to_string(x.value)}};
        else if constexpr (std::is_same_v<T, ast::Label>) return {{"type", "label"}, {"text", x.text}};
        else if constexpr (std::is_same_v<T, ast::Not>) return {{"type", "not"}, {"sub", to_json(x.sub)}};
        else if constexpr (std::is_same_v<T, ast::Box>)
          return {{"type", "box"}, {"program", to_json(x.prog)}, {"sub", to_json(x.sub)}};
        else if constexpr (std::is_same_v<T, ast::Diamond>)
          return {{"type", "diamond"}, {"program", to_json(x.prog)}, {"sub", to_json(x.sub)}};
        else {
          const char* name = std::is_same_v<T, ast::And> ? "and"
                             : std::is_same_v<T, ast::Or> ? "or"
                             : std::is_same_v<T, ast::Implies> ? "implies"
                                                               : "iff";
          return {{"type", name}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}};
        }
      },
      f->node);
}

inline nlohmann::json to_json(const Program& p) {
  using nlohmann::json;
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::Vec>) return {{"type", "vector"}, {"terms", to_json(x.vec)}};
        else if constexpr (std::is_same_v<T, ast::Test>) return {{"type", "test"}, {"cond", to_json(x.cond)}};
        else if constexpr (std::is_same_v<T, ast::Seq>)
          return {{"type", "seq"}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}};
        else if constexpr (std::is_same_v<T, ast::Choice>)
          return {{"type", "choice"}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}};
        else if constexpr (std::is_same_v<T, ast::Star>) return {{"type", "star"}, {"sub", to_json(x.sub)}};
        else if constexpr (std::is_same_v<T, ast::Agent>) return {{"type", "agent"}, {"player", x.player + 1}};
        else return {{"type", "agentConverse"}, {"player", x.player + 1}};
      },
      p->node);
}

}  // namespace masl
