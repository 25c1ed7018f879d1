#pragma once

// Derived notation: switch and any boxes, the some-state diamond and
// payoff comparisons, each expanded into core syntax against a signature.

#include "masl/ast.hpp"
#include "masl/signature.hpp"

#include <stdexcept>
#include <variant>

namespace masl {

/// (i_a, !!..): a at position i, current strategy elsewhere.
inline VectorExpr vec_switch(const Signature& sig, Player i, const std::string& a) {
  return VectorExpr::with(sig.players(), i, StrategyTerm::concrete(a), StrategyTerm::current());
}

/// (i_a, ??..): a at position i, adversary elsewhere.
inline VectorExpr vec_any(const Signature& sig, Player i, const std::string& a) {
  return VectorExpr::with(sig.players(), i, StrategyTerm::concrete(a), StrategyTerm::adversary());
}

inline VectorExpr all_adversary(const Signature& sig) {
  return VectorExpr::all(sig.players(), StrategyTerm::adversary());
}

/// Conjunction over a in S_i of [(i_a, !!..)] f.
inline Formula box_switch(const Signature& sig, Player i, const Formula& f) {
  std::vector<Formula> parts;
  for (const auto& a : sig.strategies(i)) parts.push_back(box(vec(vec_switch(sig, i, a)), f));
  return conj(parts);
}

/// Disjunction over a in S_i of <(i_a, !!..)> f, the dual of box_switch.
inline Formula diamond_switch(const Signature& sig, Player i, const Formula& f) {
  std::vector<Formula> parts;
  for (const auto& a : sig.strategies(i)) parts.push_back(diamond(vec(vec_switch(sig, i, a)), f));
  return disj(parts);
}

/// Conjunction over a in S_i of [(i_a, ??..)] f.
inline Formula box_any(const Signature& sig, Player i, const Formula& f) {
  std::vector<Formula> parts;
  for (const auto& a : sig.strategies(i)) parts.push_back(box(vec(vec_any(sig, i, a)), f));
  return conj(parts);
}

inline Formula diamond_any_state(const Signature& sig, const Formula& f) {
  return diamond(vec(all_adversary(sig)), f);
}

inline Formula box_every_state(const Signature& sig, const Formula& f) { return box(vec(all_adversary(sig)), f); }

/// u_i >= v as a disjunction over w in U with w >= v.
inline Formula payoff_geq(const Signature& sig, Player i, const Rational& v) {
  std::vector<Formula> parts;
  for (const auto& w : sig.utilities)
    if (w >= v) parts.push_back(util_eq(i, w));
  return disj(parts);
}

/// u_i > v as a disjunction over w in U with w > v.
inline Formula payoff_gt(const Signature& sig, Player i, const Rational& v) {
  std::vector<Formula> parts;
  for (const auto& w : sig.utilities)
    if (w > v) parts.push_back(util_eq(i, w));
  return disj(parts);
}

namespace abbrev {
struct BoxSwitch { Player player; Formula body; };
struct BoxAny { Player player; Formula body; };
struct DiamondAnyState { Formula body; };
struct PayoffGeq { Player player; Rational value; };
struct PayoffGt { Player player; Rational value; };
struct VecSwitch { Player player; std::string strategy; };
struct VecAny { Player player; std::string strategy; };
}  // namespace abbrev

using Abbreviation = std::variant<abbrev::BoxSwitch, abbrev::BoxAny, abbrev::DiamondAnyState, abbrev::PayoffGeq,
                                  abbrev::PayoffGt, abbrev::VecSwitch, abbrev::VecAny>;

/// Expands one abbreviation. The vector abbreviations expand to vector atoms.
inline Formula expand(const Abbreviation& a, const Signature& sig) {
  auto check_player = [&](Player i) {
    if (i >= sig.players()) throw std::invalid_argument("player " + std::to_string(i + 1) + " out of range");
  };
  auto check_strategy = [&](Player i, const std::string& s) {
    check_player(i);
    if (!sig.form.strategy_index(i, s))
      throw std::invalid_argument("'" + s + "' is not a strategy of player " + std::to_string(i + 1));
  };
  return std::visit(
      [&](const auto& x) -> Formula {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, abbrev::BoxSwitch>) {
          check_player(x.player);
          return box_switch(sig, x.player, x.body);
        } else if constexpr (std::is_same_v<T, abbrev::BoxAny>) {
          check_player(x.player);
          return box_any(sig, x.player, x.body);
        } else if constexpr (std::is_same_v<T, abbrev::DiamondAnyState>) {
          return diamond_any_state(sig, x.body);
        } else if constexpr (std::is_same_v<T, abbrev::PayoffGeq>) {
          check_player(x.player);
          return payoff_geq(sig, x.player, x.value);
        } else if constexpr (std::is_same_v<T, abbrev::PayoffGt>) {
          check_player(x.player);
          return payoff_gt(sig, x.player, x.value);
        } else if constexpr (std::is_same_v<T, abbrev::VecSwitch>) {
          check_strategy(x.player, x.strategy);
          return vec_atom(vec_switch(sig, x.player, x.strategy));
        } else {
          check_strategy(x.player, x.strategy);
          return vec_atom(vec_any(sig, x.player, x.strategy));
        }
      },
      a);
}

}  // namespace masl
