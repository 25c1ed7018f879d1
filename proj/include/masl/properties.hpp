#pragma once

// Game-theoretic and social-choice properties as fully expanded formulas.

#include "masl/abbreviations.hpp"
#include "masl/ast.hpp"
#include "masl/signature.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace masl {

namespace props {

inline void check_player(const Signature& sig, Player i) {
  if (i >= sig.players()) throw std::invalid_argument("player " + std::to_string(i + 1) + " out of range");
}

/// The current profile is a Nash equilibrium.
inline Formula nash_here(const Signature& sig) {
  std::vector<Formula> per_player;
  for (Player i = 0; i < sig.players(); ++i) {
    std::vector<Formula> options;
    for (const auto& v : sig.utilities)
      options.push_back(conj(payoff_geq(sig, i, v), box_switch(sig, i, neg(payoff_gt(sig, i, v)))));
    per_player.push_back(disj(options));
  }
  return conj(per_player);
}

/// Some profile of the game is a Nash equilibrium.
inline Formula game_is_nash(const Signature& sig) { return diamond_any_state(sig, nash_here(sig)); }

/// Strategy a of player i is at least as good as any alternative against every opponent move.
inline Formula weak_dominance(const Signature& sig, Player i, const std::string& a) {
  check_player(sig, i);
  if (!sig.form.strategy_index(i, a))
    throw std::invalid_argument("'" + a + "' is not a strategy of player " + std::to_string(i + 1));
  std::vector<Formula> parts;
  for (const auto& v : sig.utilities)
    for (const auto& b : sig.strategies(i)) {
      if (b == a) continue;
      auto geq = payoff_geq(sig, i, v);
      parts.push_back(box(vec(vec_any(sig, i, b)), implies(geq, diamond(vec(vec_switch(sig, i, a)), geq))));
    }
  return conj(parts);
}

/// All-concrete vectors in which x has strictly more votes than any other alternative.
inline std::vector<VectorExpr> plurality_vectors(const Signature& sig, const std::string& x) {
  std::vector<VectorExpr> out;
  const auto& form = sig.form;
  for (std::size_t r = 0; r < form.profile_count(); ++r) {
    Profile p = form.unrank(r);
    std::map<std::string, std::size_t> votes;
    for (Player i = 0; i < form.players(); ++i) ++votes[form.strategies(i)[p[i]]];
    bool unique = votes[x] > 0;
    for (const auto& [alt, count] : votes)
      if (alt != x && count >= votes[x]) unique = false;
    if (!unique) continue;
    VectorExpr v;
    for (Player i = 0; i < form.players(); ++i) v.terms.push_back(StrategyTerm::concrete(form.strategies(i)[p[i]]));
    out.push_back(std::move(v));
  }
  return out;
}

/// The game's outcomes follow the plurality rule wherever a plurality winner is unique.
inline Formula plurality_rule(const Signature& sig) {
  std::vector<Formula> parts;
  for (const auto& x : sig.alternatives)
    for (auto& c : plurality_vectors(sig, x)) parts.push_back(box(vec(std::move(c)), winner(x)));
  return conj(parts);
}

/// Exactly one winner in every state.
inline Formula resolute(const Signature& sig) {
  std::vector<Formula> options;
  for (const auto& a : sig.alternatives) {
    std::vector<Formula> others;
    for (const auto& b : sig.alternatives)
      if (b != a) others.push_back(neg(winner(b)));
    options.push_back(conj(winner(a), conj(others)));
  }
  return box_every_state(sig, disj(options));
}

/// No voter can strictly improve the current payoff by switching unilaterally.
inline Formula strategy_proof_here(const Signature& sig) {
  std::vector<Formula> per_player;
  for (Player i = 0; i < sig.players(); ++i) {
    std::vector<Formula> options;
    for (const auto& v : sig.utilities)
      options.push_back(conj(payoff_geq(sig, i, v), neg(diamond_switch(sig, i, payoff_gt(sig, i, v)))));
    per_player.push_back(disj(options));
  }
  return conj(per_player);
}

inline Formula strategy_proof(const Signature& sig) { return box_every_state(sig, strategy_proof_here(sig)); }

/// At least three distinct alternatives win somewhere.
inline Formula non_imposed(const Signature& sig) {
  std::vector<Formula> options;
  const auto& alts = sig.alternatives;
  for (const auto& a : alts)
    for (const auto& b : alts) {
      if (b == a) continue;
      for (const auto& c : alts) {
        if (c == a || c == b) continue;
        options.push_back(conj(conj(diamond_any_state(sig, winner(a)), diamond_any_state(sig, winner(b))),
                               diamond_any_state(sig, winner(c))));
      }
    }
  return disj(options);
}

/// Player i can always secure a payoff no other player exceeds anywhere.
inline Formula dictator(const Signature& sig, Player i) {
  check_player(sig, i);
  std::vector<Formula> options;
  for (const auto& v : sig.utilities) {
    std::vector<Formula> others;
    for (Player j = 0; j < sig.players(); ++j) {
      if (j == i) continue;
      others.push_back(box_every_state(sig, conj(neg(payoff_gt(sig, j, v)), diamond_switch(sig, i, payoff_geq(sig, i, v)))));
    }
    options.push_back(conj(others));
  }
  return disj(options);
}

/// (ag_i + ag_i^)*: reflexive, symmetric, transitive closure of agent i's accessibility.
inline Program knowledge(Player i) { return star(choice(agent(i), agent_converse(i))); }

inline Formula knowing_dictator(const Signature& sig, Player i) { return box(knowledge(i), dictator(sig, i)); }

/// Copy the opponent's last move (two-player games): for every strategy x
/// both players share, if the opponent played x then play x.
inline Program tit_for_tat(const Signature& sig, Player i) {
  if (sig.players() != 2) throw std::invalid_argument("tit-for-tat is defined for two-player games");
  check_player(sig, i);
  const Player opp = 1 - i;
  std::vector<Program> branches;
  for (const auto& x : sig.strategies(opp)) {
    if (!sig.form.strategy_index(i, x)) continue;
    auto played = vec_atom(VectorExpr::with(2, opp, StrategyTerm::concrete(x), StrategyTerm::current()));
    auto play = vec(VectorExpr::with(2, i, StrategyTerm::concrete(x), StrategyTerm::adversary()));
    branches.push_back(seq(test(played), play));
  }
  if (branches.empty()) throw std::invalid_argument("players share no strategy names");
  Program body = branches.front();
  for (std::size_t k = 1; k < branches.size(); ++k) body = choice(body, branches[k]);
  return star(body);
}

}  // namespace props

struct PropertyParams {
  std::optional<Player> player;
  std::optional<std::string> strategy;
};

using Property = std::variant<Formula, Program>;

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {"nashHere",      "gameIsNash",        "weakDominance", "pluralityRule",
                                                 "resolute",      "strategyProof",     "strategyProofHere",
                                                 "nonImposed",    "dictator",          "knowingDictator", "titForTat"};
  return names;
}

/// Builds a named property against a signature.
inline Property build_property(const std::string& name, const Signature& sig, const PropertyParams& params = {}) {
  auto need_player = [&]() {
    if (!params.player) throw std::invalid_argument("property '" + name + "' needs a player");
    return *params.player;
  };
  if (name == "nashHere") return props::nash_here(sig);
  if (name == "gameIsNash") return props::game_is_nash(sig);
  if (name == "weakDominance") {
    if (!params.strategy) throw std::invalid_argument("property 'weakDominance' needs a strategy");
    return props::weak_dominance(sig, need_player(), *params.strategy);
  }
  if (name == "pluralityRule") return props::plurality_rule(sig);
  if (name == "resolute") return props::resolute(sig);
  if (name == "strategyProof") return props::strategy_proof(sig);
  if (name == "strategyProofHere") return props::strategy_proof_here(sig);
  if (name == "nonImposed") return props::non_imposed(sig);
  if (name == "dictator") return props::dictator(sig, need_player());
  if (name == "knowingDictator") return props::knowing_dictator(sig, need_player());
  if (name == "titForTat") return props::tit_for_tat(sig, need_player());
  throw std::invalid_argument("unknown property '" + name + "'");
}

}  // namespace masl
