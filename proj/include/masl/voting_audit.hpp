#pragma once

// Rule-level audit of the four properties in the Gibbard-Satterthwaite
// theorem, exhaustive over ballot profiles.

#include "masl/checker.hpp"
#include "masl/game_io.hpp"
#include "masl/model.hpp"
#include "masl/properties.hpp"
#include "masl/voting.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace masl {

struct ManipulationWitness {
  BallotProfile profile;
  Player voter = 0;
  Ballot deviation;
  WinnerSet before, after;
};

struct AuditReport {
  std::string rule;
  std::size_t voters = 0;
  std::vector<Alternative> alternatives;
  std::size_t ballot_profiles = 0;

  bool resolute = false;
  bool strategy_proof = false;
  std::optional<ManipulationWitness> witness;
  // SP computed by evaluating the strategy-proofness conjunct at the truthful
  // state of every induced game; must agree with `strategy_proof`.
  bool strategy_proof_formula = false;
  bool non_imposed = false;
  std::size_t distinct_outcomes = 0;
  std::vector<Player> dictators;
  bool gs_consistent = false;
  std::vector<std::string> notes;
};

/// Voter i in profile P strictly prefers (by set-betterness under P_i) the
/// outcome of replacing P_i with `deviation`.
inline bool is_manipulation(const VotingRule& rule, const BallotProfile& profile, Player voter, const Ballot& deviation) {
  auto changed = profile;
  changed.at(voter) = deviation;
  return set_better(rule.apply(changed), rule.apply(profile), profile[voter]);
}

/// Dictator formula for player i holds at every state of every induced game.
inline bool rule_dictator(const VotingRule& rule, const std::vector<BallotProfile>& profiles, Player i) {
  for (const auto& b : profiles) {
    auto game = induced_game(rule, b);
    Model m = Model::flat(game);
    auto sig = voting_signature(game, rule);
    if (!Checker(m).extension(props::dictator(sig, i)).all()) return false;
  }
  return true;
}

inline AuditReport audit_rule(const VotingRule& rule, std::size_t n) {
  if (n < 2) throw std::invalid_argument("an audit needs at least two voters");
  const auto& alts = rule.alternatives();
  AuditReport rep;
  rep.rule = rule.name();
  rep.voters = n;
  rep.alternatives = alts;
  if (alts.size() < 2) rep.notes.push_back("fewer than two alternatives");

  const auto profiles = all_ballot_profiles(alts, n);
  const auto ballots = all_ballots(alts);
  rep.ballot_profiles = profiles.size();

  rep.resolute = true;
  std::set<WinnerSet> outcomes;
  for (const auto& p : profiles) {
    auto w = rule.apply(p);
    if (w.size() != 1) rep.resolute = false;
    outcomes.insert(w);
  }
  rep.distinct_outcomes = outcomes.size();
  rep.non_imposed = outcomes.size() >= 3;
  if (alts.size() < 3) rep.notes.push_back("fewer than three alternatives: non-imposition cannot hold");

  for (const auto& p : profiles) {
    for (Player i = 0; i < n && !rep.witness; ++i)
      for (const auto& d : ballots) {
        if (d == p[i] || !is_manipulation(rule, p, i, d)) continue;
        auto changed = p;
        changed[i] = d;
        rep.witness = ManipulationWitness{p, i, d, rule.apply(p), rule.apply(changed)};
        break;
      }
    if (rep.witness) break;
  }
  rep.strategy_proof = !rep.witness;

  rep.strategy_proof_formula = true;
  for (const auto& p : profiles) {
    auto game = induced_game(rule, p);
    Model m = Model::flat(game);
    auto here = props::strategy_proof_here(voting_signature(game, rule));
    if (!Checker(m).satisfies(game.form().rank(truthful_profile(rule, p)), here)) {
      rep.strategy_proof_formula = false;
      break;
    }
  }
  if (rep.strategy_proof_formula != rep.strategy_proof)
    rep.notes.push_back("set-betterness and payoff-formula strategy-proofness disagree");

  for (Player i = 0; i < n; ++i)
    if (rule_dictator(rule, profiles, i)) rep.dictators.push_back(i);

  rep.gs_consistent = !(rep.resolute && rep.strategy_proof && rep.non_imposed) || !rep.dictators.empty();
  return rep;
}

/// Rules shipped for the audit: plurality and absolute majority with and
/// without tie-breaking, every dictatorship, and a constant rule.
inline std::vector<VotingRule> rule_catalog(const std::vector<Alternative>& alts, std::size_t n) {
  Ballot order(alts);
  std::vector<VotingRule> out = {VotingRule::plurality(alts), VotingRule::absolute_majority(alts),
                                 VotingRule::resolute(VotingRule::plurality(alts), order),
                                 VotingRule::resolute(VotingRule::absolute_majority(alts), order)};
  for (Player i = 0; i < n; ++i) out.push_back(VotingRule::dictatorship(alts, i));
  out.push_back(VotingRule::constant(alts, alts.front()));
  return out;
}

inline json winners_json(const WinnerSet& w) { return json(w); }

inline json audit_to_json(const AuditReport& r) {
  json out;
  out["rule"] = r.rule;
  out["voters"] = r.voters;
  out["alternatives"] = r.alternatives;
  out["ballotProfiles"] = r.ballot_profiles;
  out["resolute"] = r.resolute;
  out["strategyProof"] = r.strategy_proof;
  out["strategyProofFormula"] = r.strategy_proof_formula;
  if (r.witness) {
    json profile = json::array();
    for (const auto& b : r.witness->profile) profile.push_back(b.to_string());
    out["witness"] = {{"profile", profile},
                      {"voter", r.witness->voter + 1},
                      {"deviation", r.witness->deviation.to_string()},
                      {"before", winners_json(r.witness->before)},
                      {"after", winners_json(r.witness->after)}};
  } else {
    out["witness"] = nullptr;
  }
  out["nonImposed"] = r.non_imposed;
  out["distinctOutcomes"] = r.distinct_outcomes;
  json dict = json::array();
  for (auto i : r.dictators) dict.push_back(i + 1);
  out["dictators"] = dict;
  out["gsConsistent"] = r.gs_consistent;
  out["notes"] = r.notes;
  return out;
}

/// Voting spec file: {"alternatives": [...], "ballots": ["abc", ...],
/// "rule": "plurality" | "absolute_majority" | "dictator:<i>" | "constant:<x>",
/// "tiebreak": optional ballot}.
struct VotingSpec {
  VotingRule rule;
  BallotProfile ballots;
};

inline VotingSpec voting_spec_from_json(const json& j) {
  try {
    auto alts = j.at("alternatives").get<std::vector<Alternative>>();
    BallotProfile ballots;
    for (const auto& b : j.at("ballots")) ballots.push_back(Ballot::parse(b.get<std::string>(), alts));
    auto name = j.at("rule").get<std::string>();
    auto rule = [&]() -> VotingRule {
      if (name == "plurality") return VotingRule::plurality(alts);
      if (name == "absolute_majority") return VotingRule::absolute_majority(alts);
      if (name.rfind("dictator:", 0) == 0) {
        auto i = std::stoul(name.substr(9));
        if (i < 1 || i > ballots.size()) throw InputError("dictator " + name.substr(9) + " is not a voter");
        return VotingRule::dictatorship(alts, i - 1);
      }
      if (name.rfind("constant:", 0) == 0) return VotingRule::constant(alts, name.substr(9));
      throw InputError("unknown rule '" + name + "'");
    }();
    if (j.contains("tiebreak") && !j.at("tiebreak").is_null())
      rule = VotingRule::resolute(rule, Ballot::parse(j.at("tiebreak").get<std::string>(), alts));
    if (ballots.size() < 2) throw InputError("need at least two ballots");
    return {std::move(rule), std::move(ballots)};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid voting spec: ") + e.what());
  }
}

}  // namespace masl
