#pragma once

// Ballots, voting rules, set-betterness, the mean-Borda payoff for winner
// sets, and strategic games induced by casting top-choice votes.

#include "masl/game.hpp"
#include "masl/rational.hpp"
#include "masl/signature.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace masl {

using Alternative = std::string;
/// Non-empty set of alternatives, kept in the rule's alternative order.
using WinnerSet = std::vector<Alternative>;

/// A linear order of the alternatives, best first.
class Ballot {
 public:
  Ballot() = default;
  explicit Ballot(std::vector<Alternative> order) : order_(std::move(order)) {}

  /// "abc" when all alternatives are single characters, otherwise "a>b>c".
  static Ballot parse(const std::string& text, const std::vector<Alternative>& alternatives) {
    bool single = std::all_of(alternatives.begin(), alternatives.end(), [](const auto& a) { return a.size() == 1; });
    std::vector<Alternative> order;
    if (single && text.find('>') == std::string::npos) {
      for (char c : text) order.emplace_back(1, c);
    } else {
      std::size_t start = 0;
      for (;;) {
        auto gt = text.find('>', start);
        order.push_back(text.substr(start, gt == std::string::npos ? std::string::npos : gt - start));
        if (gt == std::string::npos) break;
        start = gt + 1;
      }
    }
    Ballot b(std::move(order));
    if (!b.is_ordering_of(alternatives))
      throw std::invalid_argument("ballot '" + text + "' is not a linear order of the alternatives");
    return b;
  }

  const std::vector<Alternative>& order() const { return order_; }
  const Alternative& top() const { return order_.at(0); }
  std::size_t size() const { return order_.size(); }

  std::size_t position(const Alternative& x) const {
    auto it = std::find(order_.begin(), order_.end(), x);
    if (it == order_.end()) throw std::invalid_argument("'" + x + "' does not occur on the ballot");
    return static_cast<std::size_t>(it - order_.begin());
  }

  bool above(const Alternative& x, const Alternative& y) const { return position(x) < position(y); }

  bool is_ordering_of(const std::vector<Alternative>& alternatives) const {
    if (order_.size() != alternatives.size()) return false;
    auto a = order_, b = alternatives;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && std::adjacent_find(a.begin(), a.end()) == a.end();
  }

  std::string to_string() const {
    bool single = std::all_of(order_.begin(), order_.end(), [](const auto& a) { return a.size() == 1; });
    std::string out;
    for (std::size_t k = 0; k < order_.size(); ++k) {
      if (k && !single) out += '>';
      out += order_[k];
    }
    return out;
  }

  friend bool operator==(const Ballot&, const Ballot&) = default;

 private:
  std::vector<Alternative> order_;
};

using BallotProfile = std::vector<Ballot>;

/// Every ballot over `alternatives`, in lexicographic order of positions.
inline std::vector<Ballot> all_ballots(const std::vector<Alternative>& alternatives) {
  std::vector<std::size_t> idx(alternatives.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Ballot> out;
  do {
    std::vector<Alternative> order;
    for (auto k : idx) order.push_back(alternatives[k]);
    out.emplace_back(std::move(order));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

class VotingRule {
 public:
  enum class Kind { Plurality, AbsoluteMajority, ResoluteWrap, Dictator, Constant };

  static VotingRule plurality(std::vector<Alternative> a) { return VotingRule(Kind::Plurality, std::move(a)); }
  static VotingRule absolute_majority(std::vector<Alternative> a) {
    return VotingRule(Kind::AbsoluteMajority, std::move(a));
  }
  /// Breaks ties in `base` by taking the winner ranked highest in `order`.
  static VotingRule resolute(const VotingRule& base, Ballot order) {
    if (!order.is_ordering_of(base.alternatives_)) throw std::invalid_argument("tie-break order must rank every alternative");
    VotingRule r(Kind::ResoluteWrap, base.alternatives_);
    r.base_ = std::make_shared<const VotingRule>(base);
    r.tiebreak_ = std::move(order);
    return r;
  }
  static VotingRule dictatorship(std::vector<Alternative> a, Player i) {
    VotingRule r(Kind::Dictator, std::move(a));
    r.dictator_ = i;
    return r;
  }
  static VotingRule constant(std::vector<Alternative> a, Alternative x) {
    VotingRule r(Kind::Constant, std::move(a));
    if (!r.has(x)) throw std::invalid_argument("constant winner '" + x + "' is not an alternative");
    r.constant_ = std::move(x);
    return r;
  }

  Kind kind() const { return kind_; }
  const std::vector<Alternative>& alternatives() const { return alternatives_; }
  const VotingRule* base() const { return base_.get(); }
  const std::optional<Ballot>& tiebreak() const { return tiebreak_; }
  Player dictator() const { return dictator_; }
  const Alternative& constant_winner() const { return constant_; }
  bool has(const Alternative& x) const {
    return std::find(alternatives_.begin(), alternatives_.end(), x) != alternatives_.end();
  }

  std::string name() const {
    switch (kind_) {
      case Kind::Plurality: return "plurality";
      case Kind::AbsoluteMajority: return "absolute_majority";
      case Kind::ResoluteWrap: return base_->name() + "+tiebreak:" + tiebreak_->to_string();
      case Kind::Dictator: return "dictator:" + std::to_string(dictator_ + 1);
      case Kind::Constant: return "constant:" + constant_;
    }
    return {};
  }

  /// Winners for a vector of cast votes (each vote is the voter's top choice).
  WinnerSet apply(const std::vector<Alternative>& votes) const {
    for (const auto& v : votes)
      if (!has(v)) throw std::invalid_argument("vote for unknown alternative '" + v + "'");
    switch (kind_) {
      case Kind::Plurality: {
        auto counts = tally(votes);
        std::size_t best = *std::max_element(counts.begin(), counts.end());
        WinnerSet out;
        for (std::size_t k = 0; k < alternatives_.size(); ++k)
          if (counts[k] == best) out.push_back(alternatives_[k]);
        return out;
      }
      case Kind::AbsoluteMajority: {
        auto counts = tally(votes);
        for (std::size_t k = 0; k < alternatives_.size(); ++k)
          if (2 * counts[k] > votes.size()) return {alternatives_[k]};
        return alternatives_;
      }
      case Kind::ResoluteWrap: {
        auto w = base_->apply(votes);
        return {*std::min_element(w.begin(), w.end(), [&](const auto& x, const auto& y) { return tiebreak_->above(x, y); })};
      }
      case Kind::Dictator:
        if (dictator_ >= votes.size()) throw std::invalid_argument("dictator is not among the voters");
        return {votes[dictator_]};
      case Kind::Constant: return {constant_};
    }
    return {};
  }

  WinnerSet apply(const BallotProfile& ballots) const {
    std::vector<Alternative> tops;
    for (const auto& b : ballots) {
      if (!b.is_ordering_of(alternatives_)) throw std::invalid_argument("ballot '" + b.to_string() + "' is not over the rule's alternatives");
      tops.push_back(b.top());
    }
    return apply(tops);
  }

 private:
  VotingRule(Kind k, std::vector<Alternative> a) : kind_(k), alternatives_(std::move(a)) {
    if (alternatives_.empty()) throw std::invalid_argument("a voting rule needs alternatives");
  }

  std::vector<std::size_t> tally(const std::vector<Alternative>& votes) const {
    std::vector<std::size_t> counts(alternatives_.size(), 0);
    for (const auto& v : votes)
      ++counts[static_cast<std::size_t>(std::find(alternatives_.begin(), alternatives_.end(), v) - alternatives_.begin())];
    return counts;
  }

  Kind kind_;
  std::vector<Alternative> alternatives_;
  std::shared_ptr<const VotingRule> base_;
  std::optional<Ballot> tiebreak_;
  Player dictator_ = 0;
  Alternative constant_;
};

inline WinnerSet apply_rule(const VotingRule& rule, const std::vector<Alternative>& votes) { return rule.apply(votes); }
inline WinnerSet apply_rule(const VotingRule& rule, const BallotProfile& ballots) { return rule.apply(ballots); }

/// X >_b Y: every x is b-weakly above every y, and some x strictly above some y.
inline bool set_better(const std::vector<Alternative>& x, const std::vector<Alternative>& y, const Ballot& b) {
  if (x.empty() || y.empty()) throw std::invalid_argument("set comparison needs non-empty sets");
  bool strict = false;
  for (const auto& a : x)
    for (const auto& c : y) {
      if (a == c) continue;
      if (!b.above(a, c)) return false;
      strict = true;
    }
  return strict;
}

/// Mean Borda score of the winner set under ballot b.
inline Rational outcome_payoff(const std::vector<Alternative>& x, const Ballot& b) {
  if (x.empty()) throw std::invalid_argument("payoff of an empty winner set");
  std::int64_t total = 0;
  for (const auto& a : x) total += static_cast<std::int64_t>(b.size() - 1 - b.position(a));
  return Rational(total, static_cast<std::int64_t>(x.size()));
}

inline std::string winners_label(const WinnerSet& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += w[k];
  }
  return out;
}

/// Every voter's strategies are the alternatives; payoffs use the voters' true ballots.
inline StrategicGame induced_game(const VotingRule& rule, const BallotProfile& true_ballots) {
  for (const auto& b : true_ballots)
    if (!b.is_ordering_of(rule.alternatives()))
      throw std::invalid_argument("ballot '" + b.to_string() + "' is not over the rule's alternatives");
  GameForm form(std::vector<std::vector<std::string>>(true_ballots.size(), rule.alternatives()));
  std::vector<OutcomeRecord> outcomes;
  outcomes.reserve(form.profile_count());
  std::vector<Alternative> votes(true_ballots.size());
  for (std::size_t r = 0; r < form.profile_count(); ++r) {
    Profile p = form.unrank(r);
    for (Player i = 0; i < votes.size(); ++i) votes[i] = rule.alternatives()[p[i]];
    auto w = rule.apply(votes);
    OutcomeRecord rec{winners_label(w), w, {}};
    for (const auto& b : true_ballots) rec.utils.push_back(outcome_payoff(w, b));
    outcomes.push_back(std::move(rec));
  }
  return StrategicGame(std::move(form), std::move(outcomes));
}

/// Signature of an induced game, with the rule's full alternative set.
inline Signature voting_signature(const StrategicGame& game, const VotingRule& rule) {
  return {game.form(), game.utility_range(), rule.alternatives()};
}

/// The cast profile in which everyone votes their true top choice.
inline Profile truthful_profile(const VotingRule& rule, const BallotProfile& ballots) {
  Profile p;
  for (const auto& b : ballots)
    p.choices.push_back(static_cast<StrategyIndex>(
        std::find(rule.alternatives().begin(), rule.alternatives().end(), b.top()) - rule.alternatives().begin()));
  return p;
}

/// Every ballot profile over the alternatives for n voters, voter 1 slowest.
inline std::vector<BallotProfile> all_ballot_profiles(const std::vector<Alternative>& alternatives, std::size_t n) {
  auto ballots = all_ballots(alternatives);
  std::vector<BallotProfile> out;
  std::vector<std::size_t> pos(n, 0);
  for (;;) {
    BallotProfile p;
    for (auto k : pos) p.push_back(ballots[k]);
    out.push_back(std::move(p));
    std::size_t i = n;
    while (i > 0 && ++pos[i - 1] == ballots.size()) pos[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace masl
