#pragma once

// Finite strategic games: forms, profiles, outcomes and the brute-force
// game-theoretic oracles (best response, Nash set, weak dominance).
//
// Players are 0-based in the C++ API. The DSL, JSON files and CLI use
// 1-based player numbers.

#include "masl/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace masl {

using Player = std::size_t;
using StrategyIndex = std::size_t;

struct Profile {
  std::vector<StrategyIndex> choices;

  StrategyIndex operator[](Player i) const { return choices.at(i); }
  std::size_t size() const { return choices.size(); }
  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// A set of players, kept sorted and duplicate-free.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<Player> members) : Coalition(std::vector<Player>(members)) {}
  explicit Coalition(std::vector<Player> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static Coalition grand(std::size_t n) {
    Coalition c;
    for (Player i = 0; i < n; ++i) c.members_.push_back(i);
    return c;
  }

  bool contains(Player i) const { return std::binary_search(members_.begin(), members_.end(), i); }
  const std::vector<Player>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool subset_of(const Coalition& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }
  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<Player> members_;
};

class GameForm {
 public:
  GameForm() = default;

  explicit GameForm(std::vector<std::vector<std::string>> strategies) : strategies_(std::move(strategies)) {
    if (strategies_.size() < 2) throw std::invalid_argument("a game form needs at least two players");
    for (std::size_t i = 0; i < strategies_.size(); ++i) {
      const auto& s = strategies_[i];
      if (s.empty()) throw std::invalid_argument("player " + std::to_string(i + 1) + " has no strategies");
      std::set<std::string> seen(s.begin(), s.end());
      if (seen.size() != s.size())
        throw std::invalid_argument("player " + std::to_string(i + 1) + " has duplicate strategy names");
    }
    profile_count_ = 1;
    for (const auto& s : strategies_) profile_count_ *= s.size();
  }

  std::size_t players() const { return strategies_.size(); }
  const std::vector<std::string>& strategies(Player i) const { return strategies_.at(i); }
  const std::vector<std::vector<std::string>>& strategy_sets() const { return strategies_; }
  std::size_t profile_count() const { return profile_count_; }

  std::optional<StrategyIndex> strategy_index(Player i, std::string_view name) const {
    const auto& s = strategies_.at(i);
    auto it = std::find(s.begin(), s.end(), name);
    if (it == s.end()) return std::nullopt;
    return static_cast<StrategyIndex>(it - s.begin());
  }

  bool valid(const Profile& p) const {
    if (p.size() != players()) return false;
    for (Player i = 0; i < players(); ++i)
      if (p[i] >= strategies_[i].size()) return false;
    return true;
  }

  // Mixed-radix position of a profile, player 1 most significant.
  std::size_t rank(const Profile& p) const {
    std::size_t r = 0;
    for (Player i = 0; i < players(); ++i) r = r * strategies_[i].size() + p[i];
    return r;
  }

  Profile unrank(std::size_t r) const {
    Profile p{std::vector<StrategyIndex>(players())};
    for (Player i = players(); i-- > 0;) {
      p.choices[i] = r % strategies_[i].size();
      r /= strategies_[i].size();
    }
    return p;
  }

  /// Comma-joined strategy names, e.g. "c,d".
  std::string key(const Profile& p) const {
    std::string out;
    for (Player i = 0; i < players(); ++i) {
      if (i) out += ',';
      out += strategies_[i].at(p[i]);
    }
    return out;
  }

  Profile parse_key(std::string_view key) const {
    Profile p;
    std::size_t start = 0;
    for (Player i = 0; i < players(); ++i) {
      auto comma = key.find(',', start);
      bool last = i + 1 == players();
      if (last != (comma == std::string_view::npos))
        throw std::invalid_argument("profile key '" + std::string(key) + "' does not have " +
                                    std::to_string(players()) + " components");
      auto name = key.substr(start, last ? std::string_view::npos : comma - start);
      auto idx = strategy_index(i, name);
      if (!idx)
        throw std::invalid_argument("unknown strategy '" + std::string(name) + "' for player " +
                                    std::to_string(i + 1));
      p.choices.push_back(*idx);
      start = comma + 1;
    }
    return p;
  }

  friend bool operator==(const GameForm& a, const GameForm& b) { return a.strategies_ == b.strategies_; }

 private:
  std::vector<std::vector<std::string>> strategies_;
  std::size_t profile_count_ = 0;
};

struct OutcomeRecord {
  std::string label;
  std::optional<std::vector<std::string>> winners;
  std::vector<Rational> utils;

  friend bool operator==(const OutcomeRecord&, const OutcomeRecord&) = default;
};

class StrategicGame {
 public:
  StrategicGame() = default;

  /// `outcomes` is indexed by profile rank.
  StrategicGame(GameForm form, std::vector<OutcomeRecord> outcomes)
      : form_(std::move(form)), outcomes_(std::move(outcomes)) {
    if (outcomes_.size() != form_.profile_count())
      throw std::invalid_argument("outcome table has " + std::to_string(outcomes_.size()) +
                                  " entries, expected " + std::to_string(form_.profile_count()));
    std::set<Rational> range;
    std::set<std::string> alts;
    for (const auto& o : outcomes_) {
      if (o.utils.size() != form_.players())
        throw std::invalid_argument("utility vector length differs from player count");
      if (o.winners) {
        if (o.winners->empty()) throw std::invalid_argument("winner set must be non-empty");
        alts.insert(o.winners->begin(), o.winners->end());
      }
      range.insert(o.utils.begin(), o.utils.end());
    }
    utility_range_.assign(range.begin(), range.end());
    alternatives_.assign(alts.begin(), alts.end());
  }

  const GameForm& form() const { return form_; }
  std::size_t players() const { return form_.players(); }
  const OutcomeRecord& outcome(const Profile& p) const { return outcomes_.at(form_.rank(p)); }
  const OutcomeRecord& outcome(std::size_t rank) const { return outcomes_.at(rank); }
  const std::vector<OutcomeRecord>& outcomes() const { return outcomes_; }
  Rational utility(const Profile& p, Player i) const { return outcome(p).utils.at(i); }

  /// Sorted set U of every utility value occurring in the game.
  const std::vector<Rational>& utility_range() const { return utility_range_; }
  /// Sorted union of all winner sets (empty for games without winners).
  const std::vector<std::string>& alternatives() const { return alternatives_; }

 private:
  GameForm form_;
  std::vector<OutcomeRecord> outcomes_;
  std::vector<Rational> utility_range_;
  std::vector<std::string> alternatives_;
};

inline std::vector<Profile> all_profiles(const GameForm& form) {
  std::vector<Profile> out;
  out.reserve(form.profile_count());
  for (std::size_t r = 0; r < form.profile_count(); ++r) out.push_back(form.unrank(r));
  return out;
}

/// Partial assignment of strategies to players.
using Assignment = std::map<Player, StrategyIndex>;

/// The profile u with u[i] = part_c[i] for i in C and part_rest[i] otherwise.
inline Profile combine(const GameForm& form, const Coalition& coalition, const Assignment& part_c,
                       const Assignment& part_rest) {
  Profile u{std::vector<StrategyIndex>(form.players())};
  auto check_extraneous = [&](const Assignment& part, bool inside) {
    for (const auto& [player, _] : part)
      if (player >= form.players() || coalition.contains(player) != inside)
        throw std::invalid_argument("extraneous assignment for player " + std::to_string(player + 1));
  };
  check_extraneous(part_c, true);
  check_extraneous(part_rest, false);
  for (Player i = 0; i < form.players(); ++i) {
    const auto& part = coalition.contains(i) ? part_c : part_rest;
    auto it = part.find(i);
    if (it == part.end()) throw std::invalid_argument("missing assignment for player " + std::to_string(i + 1));
    if (it->second >= form.strategies(i).size())
      throw std::invalid_argument("strategy index out of range for player " + std::to_string(i + 1));
    u.choices[i] = it->second;
  }
  return u;
}

/// Restriction of a profile to the given players.
inline Assignment project(const Profile& p, const std::vector<Player>& players) {
  Assignment out;
  for (auto i : players) out[i] = p[i];
  return out;
}

inline bool is_best_response(const StrategicGame& game, const Profile& s, Player i) {
  if (i >= game.players()) throw std::out_of_range("player " + std::to_string(i + 1) + " out of range");
  const auto here = game.utility(s, i);
  Profile alt = s;
  for (StrategyIndex a = 0; a < game.form().strategies(i).size(); ++a) {
    alt.choices[i] = a;
    if (game.utility(alt, i) > here) return false;
  }
  return true;
}

/// Pure Nash equilibria, in enumeration order.
inline std::vector<Profile> nash_set(const StrategicGame& game) {
  std::vector<Profile> out;
  for (const auto& s : all_profiles(game.form())) {
    bool ok = true;
    for (Player i = 0; i < game.players() && ok; ++i) ok = is_best_response(game, s, i);
    if (ok) out.push_back(s);
  }
  return out;
}

/// Strategy `a` is at least as good for `i` as every alternative against every
/// combination of opponent strategies. No strictness clause.
inline bool weakly_dominant(const StrategicGame& game, Player i, StrategyIndex a) {
  if (i >= game.players()) throw std::out_of_range("player " + std::to_string(i + 1) + " out of range");
  if (a >= game.form().strategies(i).size()) throw std::invalid_argument("strategy not in S_i");
  for (const auto& t : all_profiles(game.form())) {
    if (t[i] != a) continue;
    const auto with_a = game.utility(t, i);
    Profile alt = t;
    for (StrategyIndex b = 0; b < game.form().strategies(i).size(); ++b) {
      alt.choices[i] = b;
      if (game.utility(alt, i) > with_a) return false;
    }
  }
  return true;
}

}  // namespace masl
