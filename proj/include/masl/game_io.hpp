#pragma once

// Game file format:
//   {"players": 2,
//    "strategies": [["c","d"],["c","d"]],
//    "outcomes": {"c,d": {"label": "cd", "winners": ["a"], "utils": [0, "3/2"]}, ...}}

#include "masl/game.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace masl {

using json = nlohmann::json;

/// Malformed input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("utility must be an integer or a \"p/q\" string, got " + j.dump());
}

inline json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

inline StrategicGame game_from_json(const json& j) {
  try {
    auto players = j.at("players").get<std::size_t>();
    auto strategies = j.at("strategies").get<std::vector<std::vector<std::string>>>();
    if (strategies.size() != players)
      throw InputError("\"strategies\" has " + std::to_string(strategies.size()) + " entries, expected " +
                       std::to_string(players));
    GameForm form(std::move(strategies));
    const auto& table = j.at("outcomes");
    if (!table.is_object()) throw InputError("\"outcomes\" must be an object");
    std::vector<std::optional<OutcomeRecord>> slots(form.profile_count());
    for (const auto& [key, value] : table.items()) {
      Profile p = form.parse_key(key);
      auto& slot = slots[form.rank(p)];
      if (slot) throw InputError("duplicate outcome key '" + key + "'");
      OutcomeRecord rec;
      rec.label = value.value("label", key);
      if (value.contains("winners")) rec.winners = value.at("winners").get<std::vector<std::string>>();
      for (const auto& u : value.at("utils")) rec.utils.push_back(rational_from_json(u));
      slot = std::move(rec);
    }
    std::vector<OutcomeRecord> outcomes;
    for (std::size_t r = 0; r < slots.size(); ++r) {
      if (!slots[r]) throw InputError("missing outcome for profile '" + form.key(form.unrank(r)) + "'");
      outcomes.push_back(std::move(*slots[r]));
    }
    return StrategicGame(std::move(form), std::move(outcomes));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid game: ") + e.what());
  }
}

inline json game_to_json(const StrategicGame& game) {
  json out;
  out["players"] = game.players();
  out["strategies"] = game.form().strategy_sets();
  json table = json::object();
  for (std::size_t r = 0; r < game.form().profile_count(); ++r) {
    const auto& o = game.outcome(r);
    json rec;
    rec["label"] = o.label;
    if (o.winners) rec["winners"] = *o.winners;
    json utils = json::array();
    for (const auto& u : o.utils) utils.push_back(rational_to_json(u));
    rec["utils"] = std::move(utils);
    table[game.form().key(game.form().unrank(r))] = std::move(rec);
  }
  out["outcomes"] = std::move(table);
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

inline StrategicGame load_game(const std::string& path) { return game_from_json(read_json_file(path)); }

/// Two-player game from a row-major utility table, one row per strategy of player 1.
inline StrategicGame bimatrix_game(std::vector<std::string> rows, std::vector<std::string> cols,
                                   const std::vector<std::vector<std::pair<int, int>>>& payoffs) {
  GameForm form({rows, cols});
  std::vector<OutcomeRecord> outcomes;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto [u1, u2] = payoffs.at(r).at(c);
      outcomes.push_back({rows[r] + cols[c], std::nullopt, {Rational(u1), Rational(u2)}});
    }
  return StrategicGame(std::move(form), std::move(outcomes));
}

/// The prisoner's dilemma with payoffs (2,2) (0,3) / (3,0) (1,1).
inline StrategicGame prisoners_dilemma() {
  return bimatrix_game({"c", "d"}, {"c", "d"}, {{{2, 2}, {0, 3}}, {{3, 0}, {1, 1}}});
}

}  // namespace masl
