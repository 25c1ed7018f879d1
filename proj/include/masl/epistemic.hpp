#pragma once

// Intensional models: epistemic lifts, strategy restrictions and the
// confusion models built from them, plus the model file format
//
//   {"game": <game file object>,
//    "forms": [{"id": "G'", "strategies": [["c"], ["c","d"]]}, ...],
//    "worlds": [["G'", "c,d"], ...],
//    "relations": {"1": [[0, 0], [0, 1], ...], "2": [...]}}

#include "masl/game_io.hpp"
#include "masl/model.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace masl {

/// Keeps, for each player, the strategies named in `subsets` (ambient order).
inline GameForm restrict(const GameForm& form, const std::vector<std::vector<std::string>>& subsets) {
  if (subsets.size() != form.players()) throw std::invalid_argument("one strategy subset per player required");
  std::vector<std::vector<std::string>> kept(form.players());
  for (Player i = 0; i < form.players(); ++i) {
    std::set<std::string> wanted(subsets[i].begin(), subsets[i].end());
    if (wanted.empty()) throw std::invalid_argument("empty strategy subset for player " + std::to_string(i + 1));
    for (const auto& s : wanted)
      if (!form.strategy_index(i, s))
        throw std::invalid_argument("'" + s + "' is not a strategy of player " + std::to_string(i + 1));
    for (const auto& s : form.strategies(i))
      if (wanted.count(s)) kept[i].push_back(s);
  }
  return GameForm(std::move(kept));
}

namespace detail {

inline std::vector<World> worlds_of(const GameForm& ambient, const GameForm& form, std::size_t form_index) {
  std::vector<World> out;
  for (const auto& p : all_profiles(form)) {
    Profile q;
    for (Player i = 0; i < form.players(); ++i) q.choices.push_back(*ambient.strategy_index(i, form.strategies(i)[p[i]]));
    out.push_back({form_index, std::move(q)});
  }
  return out;
}

}  // namespace detail

/// One world per profile; agent i cannot tell apart profiles that agree on i's own choice.
inline Model epistemic_lift(const StrategicGame& game) {
  auto worlds = detail::worlds_of(game.form(), game.form(), 0);
  std::vector<Relation> agents(game.players(), Relation(worlds.size()));
  for (Player i = 0; i < game.players(); ++i)
    for (std::size_t a = 0; a < worlds.size(); ++a)
      for (std::size_t b = 0; b < worlds.size(); ++b)
        if (worlds[a].profile[i] == worlds[b].profile[i]) agents[i].add(a, b);
  return Model(game, {{"G", game.form()}}, std::move(worlds), std::move(agents));
}

/// Worlds of the restriction (form id "G'") followed by worlds of the full
/// game (form id "G"). Confused agents relate worlds across both forms that
/// agree on their own coordinate; the others only within a form.
inline Model confusion_model(const StrategicGame& game, const GameForm& restricted, const Coalition& confused) {
  for (auto i : confused.members())
    if (i >= game.players()) throw std::invalid_argument("confused player out of range");
  // validates that `restricted` really is a restriction
  restrict(game.form(), restricted.strategy_sets());
  auto worlds = detail::worlds_of(game.form(), restricted, 0);
  auto full = detail::worlds_of(game.form(), game.form(), 1);
  worlds.insert(worlds.end(), full.begin(), full.end());
  std::vector<Relation> agents(game.players(), Relation(worlds.size()));
  for (Player i = 0; i < game.players(); ++i)
    for (std::size_t a = 0; a < worlds.size(); ++a)
      for (std::size_t b = 0; b < worlds.size(); ++b) {
        bool same_form = worlds[a].form == worlds[b].form;
        if ((same_form || confused.contains(i)) && worlds[a].profile[i] == worlds[b].profile[i]) agents[i].add(a, b);
      }
  return Model(game, {{"G'", restricted}, {"G", game.form()}}, std::move(worlds), std::move(agents));
}

inline json model_to_json(const Model& m) {
  json out;
  out["game"] = game_to_json(m.game());
  json forms = json::array();
  for (const auto& f : m.forms()) forms.push_back({{"id", f.id}, {"strategies", f.form.strategy_sets()}});
  out["forms"] = std::move(forms);
  json worlds = json::array();
  for (const auto& w : m.worlds())
    worlds.push_back(json::array({m.forms()[w.form].id, m.game().form().key(w.profile)}));
  out["worlds"] = std::move(worlds);
  json rels = json::object();
  if (m.intensional())
    for (Player i = 0; i < m.players(); ++i) {
      json pairs = json::array();
      const auto& r = m.agent_relation(i);
      for (std::size_t a = 0; a < r.size(); ++a)
        for_each_state(r.successors(a), [&](std::size_t b) { pairs.push_back(json::array({a, b})); });
      rels[std::to_string(i + 1)] = std::move(pairs);
    }
  out["relations"] = std::move(rels);
  return out;
}

inline Model model_from_json(const json& j) {
  try {
    StrategicGame game = game_from_json(j.at("game"));
    std::vector<std::pair<std::string, GameForm>> forms;
    for (const auto& f : j.at("forms"))
      forms.emplace_back(f.at("id").get<std::string>(),
                         GameForm(f.at("strategies").get<std::vector<std::vector<std::string>>>()));
    std::vector<World> worlds;
    for (const auto& w : j.at("worlds")) {
      auto id = w.at(0).get<std::string>();
      std::size_t f = forms.size();
      for (std::size_t k = 0; k < forms.size(); ++k)
        if (forms[k].first == id) f = k;
      if (f == forms.size()) throw InputError("world refers to unknown form '" + id + "'");
      worlds.push_back({f, game.form().parse_key(w.at(1).get<std::string>())});
    }
    std::vector<Relation> agents(game.players(), Relation(worlds.size()));
    const auto& rels = j.at("relations");
    for (const auto& [agent, pairs] : rels.items()) {
      std::size_t i = std::stoul(agent);
      if (i < 1 || i > game.players()) throw InputError("relation for unknown agent '" + agent + "'");
      for (const auto& p : pairs) {
        auto a = p.at(0).get<std::size_t>(), b = p.at(1).get<std::size_t>();
        if (a >= worlds.size() || b >= worlds.size()) throw InputError("relation pair out of range");
        agents[i - 1].add(a, b);
      }
    }
    return Model(std::move(game), std::move(forms), std::move(worlds), std::move(agents));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid model: ") + e.what());
  }
}

}  // namespace masl
