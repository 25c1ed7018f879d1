#pragma once

// Kripke models over strategic games. A flat (MASL) model has one world per
// profile of the game. An intensional (EMASL) model has worlds that pair a
// strategy restriction of the ambient form with a profile of that
// restriction, plus one accessibility relation per agent. Valuation always
// comes from the ambient game's outcome at the world's profile.

#include "masl/game.hpp"
#include "masl/relation.hpp"
#include "masl/signature.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace masl {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strategy restriction of the ambient form, as it appears inside a model.
struct ModelForm {
  std::string id;
  GameForm form;  // restricted strategy names
  // allowed[i][a]: ambient strategy a of player i is available here
  std::vector<std::vector<bool>> allowed;
  // available[i]: ambient indices of the available strategies, in ambient order
  std::vector<std::vector<StrategyIndex>> available;
};

struct World {
  std::size_t form = 0;
  Profile profile;  // ambient strategy indices
};

class Model {
 public:
  Model(StrategicGame game, std::vector<std::pair<std::string, GameForm>> forms, std::vector<World> worlds,
        std::optional<std::vector<Relation>> agents)
      : game_(std::make_shared<const StrategicGame>(std::move(game))), worlds_(std::move(worlds)),
        agents_(std::move(agents)) {
    const auto& ambient = game_->form();
    for (auto& [id, form] : forms) {
      if (form.players() != ambient.players()) throw std::invalid_argument("form '" + id + "' has wrong player count");
      ModelForm mf{id, form, {}, {}};
      for (Player i = 0; i < ambient.players(); ++i) {
        std::vector<bool> allowed(ambient.strategies(i).size(), false);
        for (const auto& name : form.strategies(i)) {
          auto idx = ambient.strategy_index(i, name);
          if (!idx)
            throw std::invalid_argument("form '" + id + "' is not a restriction: '" + name +
                                        "' is not a strategy of player " + std::to_string(i + 1));
          allowed[*idx] = true;
        }
        std::vector<StrategyIndex> avail;
        for (StrategyIndex a = 0; a < allowed.size(); ++a)
          if (allowed[a]) avail.push_back(a);
        mf.allowed.push_back(std::move(allowed));
        mf.available.push_back(std::move(avail));
      }
      forms_.push_back(std::move(mf));
    }
    lookup_.assign(forms_.size(), std::vector<std::optional<std::size_t>>(ambient.profile_count()));
    for (std::size_t w = 0; w < worlds_.size(); ++w) {
      const auto& wd = worlds_[w];
      if (wd.form >= forms_.size()) throw std::invalid_argument("world refers to an unknown form");
      if (!ambient.valid(wd.profile)) throw std::invalid_argument("world profile invalid in the ambient form");
      for (Player i = 0; i < ambient.players(); ++i)
        if (!forms_[wd.form].allowed[i][wd.profile[i]])
          throw std::invalid_argument("world profile is not valid in form '" + forms_[wd.form].id + "'");
      auto& slot = lookup_[wd.form][ambient.rank(wd.profile)];
      if (slot) throw std::invalid_argument("duplicate world " + key(w));
      slot = w;
    }
    if (agents_) {
      if (agents_->size() != ambient.players()) throw std::invalid_argument("need one relation per agent");
      for (const auto& r : *agents_)
        if (r.size() != worlds_.size()) throw std::invalid_argument("agent relation size differs from world count");
    }
  }

  /// The MASL model of a game: one world per profile, in enumeration order.
  static Model flat(StrategicGame game) {
    GameForm form = game.form();
    std::vector<World> worlds;
    for (auto& p : all_profiles(form)) worlds.push_back({0, std::move(p)});
    return Model(std::move(game), {{"G", std::move(form)}}, std::move(worlds), std::nullopt);
  }

  const StrategicGame& game() const { return *game_; }
  Signature signature() const { return Signature::of(*game_); }
  std::size_t size() const { return worlds_.size(); }
  std::size_t players() const { return game_->players(); }
  bool intensional() const { return agents_.has_value(); }

  const World& world(std::size_t w) const { return worlds_.at(w); }
  const std::vector<World>& worlds() const { return worlds_; }
  const std::vector<ModelForm>& forms() const { return forms_; }
  const ModelForm& form_of(std::size_t w) const { return forms_.at(worlds_.at(w).form); }
  const OutcomeRecord& outcome(std::size_t w) const { return game_->outcome(worlds_.at(w).profile); }

  std::optional<std::size_t> find(std::size_t form, const Profile& p) const {
    if (form >= forms_.size() || !game_->form().valid(p)) return std::nullopt;
    return lookup_[form][game_->form().rank(p)];
  }

  const Relation& agent_relation(Player i) const {
    if (!agents_) throw EvalError("agent modality used on a model without accessibility relations");
    if (i >= agents_->size()) throw EvalError("agent " + std::to_string(i + 1) + " out of range");
    return (*agents_)[i];
  }
  const std::optional<std::vector<Relation>>& agent_relations() const { return agents_; }

  /// "c,d" for flat models, "<form id>:c,d" for intensional ones.
  std::string key(std::size_t w) const {
    std::string k = game_->form().key(worlds_.at(w).profile);
    if (!intensional()) return k;
    return forms_[worlds_[w].form].id + ":" + k;
  }

  std::size_t parse_key(const std::string& text) const {
    std::size_t form = 0;
    std::string rest = text;
    if (intensional()) {
      auto colon = text.rfind(':');
      if (colon == std::string::npos) throw std::invalid_argument("world key '" + text + "' lacks a form id");
      auto id = text.substr(0, colon);
      rest = text.substr(colon + 1);
      form = forms_.size();
      for (std::size_t f = 0; f < forms_.size(); ++f)
        if (forms_[f].id == id) form = f;
      if (form == forms_.size()) throw std::invalid_argument("unknown form id '" + id + "'");
    }
    auto w = find(form, game_->form().parse_key(rest));
    if (!w) throw std::invalid_argument("no world '" + text + "' in the model");
    return *w;
  }

 private:
  std::shared_ptr<const StrategicGame> game_;
  std::vector<ModelForm> forms_;
  std::vector<World> worlds_;
  std::optional<std::vector<Relation>> agents_;
  std::vector<std::vector<std::optional<std::size_t>>> lookup_;
};

}  // namespace masl
