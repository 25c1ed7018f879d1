#pragma once

#include "masl/game.hpp"

#include <string>
#include <vector>

namespace masl {

/// What the language needs to know about a game: player count, strategy
/// names, the utility range U and the alternatives A.
struct Signature {
  GameForm form;
  std::vector<Rational> utilities;
  std::vector<std::string> alternatives;

  static Signature of(const StrategicGame& game) {
    return {game.form(), game.utility_range(), game.alternatives()};
  }

  std::size_t players() const { return form.players(); }
  const std::vector<std::string>& strategies(Player i) const { return form.strategies(i); }
  bool has_alternative(const std::string& x) const {
    for (const auto& a : alternatives)
      if (a == x) return true;
    return false;
  }
};

}  // namespace masl
