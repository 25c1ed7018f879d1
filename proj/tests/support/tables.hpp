#pragma once

// Reference payoff tables for the three-voter plurality game with true
// ballots abc, bca, cab. One table per vote of voter 3; rows are voter 1's
// vote and columns voter 2's, each entry the digits of (u1,u2,u3).

#include <array>
#include <string>

namespace masl::fixtures {

using Table = std::array<std::array<const char*, 3>, 3>;

inline const std::array<Table, 3>& plurality_tables() {
  static const std::array<Table, 3> t = {{
      {{{"201", "201", "201"}, {"201", "120", "111"}, {"201", "111", "012"}}},
      {{{"201", "120", "111"}, {"120", "120", "120"}, {"111", "120", "012"}}},
      {{{"201", "111", "012"}, {"111", "120", "012"}, {"012", "012", "012"}}},
  }};
  return t;
}

// Ties broken in the order a, b, c.
inline const std::array<Table, 3>& tiebreak_tables() {
  static const std::array<Table, 3> t = {{
      {{{"201", "201", "201"}, {"201", "120", "201"}, {"201", "201", "012"}}},
      {{{"201", "120", "201"}, {"120", "120", "120"}, {"201", "120", "012"}}},
      {{{"201", "201", "012"}, {"201", "120", "012"}, {"012", "012", "012"}}},
  }};
  return t;
}

}  // namespace masl::fixtures
