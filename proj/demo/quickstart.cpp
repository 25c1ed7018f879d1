// Small tour of the library: build a game, parse formulas, check them.

#include "masl/checker.hpp"
#include "masl/coalition.hpp"
#include "masl/game_io.hpp"
#include "masl/parser.hpp"
#include "masl/properties.hpp"
#include "masl/voting.hpp"

#include <iostream>

int main() {
  using namespace masl;

  auto pd = prisoners_dilemma();
  Model m = Model::flat(pd);
  auto sig = m.signature();
  Checker checker(m);

  for (const char* text : {"[(d,d)] u1=1", "<(c,??)> u2>=2", "[(!!,d)] u2=3 | u2=1", "nope"}) {
    try {
      auto f = parse_formula(text, sig);
      std::cout << render(f) << "  holds at:";
      for_each_state(checker.extension(f), [&](std::size_t s) { std::cout << " " << m.key(s); });
      std::cout << "\n";
    } catch (const ParseError& e) {
      std::cout << "parse error " << e.what() << "\n";
    }
  }

  // Nash equilibria two ways.
  std::cout << "nash (formula):";
  for_each_state(checker.extension(props::nash_here(sig)), [&](std::size_t s) { std::cout << " " << m.key(s); });
  std::cout << "\nnash (oracle):";
  for (const auto& p : nash_set(pd)) std::cout << " " << pd.form().key(p);
  std::cout << "\n";

  // Coalition logic and its translation.
  auto cl = parse_cl("[C {2}] ~u2=0", sig);
  std::cout << render(cl) << "  ~>  " << render(translate(cl, pd.form())) << "\n";

  // A voting game.
  std::vector<Alternative> alts = {"a", "b", "c"};
  BallotProfile ballots = {Ballot::parse("abc", alts), Ballot::parse("bca", alts), Ballot::parse("cab", alts)};
  auto game = induced_game(VotingRule::plurality(alts), ballots);
  std::cout << "plurality game has " << game.form().profile_count() << " profiles, "
            << nash_set(game).size() << " Nash equilibria\n";
  return 0;
}
