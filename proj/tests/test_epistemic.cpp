#include "masl/checker.hpp"
#include "masl/epistemic.hpp"
#include "masl/parser.hpp"
#include "masl/properties.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace masl;

namespace {

std::vector<std::string> keys(const Model& m, const StateSet& s) {
  std::vector<std::string> out;
  for_each_state(s, [&](std::size_t w) { out.push_back(m.key(w)); });
  return out;
}

GameForm committed() { return restrict(prisoners_dilemma().form(), {{"c"}, {"c", "d"}}); }

}  // namespace

TEST(Restrict, CommittedPlayerOne) {
  auto r = committed();
  std::vector<std::string> got;
  for (const auto& p : all_profiles(r)) got.push_back(r.key(p));
  EXPECT_EQ(got, (std::vector<std::string>{"c,c", "c,d"}));
  EXPECT_THROW(restrict(prisoners_dilemma().form(), {{}, {"c"}}), std::invalid_argument);
  EXPECT_THROW(restrict(prisoners_dilemma().form(), {{"x"}, {"c"}}), std::invalid_argument);
  EXPECT_THROW(restrict(prisoners_dilemma().form(), {{"c"}}), std::invalid_argument);
}

TEST(Restrict, IdentityAndComposition) {
  std::mt19937 rng(31);
  for (int k = 0; k < 40; ++k) {
    auto f = fixtures::random_game(rng).form();
    EXPECT_EQ(restrict(f, f.strategy_sets()), f);
    // keep a random nonempty subset twice; the second pass keeps a subset of the first
    std::vector<std::vector<std::string>> a, b;
    for (Player i = 0; i < f.players(); ++i) {
      const auto& s = f.strategies(i);
      a.push_back({});
      for (const auto& x : s)
        if (fixtures::pick(rng, 0, 1)) a.back().push_back(x);
      if (a.back().empty()) a.back().push_back(s.back());
      b.push_back({a.back().front()});
    }
    EXPECT_EQ(restrict(restrict(f, a), b), restrict(f, b));
  }
}

TEST(Lift, AgentClasses) {
  Model m = epistemic_lift(prisoners_dilemma());
  const auto& r1 = m.agent_relation(0);
  EXPECT_TRUE(r1.reflexive() && r1.symmetric() && r1.transitive());
  EXPECT_EQ(keys(m, r1.successors(m.parse_key("G:c,c"))), (std::vector<std::string>{"G:c,c", "G:c,d"}));
  EXPECT_EQ(keys(m, r1.successors(m.parse_key("G:d,d"))), (std::vector<std::string>{"G:d,c", "G:d,d"}));
  EXPECT_EQ(keys(m, m.agent_relation(1).successors(m.parse_key("G:c,d"))),
            (std::vector<std::string>{"G:c,d", "G:d,d"}));
  auto f = parse_formula("[(ag1+ag2)*] T & <(ag1+ag2)*> label(dd)", m.signature());
  EXPECT_TRUE(extension(m, f).all());
}

TEST(Lift, RandomLiftsAreEquivalences) {
  std::mt19937 rng(32);
  for (int k = 0; k < 30; ++k) {
    Model m = epistemic_lift(fixtures::random_game(rng));
    for (Player i = 0; i < m.players(); ++i) {
      const auto& r = m.agent_relation(i);
      EXPECT_TRUE(r.reflexive() && r.symmetric() && r.transitive());
    }
  }
}

TEST(Confusion, CommittedGameConfusedByPlayerTwo) {
  auto pd = prisoners_dilemma();
  Model m = confusion_model(pd, committed(), Coalition({1}));
  EXPECT_EQ(m.size(), 6u);
  auto actual = m.parse_key("G':c,d");
  EXPECT_EQ(keys(m, m.agent_relation(1).successors(actual)),
            (std::vector<std::string>{"G':c,d", "G:c,d", "G:d,d"}));
  EXPECT_EQ(keys(m, m.agent_relation(0).successors(actual)), (std::vector<std::string>{"G':c,c", "G':c,d"}));
  auto sig = m.signature();
  Checker ch(m);
  EXPECT_TRUE(ch.satisfies(actual, props::dictator(sig, 1)));
  EXPECT_FALSE(ch.satisfies(actual, props::knowing_dictator(sig, 1)));
  // in the committed form player 2 gets 3 by defecting; in the full game d,d gives 1
  EXPECT_TRUE(ch.satisfies(actual, parse_formula("u2=3", sig)));
  EXPECT_TRUE(ch.satisfies(actual, parse_formula("<ag2> u2=1", sig)));
  EXPECT_FALSE(ch.satisfies(m.parse_key("G:c,d"), props::dictator(sig, 1)));
}

TEST(Confusion, NobodyConfused) {
  Model m = confusion_model(prisoners_dilemma(), committed(), Coalition(std::vector<Player>{}));
  Checker ch(m);
  auto reach = ch.relation(star(choice(agent(0), agent(1))));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      EXPECT_EQ(reach.contains(a, b), m.world(a).form == m.world(b).form) << m.key(a) << " " << m.key(b);
  EXPECT_THROW(confusion_model(prisoners_dilemma(), committed(), Coalition({4})), std::invalid_argument);
}

TEST(Confusion, VectorsStayInsideTheForm) {
  Model m = confusion_model(prisoners_dilemma(), committed(), Coalition({1}));
  auto sig = m.signature();
  Checker ch(m);
  auto v = ch.relation(parse_program("(d,??)", sig));
  EXPECT_TRUE(v.successors(m.parse_key("G':c,c")).none());
  EXPECT_EQ(keys(m, v.successors(m.parse_key("G:c,c"))), (std::vector<std::string>{"G:d,c", "G:d,d"}));
  EXPECT_EQ(keys(m, ch.relation(parse_program("(??,??)", sig)).successors(m.parse_key("G':c,c"))),
            (std::vector<std::string>{"G':c,c", "G':c,d"}));
  std::mt19937 rng(33);
  for (int k = 0; k < 50; ++k) {
    auto vec = fixtures::random_vector(rng, sig);
    const auto& r = ch.vector_relation(vec);
    for (std::size_t s = 0; s < m.size(); ++s)
      EXPECT_EQ(to_indices(r.successors(s)), fixtures::oracle_vector_successors(m, vec, s)) << render(vec);
  }
}

TEST(ModelJson, RoundTrip) {
  Model m = confusion_model(prisoners_dilemma(), committed(), Coalition({1}));
  Model back = model_from_json(model_to_json(m));
  ASSERT_EQ(back.size(), m.size());
  for (std::size_t w = 0; w < m.size(); ++w) EXPECT_EQ(back.key(w), m.key(w));
  for (Player i = 0; i < 2; ++i) EXPECT_TRUE(back.agent_relation(i) == m.agent_relation(i));
  EXPECT_EQ(model_to_json(back), model_to_json(m));
}

TEST(ModelJson, Errors) {
  auto j = model_to_json(epistemic_lift(prisoners_dilemma()));
  auto bad = j;
  bad["worlds"][0][0] = "H";
  EXPECT_THROW(model_from_json(bad), InputError);
  bad = j;
  bad["relations"]["1"].push_back({0, 9});
  EXPECT_THROW(model_from_json(bad), InputError);
  bad = j;
  bad["relations"]["3"] = json::array();
  EXPECT_THROW(model_from_json(bad), InputError);
  bad = j;
  bad["worlds"].push_back({"G", "c,c"});
  EXPECT_THROW(model_from_json(bad), InputError);
  bad = j;
  bad["forms"][0]["strategies"] = {{"c", "x"}, {"c", "d"}};
  EXPECT_THROW(model_from_json(bad), InputError);
}
