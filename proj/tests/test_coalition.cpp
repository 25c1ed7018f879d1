#include "masl/checker.hpp"
#include "masl/coalition.hpp"
#include "masl/game_io.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace masl;

TEST(CoalitionLogic, PrisonersDilemma) {
  Model m = Model::flat(prisoners_dilemma());
  auto sig = m.signature();
  auto holds = [&](const char* text) {
    auto f = parse_cl(text, sig);
    std::size_t n = 0;
    for (std::size_t s = 0; s < m.size(); ++s) n += cl_check(m, s, f);
    EXPECT_TRUE(n == 0 || n == m.size()) << text;
    return n == m.size();
  };
  EXPECT_TRUE(holds("[C {2}] (u2=1 | u2=2 | u2=3)"));
  EXPECT_FALSE(holds("[C {2}] u2=3"));
  EXPECT_TRUE(holds("[C {}] (u1=0 | u1=1 | u1=2 | u1=3)"));
  EXPECT_FALSE(holds("[C {}] ~u1=0"));
  EXPECT_TRUE(holds("[C {1,2}] u1=3"));
  EXPECT_THROW(cl_check(m, 0, cl_box(Coalition({5}), cl_top())), EvalError);
}

TEST(CoalitionLogic, Vectors) {
  auto f = prisoners_dilemma().form();
  auto render_all = [](const std::vector<VectorExpr>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(render(v));
    return out;
  };
  EXPECT_EQ(render_all(coalition_vectors(Coalition({1}), f)), (std::vector<std::string>{"(??,c)", "(??,d)"}));
  EXPECT_EQ(render_all(coalition_vectors(Coalition(std::vector<Player>{}), f)), (std::vector<std::string>{"(??,??)"}));
  EXPECT_EQ(coalition_vectors(Coalition::grand(2), f).size(), 4u);
}

TEST(CoalitionLogic, Translate) {
  Model m = Model::flat(prisoners_dilemma());
  auto sig = m.signature();
  EXPECT_EQ(render(translate(parse_cl("[C {2}] u1=1", sig), sig.form)), "[(??,c)] u1=1 | [(??,d)] u1=1");
  EXPECT_EQ(render(translate(parse_cl("u1=1", sig), sig.form)), "u1=1");
  auto grand = translate(parse_cl("[C {1,2}] u1=3", sig), sig.form);
  EXPECT_EQ(render(grand), "[(c,c)] u1=3 | [(c,d)] u1=3 | [(d,c)] u1=3 | [(d,d)] u1=3");
  EXPECT_TRUE(extension(m, grand).all());
}

TEST(CoalitionLogic, ParseAndRender) {
  auto sig = Signature::of(prisoners_dilemma());
  auto f = parse_cl("[C {1}] ~(u1=1 & label(cc))", sig);
  EXPECT_EQ(render(f), "[C {1}] ~(u1=1 & label(cc))");
  EXPECT_TRUE(same(parse_cl(render(f), sig), f));
  EXPECT_THROW(parse_cl("[D {1}] T", sig), ParseError);
  EXPECT_THROW(parse_cl("[C {3}] T", sig), ParseError);
  EXPECT_THROW(parse_cl("[C {1] T", sig), ParseError);
  EXPECT_THROW(parse_cl("[(c,c)] T", sig), ParseError);
}

TEST(CoalitionLogic, TranslationAgreesOnRandomGames) {
  std::mt19937 rng(41);
  std::size_t checked = 0;
  for (int k = 0; k < 100; ++k) {
    auto g = fixtures::random_game(rng);
    Model m = Model::flat(g);
    Checker ch(m);
    for (int j = 0; j < 3; ++j) {
      auto f = fixtures::random_cl(rng, g, 3);
      auto ext = ch.extension(translate(f, g.form()));
      for (std::size_t s = 0; s < m.size(); ++s) {
        EXPECT_EQ(cl_check(m, s, f), ext.test(s)) << render(f) << " at " << m.key(s);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(CoalitionLogic, MonotoneAndSourceIndependent) {
  std::mt19937 rng(42);
  for (int k = 0; k < 60; ++k) {
    auto g = fixtures::random_game(rng);
    Model m = Model::flat(g);
    auto body = fixtures::random_cl(rng, g, 2);
    std::vector<Player> small, big;
    for (Player i = 0; i < g.players(); ++i) {
      auto r = fixtures::pick(rng, 0, 2);
      if (r == 0) small.push_back(i);
      if (r <= 1) big.push_back(i);
    }
    auto a = cl_box(Coalition(small), body), b = cl_box(Coalition(big), body);
    bool first = cl_check(m, 0, a);
    for (std::size_t s = 0; s < m.size(); ++s) {
      EXPECT_EQ(cl_check(m, s, a), first);
      if (cl_check(m, s, a)) {
        EXPECT_TRUE(cl_check(m, s, b)) << render(a);
      }
    }
  }
}
