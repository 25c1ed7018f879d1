#include "masl/abbreviations.hpp"
#include "masl/ast_json.hpp"
#include "masl/game_io.hpp"
#include "masl/parser.hpp"
#include "masl/printer.hpp"
#include "masl/voting.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace masl;

namespace {

Signature pd_sig() { return Signature::of(prisoners_dilemma()); }

Signature vote_sig() {
  std::vector<Alternative> abc = {"a", "b", "c"};
  auto rule = VotingRule::plurality(abc);
  auto g = induced_game(rule, {Ballot::parse("abc", abc), Ballot::parse("bca", abc), Ballot::parse("cab", abc)});
  return voting_signature(g, rule);
}

std::string canon(const std::string& text, const Signature& sig) { return render(parse_formula(text, sig)); }

}  // namespace

TEST(Parser, Atoms) {
  auto sig = pd_sig();
  EXPECT_TRUE(same(parse_formula("T", sig), top()));
  EXPECT_TRUE(same(parse_formula("u1=2", sig), util_eq(0, Rational(2))));
  EXPECT_TRUE(same(parse_formula("u2=-1/2", sig), util_eq(1, Rational(-1, 2))));
  EXPECT_TRUE(same(parse_formula("label(cd)", sig), label("cd")));
  auto v = VectorExpr{{StrategyTerm::concrete("c"), StrategyTerm::adversary()}};
  EXPECT_TRUE(same(parse_formula("(c, ??)", sig), vec_atom(v)));
  EXPECT_TRUE(same(parse_formula("win(a)", vote_sig()), winner("a")));
}

TEST(Parser, Precedence) {
  auto sig = pd_sig();
  EXPECT_EQ(canon("~u1=1 & u1=2 | u1=3", sig), "~u1=1 & u1=2 | u1=3");
  EXPECT_EQ(canon("(u1=1 | u1=2) & u1=3", sig), "(u1=1 | u1=2) & u1=3");
  EXPECT_EQ(canon("T -> T -> T", sig), "T -> T -> T");
  EXPECT_TRUE(same(parse_formula("T -> u1=1 -> u1=2", sig), implies(top(), implies(util_eq(0, 1), util_eq(0, 2)))));
  EXPECT_EQ(canon("(T -> T) -> T", sig), "(T -> T) -> T");
  EXPECT_TRUE(same(parse_formula("T <-> T <-> u1=1", sig), iff(iff(top(), top()), util_eq(0, 1))));
  EXPECT_EQ(canon("[(c,d)] u1=0 & T", sig), "[(c,d)] u1=0 & T");
  EXPECT_EQ(canon("[(c,d)] (u1=0 & T)", sig), "[(c,d)] (u1=0 & T)");
  EXPECT_EQ(canon("[(c,d);(d,d)+(c,c)*] T", sig), "[(c,d);(d,d)+(c,c)*] T");
  EXPECT_EQ(canon("[(c,d);((d,d)+(c,c))*] T", sig), "[(c,d);((d,d)+(c,c))*] T");
  EXPECT_EQ(canon("<?u1=2;(!!,d)> T", sig), "<?u1=2;(!!,d)> T");
  EXPECT_EQ(canon("[ag1 + ag2^] T", sig), "[ag1+ag2^] T");
}

TEST(Parser, Sugar) {
  auto sig = pd_sig();
  // U = {0,1,2,3}
  EXPECT_TRUE(same(parse_formula("u1>=2", sig), disj(util_eq(0, 2), util_eq(0, 3))));
  EXPECT_TRUE(same(parse_formula("u2>2", sig), util_eq(1, 3)));
  EXPECT_TRUE(same(parse_formula("u2>3", sig), bottom()));
  EXPECT_EQ(canon("u2>3", sig), "~T");
}

TEST(Parser, Errors) {
  auto sig = pd_sig();
  auto pos = [&](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_formula(text, sig);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    ADD_FAILURE() << "no error for " << text;
    return {0, 0};
  };
  EXPECT_EQ(pos("u1=1 &"), (std::pair<std::size_t, std::size_t>{1, 7}));
  EXPECT_EQ(pos("(c,d,c)"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(pos("(c,x)"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(pos("u3=1"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(pos("T\n & [ag3] T"), (std::pair<std::size_t, std::size_t>{2, 5}));
  EXPECT_EQ(pos("win(a)"), (std::pair<std::size_t, std::size_t>{1, 5}));
  EXPECT_THROW(parse_formula("[(c,d) T", sig), ParseError);
  EXPECT_THROW(parse_formula("T T", sig), ParseError);
  EXPECT_THROW(parse_formula("u1=x", sig), ParseError);
  EXPECT_THROW(parse_formula("", sig), ParseError);
  EXPECT_THROW(parse_program("(c,d)+", sig), ParseError);
  EXPECT_THROW(parse_formula("u1 = 1/0", sig), ParseError);
}

TEST(Parser, Programs) {
  auto sig = pd_sig();
  auto p = parse_program("((c,d) + ?T)*; ag1^", sig);
  EXPECT_EQ(render(p), "((c,d)+?T)*;ag1^");
  EXPECT_EQ(to_json(p)["type"], "seq");
  EXPECT_EQ(to_json(p)["rhs"], json({{"type", "agentConverse"}, {"player", 1}}));
}

TEST(Printer, EmptyConnectives) {
  EXPECT_EQ(render(conj(std::vector<Formula>{})), "T");
  EXPECT_EQ(render(disj(std::vector<Formula>{})), "~T");
}

TEST(Printer, Abbreviations) {
  auto sig = pd_sig();
  EXPECT_EQ(render(vec_switch(sig, 0, "c")), "(c,!!)");
  EXPECT_EQ(render(vec_any(sig, 1, "d")), "(??,d)");
  EXPECT_EQ(render(box_every_state(sig, top())), "[(??,??)] T");
}

TEST(Printer, Json) {
  auto j = to_json(parse_formula("[(c,??)] u2=1/2", pd_sig()));
  EXPECT_EQ(j["type"], "box");
  EXPECT_EQ(j["program"]["terms"], json({"c", "??"}));
  EXPECT_EQ(j["sub"], json({{"type", "utilEq"}, {"player", 2}, {"value", "1/2"}}));
}

TEST(Parser, RoundTripRandomAsts) {
  std::mt19937 rng(20240611);
  auto vote = vote_sig();
  int failures = 0;
  for (int k = 0; k < 1000; ++k) {
    Signature sig = k % 3 == 0 ? vote : Signature::of(fixtures::random_game(rng));
    auto f = fixtures::random_formula(rng, sig, 6, true);
    auto text = render(f);
    try {
      auto back = parse_formula(text, sig);
      if (!same(back, f)) {
        ++failures;
        ADD_FAILURE() << text << " reparsed as " << render(back);
      }
    } catch (const std::exception& e) {
      ++failures;
      ADD_FAILURE() << text << ": " << e.what();
    }
    if (failures > 5) break;
  }
  EXPECT_EQ(failures, 0);
}

TEST(Parser, ProgramRoundTrip) {
  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    auto sig = Signature::of(fixtures::random_game(rng));
    auto p = fixtures::random_program(rng, sig, 5, true);
    EXPECT_TRUE(same(parse_program(render(p), sig), p)) << render(p);
  }
}
