#pragma once

// Command-line front end. `run` is kept separate from main so tests can drive it.
// Exit codes: 0 ok/true, 1 property false, 2 usage or input error.

#include "masl/ast_json.hpp"
#include "masl/calculus.hpp"
#include "masl/checker.hpp"
#include "masl/coalition.hpp"
#include "masl/epistemic.hpp"
#include "masl/game_io.hpp"
#include "masl/parser.hpp"
#include "masl/properties.hpp"
#include "masl/voting_audit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace masl::cli {

namespace detail {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

inline json keys(const Model& m, const StateSet& set) {
  json out = json::array();
  for_each_state(set, [&](std::size_t w) { out.push_back(m.key(w)); });
  return out;
}

inline json report_json(const ValidityReport& r) {
  json cex = json::array();
  for (const auto& x : r.results) {
    if (x.valid) continue;
    cex.push_back({{"schema", schema_name(x.schema)}, {"formula", x.formula}, {"model", *x.model}, {"state", *x.state}});
  }
  return {{"checked", r.checked}, {"invalid", r.invalid}, {"counterexamples", cex}};
}

inline void write_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

/// --formula text or a named --property, against the model's signature.
struct FormulaSource {
  std::string formula, property, strategy;
  int player = 0;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--formula,-f", formula, "formula text");
    auto* p = cmd->add_option("--property,-p", property, "named property");
    f->excludes(p);
    cmd->add_option("--player", player, "player for the property (1-based)");
    cmd->add_option("--strategy", strategy, "strategy for the property");
  }

  Property build(const Signature& sig) const {
    if (!formula.empty()) return parse_formula(formula, sig);
    if (property.empty()) throw Usage("one of --formula or --property is required");
    PropertyParams params;
    if (player > 0) params.player = static_cast<Player>(player - 1);
    if (!strategy.empty()) params.strategy = strategy;
    return build_property(property, sig, params);
  }
};

/// Evaluates at every state; with `at` set, the exit code reports truth there.
inline int evaluate(const Model& m, const FormulaSource& src, const std::string& at, std::ostream& out) {
  auto prop = src.build(m.signature());
  Checker checker(m);
  json j;
  std::optional<bool> holds;
  if (auto f = std::get_if<Formula>(&prop)) {
    auto ext = checker.extension(*f);
    j["formula"] = render(*f);
    j["extension"] = keys(m, ext);
    if (!at.empty()) holds = ext.test(m.parse_key(at));
  } else {
    const auto& p = std::get<Program>(prop);
    const auto& rel = checker.relation(p);
    j["program"] = render(p);
    json pairs = json::array();
    for (std::size_t a = 0; a < rel.size(); ++a)
      for_each_state(rel.successors(a), [&](std::size_t b) { pairs.push_back({m.key(a), m.key(b)}); });
    j["pairs"] = pairs;
    if (!at.empty()) holds = rel.successors(m.parse_key(at)).any();
  }
  if (holds) j["holdsAt"] = *holds;
  out << j.dump(2) << "\n";
  return holds && !*holds ? 1 : 0;
}

// Demo bookkeeping: one line per claim.
struct Claims {
  std::ostream& out;
  bool ok = true;

  void operator()(bool holds, const std::string& what) {
    out << (holds ? "  ok    " : "  FAIL  ") << what << "\n";
    ok = ok && holds;
  }
};

inline std::string payoff_string(const OutcomeRecord& o) {
  std::string s = "(";
  for (std::size_t k = 0; k < o.utils.size(); ++k) s += (k ? "," : "") + to_string(o.utils[k]);
  return s + ")";
}

inline void print_game(const StrategicGame& g, std::ostream& out) {
  for (const auto& p : all_profiles(g.form()))
    out << "  " << g.form().key(p) << "  " << payoff_string(g.outcome(p)) << "  " << g.outcome(p).label << "\n";
}

inline bool demo_pd(std::ostream& out) {
  Claims claim{out};
  auto g = prisoners_dilemma();
  auto m = Model::flat(g);
  auto sig = m.signature();
  Checker ch(m);
  out << "prisoner's dilemma\n";
  print_game(g, out);
  auto cc = g.form().rank(g.form().parse_key("c,c"));
  auto dd = g.form().rank(g.form().parse_key("d,d"));
  claim(ch.satisfies(cc, parse_formula("[(d,d)] u1=1", sig)), "[(d,d)] u1=1 at (c,c)");
  auto nash = ch.extension(props::nash_here(sig));
  claim(nash.count() == 1 && nash.test(dd), "nashHere holds exactly at (d,d)");
  claim(nash_set(g).size() == 1 && nash_set(g)[0] == g.form().unrank(dd), "best-response oracle agrees");
  claim(ch.extension(props::weak_dominance(sig, 0, "d")).all(), "d weakly dominant for player 1");
  claim(ch.extension(props::weak_dominance(sig, 1, "d")).all(), "d weakly dominant for player 2");
  claim(ch.extension(props::weak_dominance(sig, 0, "c")).none(), "c not weakly dominant for player 1");
  auto cl = parse_cl("[C {1,2}] u1=3", sig);
  bool agree = true, everywhere = true;
  auto tr = ch.extension(translate(cl, g.form()));
  for (std::size_t s = 0; s < m.size(); ++s) {
    everywhere = everywhere && cl_check(m, s, cl);
    agree = agree && cl_check(m, s, cl) == tr.test(s);
  }
  claim(everywhere && agree, "[C {1,2}] u1=3 true everywhere, translation agrees");
  auto vec_rep = soundness_sweep({m}, vector_schemas());
  claim(vec_rep.all_valid(), "vector axiom instances valid (" + std::to_string(vec_rep.checked) + " checked)");
  auto c_any = VectorExpr{{StrategyTerm::concrete("c"), StrategyTerm::adversary()}};
  auto shape = axioms::functionality_shape(c_any, util_eq(1, Rational(2)));
  auto rep = validity_report({m}, {{Schema::Functionality, shape}});
  claim(!rep.all_valid(), render(shape) + " invalid, counterexample at " + rep.results[0].state.value_or("-"));
  return claim.ok;
}

inline BallotProfile section4_ballots(const std::vector<Alternative>& alts) {
  return {Ballot::parse("abc", alts), Ballot::parse("bca", alts), Ballot::parse("cab", alts)};
}

inline bool demo_vote(std::ostream& out, bool tiebreak) {
  Claims claim{out};
  std::vector<Alternative> alts = {"a", "b", "c"};
  auto rule = VotingRule::plurality(alts);
  if (tiebreak) rule = VotingRule::resolute(rule, Ballot::parse("abc", alts));
  auto ballots = section4_ballots(alts);
  auto g = induced_game(rule, ballots);
  auto m = Model::flat(g);
  auto sig = voting_signature(g, rule);
  Checker ch(m);
  out << rule.name() << " with true ballots abc, bca, cab\n";
  print_game(g, out);
  auto truthful = g.form().rank(truthful_profile(rule, ballots));
  auto nash = ch.extension(props::nash_here(sig));
  if (!tiebreak) {
    claim(payoff_string(g.outcome(truthful)) == "(1,1,1)", "payoff at (a,b,c) is (1,1,1)");
    claim(nash.test(truthful), "(a,b,c) is a Nash equilibrium");
    claim(ch.extension(props::plurality_rule(sig)).all(), "pluralityRule holds everywhere");
  } else {
    auto acc = g.form().rank(g.form().parse_key("a,c,c"));
    claim(payoff_string(g.outcome(truthful)) == "(2,0,1)", "payoff at (a,b,c) is (2,0,1)");
    claim(!nash.test(truthful), "(a,b,c) is not a Nash equilibrium");
    claim(nash.test(acc), "(a,c,c) is a Nash equilibrium");
    claim(ch.extension(props::resolute(sig)).all(), "resolute holds everywhere");
    auto rep = audit_rule(rule, 3);
    claim(rep.resolute && rep.non_imposed && !rep.strategy_proof && rep.dictators.empty(),
          "audit: resolute, non-imposed, manipulable, no dictator");
    if (rep.witness) out << "  witness " << audit_to_json(rep)["witness"].dump() << "\n";
    claim(is_manipulation(rule, ballots, 1, Ballot::parse("cab", alts)),
          "voter 2 gains by voting c at (abc,bca,cab)");
  }
  out << "  nash: " << keys(m, nash).dump() << "\n";
  return claim.ok;
}

inline Model figure5_model() {
  auto pd = prisoners_dilemma();
  return confusion_model(pd, restrict(pd.form(), {{"c"}, {"c", "d"}}), Coalition({1}));
}

inline bool demo_fig5(std::ostream& out) {
  Claims claim{out};
  auto m = figure5_model();
  auto sig = m.signature();
  Checker ch(m);
  auto actual = m.parse_key("G':c,d");
  out << "confusion model: PD restricted to S_1={c}, player 2 confused\n";
  for (std::size_t w = 0; w < m.size(); ++w) out << "  " << w << "  " << m.key(w) << "\n";
  json r2 = keys(m, m.agent_relation(1).successors(actual));
  out << "  R_2 from G':c,d reaches " << r2.dump() << "\n";
  claim(ch.satisfies(actual, props::dictator(sig, 1)), "player 2 is a dictator at G':c,d");
  claim(!ch.satisfies(actual, props::knowing_dictator(sig, 1)), "player 2 is not a knowing dictator at G':c,d");
  return claim.ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace detail;
  CLI::App app{"Model checker for strategic games and voting rules"};
  app.require_subcommand(1);

  std::string game_path, model_path, spec_path, output, state;
  FormulaSource src;

  auto* parse = app.add_subcommand("parse", "parse a formula or program, print rendering and AST");
  std::string program_text;
  parse->add_option("--game,-g", game_path, "game file")->required();
  auto* pf = parse->add_option("--formula,-f", src.formula, "formula text");
  parse->add_option("--program", program_text, "program text")->excludes(pf);

  auto* check = app.add_subcommand("check", "evaluate a formula on a game");
  check->add_option("--game,-g", game_path, "game file")->required();
  src.attach(check);
  check->add_option("--state,-s", state, "state key, e.g. c,d");

  auto* nash = app.add_subcommand("nash", "Nash equilibria by oracle and by formula");
  nash->add_option("--game,-g", game_path, "game file")->required();

  auto* voting = app.add_subcommand("voting", "voting rules");
  voting->require_subcommand(1);
  auto* audit = voting->add_subcommand("audit", "audit a rule for the GS properties");
  bool catalog = false;
  audit->add_option("--spec", spec_path, "voting spec file")->required();
  audit->add_flag("--catalog", catalog, "audit every shipped rule over the spec's alternatives and voters");
  auto* vgame = voting->add_subcommand("game", "emit the induced game");
  vgame->add_option("--spec", spec_path, "voting spec file")->required();
  vgame->add_option("-o,--output", output, "output file");

  auto* cl = app.add_subcommand("cl", "coalition logic");
  cl->require_subcommand(1);
  std::string cl_text;
  auto* cl_tr = cl->add_subcommand("translate", "translate into a MASL formula");
  auto* cl_ck = cl->add_subcommand("check", "evaluate directly and via translation");
  for (auto* c : {cl_tr, cl_ck}) {
    c->add_option("--game,-g", game_path, "game file")->required();
    c->add_option("--formula,-f", cl_text, "coalition-logic formula")->required();
  }
  cl_ck->add_option("--state,-s", state, "state key");

  auto* lift = app.add_subcommand("lift", "build an intensional model from a game");
  std::string restriction, confused;
  lift->add_option("--game,-g", game_path, "game file")->required();
  lift->add_option("-o,--output", output, "output model file");
  lift->add_option("--restrict", restriction, "per-player subsets, e.g. \"c;c,d\"");
  lift->add_option("--confused", confused, "players confusing the restriction with the game, e.g. 2");

  auto* echeck = app.add_subcommand("echeck", "evaluate a formula on an intensional model");
  echeck->add_option("--model,-m", model_path, "model file")->required();
  src.attach(echeck);
  echeck->add_option("--world,-w", state, "world key, e.g. G:c,d");

  auto* ax = app.add_subcommand("axioms", "check axiom schema instances");
  std::vector<std::string> games, models;
  bool epistemic = false;
  ax->add_option("--game,-g", games, "game file(s)");
  ax->add_option("--model,-m", models, "intensional model file(s)");
  ax->add_flag("--epistemic", epistemic, "also check the epistemic schemas on the games' lifts");

  auto* demo = app.add_subcommand("demo", "worked examples with their claims");
  std::string which;
  demo->add_option("name", which, "pd | vote3 | vote3tb | fig5")
      ->required()
      ->check(CLI::IsMember({"pd", "vote3", "vote3tb", "fig5"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) {
      auto sig = Signature::of(load_game(game_path));
      json j;
      if (!program_text.empty()) {
        auto p = parse_program(program_text, sig);
        j = {{"rendered", render(p)}, {"ast", to_json(p)}};
      } else if (!src.formula.empty()) {
        auto f = parse_formula(src.formula, sig);
        j = {{"rendered", render(f)}, {"ast", to_json(f)}};
      } else {
        throw Usage("one of --formula or --program is required");
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*check) return evaluate(Model::flat(load_game(game_path)), src, state, out);
    if (*echeck) return evaluate(model_from_json(read_json_file(model_path)), src, state, out);
    if (*nash) {
      auto g = load_game(game_path);
      auto m = Model::flat(g);
      auto ext = extension(m, props::nash_here(m.signature()));
      StateSet oracle(m.size());
      for (const auto& p : nash_set(g)) oracle.set(g.form().rank(p));
      bool agree = oracle == ext;
      out << json{{"oracle", keys(m, oracle)}, {"formula", keys(m, ext)}, {"agree", agree}}.dump(2) << "\n";
      return agree ? 0 : 1;
    }
    if (*audit) {
      auto spec = voting_spec_from_json(read_json_file(spec_path));
      auto n = spec.ballots.size();
      if (!catalog) {
        out << audit_to_json(audit_rule(spec.rule, n)).dump(2) << "\n";
        return 0;
      }
      json all = json::array();
      bool gs = true;
      for (const auto& r : rule_catalog(spec.rule.alternatives(), n)) {
        auto rep = audit_rule(r, n);
        gs = gs && rep.gs_consistent;
        all.push_back(audit_to_json(rep));
      }
      out << json{{"rules", all}, {"gsConsistent", gs}}.dump(2) << "\n";
      return gs ? 0 : 1;
    }
    if (*vgame) {
      auto spec = voting_spec_from_json(read_json_file(spec_path));
      write_json(game_to_json(induced_game(spec.rule, spec.ballots)), output, out);
      return 0;
    }
    if (*cl_tr || *cl_ck) {
      auto g = load_game(game_path);
      auto m = Model::flat(g);
      auto f = parse_cl(cl_text, m.signature());
      auto tr = translate(f, g.form());
      if (*cl_tr) {
        out << json{{"formula", render(f)}, {"translation", render(tr)}}.dump(2) << "\n";
        return 0;
      }
      StateSet direct(m.size());
      for (std::size_t s = 0; s < m.size(); ++s) direct[s] = cl_check(m, s, f);
      auto via = extension(m, tr);
      json j{{"formula", render(f)}, {"extension", keys(m, direct)}, {"agree", direct == via}};
      std::optional<bool> holds;
      if (!state.empty()) holds = direct.test(m.parse_key(state));
      if (holds) j["holdsAt"] = *holds;
      out << j.dump(2) << "\n";
      return holds && !*holds ? 1 : 0;
    }
    if (*lift) {
      auto g = load_game(game_path);
      if (restriction.empty() && !confused.empty()) throw Usage("--confused needs --restrict");
      Model m = [&] {
        if (restriction.empty()) return epistemic_lift(g);
        std::vector<std::vector<std::string>> subsets;
        for (const auto& part : split(restriction, ';')) subsets.push_back(split(part, ','));
        std::vector<Player> who;
        for (const auto& c : split(confused, ',')) {
          auto i = std::stoul(c);
          if (i < 1 || i > g.players()) throw InputError("no player " + c);
          who.push_back(i - 1);
        }
        return confusion_model(g, restrict(g.form(), subsets), Coalition(who));
      }();
      write_json(model_to_json(m), output, out);
      return 0;
    }
    if (*ax) {
      if (games.empty() && models.empty()) throw Usage("axioms needs --game or --model");
      std::vector<Model> flat, lifted;
      std::vector<std::string> notes;
      for (const auto& path : games) {
        auto g = load_game(path);
        flat.push_back(Model::flat(g));
        if (!epistemic) continue;
        for (Player i = 0; i < g.players(); ++i)
          if (g.form().strategies(i).size() < 2)
            notes.push_back(path + ": player " + std::to_string(i + 1) +
                            " has one strategy, other-action ignorance can fail there");
        lifted.push_back(epistemic_lift(g));
      }
      for (const auto& path : models) lifted.push_back(model_from_json(read_json_file(path)));
      auto vec = soundness_sweep(flat, vector_schemas());
      json j{{"vector", report_json(vec)}};
      bool ok = vec.all_valid();
      if (!lifted.empty()) {
        auto ep = soundness_sweep(lifted, epistemic_schemas());
        j["epistemic"] = report_json(ep);
        ok = ok && ep.all_valid();
      }
      j["notes"] = notes;
      out << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    if (*demo) {
      bool ok = which == "pd"        ? demo_pd(out)
                : which == "vote3"   ? demo_vote(out, false)
                : which == "vote3tb" ? demo_vote(out, true)
                                     : demo_fig5(out);
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace masl::cli
