#pragma once

// Axiom schemas for strategy vectors and epistemic lifts, instantiated over
// bounded vector and body pools and checked for validity on model families.

#include "masl/abbreviations.hpp"
#include "masl/checker.hpp"
#include "masl/printer.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace masl {

enum class Schema {
  Effectivity,
  Seriality,
  Functionality,
  AdversaryPower,
  DeterminateCurrentChoice,
  ConverseA,
  ConverseB,
  OwnActionKnowledge,
  OtherActionIgnorance,
};

inline const std::vector<Schema>& vector_schemas() {
  static const std::vector<Schema> s = {Schema::Effectivity, Schema::Seriality, Schema::Functionality,
                                        Schema::AdversaryPower, Schema::DeterminateCurrentChoice};
  return s;
}

inline const std::vector<Schema>& epistemic_schemas() {
  static const std::vector<Schema> s = {Schema::ConverseA, Schema::ConverseB, Schema::OwnActionKnowledge,
                                        Schema::OtherActionIgnorance};
  return s;
}

inline std::string schema_name(Schema s) {
  switch (s) {
    case Schema::Effectivity: return "Effectivity";
    case Schema::Seriality: return "Seriality";
    case Schema::Functionality: return "Functionality";
    case Schema::AdversaryPower: return "AdversaryPower";
    case Schema::DeterminateCurrentChoice: return "DeterminateCurrentChoice";
    case Schema::ConverseA: return "ConverseA";
    case Schema::ConverseB: return "ConverseB";
    case Schema::OwnActionKnowledge: return "OwnActionKnowledge";
    case Schema::OtherActionIgnorance: return "OtherActionIgnorance";
  }
  return {};
}

namespace axioms {

/// [c]c
inline Formula effectivity(const VectorExpr& c) { return box(vec(c), vec_atom(c)); }

/// <c>T
inline Formula seriality(const VectorExpr& c) { return diamond(vec(c), top()); }

/// <c>f -> [c]f without the determinedness side condition.
inline Formula functionality_shape(const VectorExpr& c, const Formula& f) {
  return implies(diamond(vec(c), f), box(vec(c), f));
}

/// <c>f -> [c]f for determined c.
inline Formula functionality(const VectorExpr& c, const Formula& f) {
  if (!c.determined()) throw std::invalid_argument("functionality needs a determined vector, got " + render(c));
  return functionality_shape(c, f);
}

/// [c]f <-> conjunction over a in S_i of [c with a at i]f, for c with ?? at i.
inline Formula adversary_power(const Signature& sig, const VectorExpr& c, Player i, const Formula& f) {
  if (!c[i].is_adversary()) throw std::invalid_argument("adversary power needs ?? at the chosen position");
  std::vector<Formula> parts;
  for (const auto& a : sig.strategies(i)) parts.push_back(box(vec(c.replaced(i, StrategyTerm::concrete(a))), f));
  return iff(box(vec(c), f), conj(parts));
}

/// (i_a, !!..) -> (c <-> c with a at i), for c with !! at i.
inline Formula determinate_current_choice(const Signature& sig, const VectorExpr& c, Player i, const std::string& a) {
  if (!c[i].is_current()) throw std::invalid_argument("determinate current choice needs !! at the chosen position");
  return implies(vec_atom(vec_switch(sig, i, a)), iff(vec_atom(c), vec_atom(c.replaced(i, StrategyTerm::concrete(a)))));
}

/// f -> [ag_i]<ag_i^>f
inline Formula converse_a(Player i, const Formula& f) { return implies(f, box(agent(i), diamond(agent_converse(i), f))); }

/// f -> [ag_i^]<ag_i>f
inline Formula converse_b(Player i, const Formula& f) { return implies(f, box(agent_converse(i), diamond(agent(i), f))); }

/// [(i_a, !!..)][ag_i](i_a, !!..)
inline Formula own_action_knowledge(const Signature& sig, Player i, const std::string& a) {
  auto v = vec_switch(sig, i, a);
  return box(vec(v), box(agent(i), vec_atom(v)));
}

/// Conjunction over j != i with a in S_j of [(j_a, !!..)]~[ag_i](j_a, !!..)
inline Formula other_action_ignorance(const Signature& sig, Player i, const std::string& a) {
  std::vector<Formula> parts;
  for (Player j = 0; j < sig.players(); ++j) {
    if (j == i || !sig.form.strategy_index(j, a)) continue;
    auto v = vec_switch(sig, j, a);
    parts.push_back(box(vec(v), neg(box(agent(i), vec_atom(v)))));
  }
  return conj(parts);
}

}  // namespace axioms

/// All-concrete vectors, plus each with one position replaced by ?? or !!,
/// without duplicates, in a fixed order.
inline std::vector<VectorExpr> vector_pool(const Signature& sig) {
  std::vector<VectorExpr> out;
  std::set<std::string> seen;
  auto add = [&](VectorExpr v) {
    if (seen.insert(render(v)).second) out.push_back(std::move(v));
  };
  std::vector<VectorExpr> concrete;
  for (std::size_t r = 0; r < sig.form.profile_count(); ++r) {
    Profile p = sig.form.unrank(r);
    VectorExpr v;
    for (Player i = 0; i < sig.players(); ++i) v.terms.push_back(StrategyTerm::concrete(sig.strategies(i)[p[i]]));
    concrete.push_back(v);
    add(std::move(v));
  }
  for (const auto& term : {StrategyTerm::adversary(), StrategyTerm::current()})
    for (const auto& v : concrete)
      for (Player i = 0; i < sig.players(); ++i) add(v.replaced(i, term));
  return out;
}

/// Every atom of the game plus its negation.
inline std::vector<Formula> default_body_pool(const StrategicGame& game) {
  std::vector<Formula> atoms;
  for (Player i = 0; i < game.players(); ++i)
    for (const auto& w : game.utility_range()) atoms.push_back(util_eq(i, w));
  for (const auto& x : game.alternatives()) atoms.push_back(winner(x));
  std::set<std::string> labels;
  for (const auto& o : game.outcomes()) labels.insert(o.label);
  for (const auto& l : labels) atoms.push_back(label(l));
  std::vector<Formula> out = atoms;
  for (const auto& a : atoms) out.push_back(neg(a));
  return out;
}

struct Instance {
  Schema schema;
  Formula formula;
};

inline std::vector<Instance> instantiate(Schema schema, const Signature& sig, const std::vector<Formula>& pool) {
  std::vector<Instance> out;
  auto emit = [&](Formula f) { out.push_back({schema, std::move(f)}); };
  const auto vectors = vector_pool(sig);
  switch (schema) {
    case Schema::Effectivity:
      for (const auto& c : vectors) emit(axioms::effectivity(c));
      break;
    case Schema::Seriality:
      for (const auto& c : vectors) emit(axioms::seriality(c));
      break;
    case Schema::Functionality:
      for (const auto& c : vectors)
        if (c.determined())
          for (const auto& f : pool) emit(axioms::functionality(c, f));
      break;
    case Schema::AdversaryPower:
      for (const auto& c : vectors)
        for (Player i = 0; i < sig.players(); ++i)
          if (c[i].is_adversary())
            for (const auto& f : pool) emit(axioms::adversary_power(sig, c, i, f));
      break;
    case Schema::DeterminateCurrentChoice:
      for (const auto& c : vectors)
        for (Player i = 0; i < sig.players(); ++i)
          if (c[i].is_current())
            for (const auto& a : sig.strategies(i)) emit(axioms::determinate_current_choice(sig, c, i, a));
      break;
    case Schema::ConverseA:
      for (Player i = 0; i < sig.players(); ++i)
        for (const auto& f : pool) emit(axioms::converse_a(i, f));
      break;
    case Schema::ConverseB:
      for (Player i = 0; i < sig.players(); ++i)
        for (const auto& f : pool) emit(axioms::converse_b(i, f));
      break;
    case Schema::OwnActionKnowledge:
      for (Player i = 0; i < sig.players(); ++i)
        for (const auto& a : sig.strategies(i)) emit(axioms::own_action_knowledge(sig, i, a));
      break;
    case Schema::OtherActionIgnorance: {
      for (Player i = 0; i < sig.players(); ++i) {
        std::set<std::string> names;
        for (Player j = 0; j < sig.players(); ++j)
          if (j != i) names.insert(sig.strategies(j).begin(), sig.strategies(j).end());
        for (const auto& a : names) emit(axioms::other_action_ignorance(sig, i, a));
      }
      break;
    }
  }
  return out;
}

struct InstanceResult {
  Schema schema;
  std::string formula;
  bool valid = true;
  std::optional<std::size_t> model;  // index in the family of the first counterexample
  std::optional<std::string> state;
};

struct ValidityReport {
  std::vector<InstanceResult> results;
  std::size_t checked = 0;
  std::size_t invalid = 0;

  bool all_valid() const { return invalid == 0; }
};

namespace detail {

inline void check_instances(ValidityReport& rep, std::size_t model_index, const Model& m,
                            const std::vector<Instance>& instances, bool record_valid) {
  Checker checker(m);
  for (const auto& inst : instances) {
    ++rep.checked;
    auto ext = checker.extension(inst.formula);
    if (ext.all()) {
      if (record_valid) rep.results.push_back({inst.schema, render(inst.formula), true, std::nullopt, std::nullopt});
      continue;
    }
    ++rep.invalid;
    ext.flip();
    rep.results.push_back({inst.schema, render(inst.formula), false, model_index, m.key(ext.find_first())});
  }
}

}  // namespace detail

/// Checks fixed instances on every model of a family sharing a signature.
/// An instance is valid when its extension is every state of every model;
/// the first counterexample in enumeration order is reported.
inline ValidityReport validity_report(const std::vector<Model>& models, const std::vector<Instance>& instances) {
  ValidityReport rep;
  std::vector<bool> failed(instances.size(), false);
  std::vector<InstanceResult> results;
  for (std::size_t k = 0; k < instances.size(); ++k)
    results.push_back({instances[k].schema, render(instances[k].formula), true, std::nullopt, std::nullopt});
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    Checker checker(models[mi]);
    for (std::size_t k = 0; k < instances.size(); ++k) {
      ++rep.checked;
      if (failed[k]) continue;
      auto ext = checker.extension(instances[k].formula);
      if (ext.all()) continue;
      failed[k] = true;
      ext.flip();
      results[k].valid = false;
      results[k].model = mi;
      results[k].state = models[mi].key(ext.find_first());
    }
  }
  for (auto f : failed) rep.invalid += f;
  rep.results = std::move(results);
  return rep;
}

/// Instantiates every schema against each model's own signature and checks it
/// there. Only invalid instances are listed unless `record_valid` is set.
inline ValidityReport soundness_sweep(const std::vector<Model>& models, const std::vector<Schema>& schemas,
                                      bool record_valid = false) {
  ValidityReport rep;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const auto& m = models[mi];
    auto sig = m.signature();
    auto pool = default_body_pool(m.game());
    std::vector<Instance> instances;
    for (auto s : schemas) {
      auto part = instantiate(s, sig, pool);
      instances.insert(instances.end(), part.begin(), part.end());
    }
    detail::check_instances(rep, mi, m, instances, record_valid);
  }
  return rep;
}

}  // namespace masl
