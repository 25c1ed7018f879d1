#pragma once

// Global model checking: extensions of formulas and relations of programs,
// computed bottom-up and memoised per node.

#include "masl/ast.hpp"
#include "masl/model.hpp"
#include "masl/printer.hpp"
#include "masl/relation.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace masl {

/// Denotation of a single strategy term for player i over the strategies
/// available to i, at current choice `current`. Unavailable concrete names
/// denote the empty set.
inline std::vector<std::string> interpret_term(const StrategyTerm& term, const std::vector<std::string>& available,
                                               const std::string& current) {
  auto has = [&](const std::string& s) { return std::find(available.begin(), available.end(), s) != available.end(); };
  switch (term.kind) {
    case StrategyTerm::Kind::Concrete:
      if (has(term.name)) return {term.name};
      return {};
    case StrategyTerm::Kind::Adversary: return available;
    case StrategyTerm::Kind::Current:
      if (has(current)) return {current};
      return {};
  }
  return {};
}

class Checker {
 public:
  explicit Checker(const Model& model) : model_(model), utilities_(model.game().utility_range()) {}

  const Model& model() const { return model_; }

  StateSet extension(const Formula& f) {
    if (auto it = formulas_.find(f.get()); it != formulas_.end()) return it->second.second;
    StateSet out = compute(f);
    formulas_.emplace(f.get(), std::make_pair(f, out));
    return out;
  }

  const Relation& relation(const Program& p) {
    if (auto v = as<ast::Vec>(p)) return vector_relation(v->vec);
    if (auto it = programs_.find(p.get()); it != programs_.end()) return it->second.second;
    Relation out = compute(p);
    return programs_.emplace(p.get(), std::make_pair(p, std::move(out))).first->second.second;
  }

  bool satisfies(std::size_t world, const Formula& f) { return extension(f).test(world); }

  /// Pairs (w, w') with w' in the same form as w and every coordinate of w'
  /// in the denotation of the corresponding term at w.
  const Relation& vector_relation(const VectorExpr& v) {
    auto key = render(v);
    if (auto it = vectors_.find(key); it != vectors_.end()) return it->second;
    check_arity(v);
    std::vector<std::optional<StrategyIndex>> concrete(v.size());
    for (Player i = 0; i < v.size(); ++i)
      if (v[i].is_concrete()) concrete[i] = resolve(i, v[i].name);

    Relation r(model_.size());
    std::vector<std::vector<StrategyIndex>> choices(v.size());
    for (std::size_t w = 0; w < model_.size(); ++w) {
      const auto& world = model_.world(w);
      const auto& mf = model_.forms()[world.form];
      bool empty = false;
      for (Player i = 0; i < v.size(); ++i) {
        choices[i].clear();
        switch (v[i].kind) {
          case StrategyTerm::Kind::Concrete:
            if (mf.allowed[i][*concrete[i]]) choices[i].push_back(*concrete[i]);
            break;
          case StrategyTerm::Kind::Adversary: choices[i] = mf.available[i]; break;
          case StrategyTerm::Kind::Current: choices[i].push_back(world.profile[i]); break;
        }
        empty = empty || choices[i].empty();
      }
      if (empty) continue;
      // odometer over the product of per-player choices
      std::vector<std::size_t> pos(v.size(), 0);
      Profile t{std::vector<StrategyIndex>(v.size())};
      for (;;) {
        for (Player i = 0; i < v.size(); ++i) t.choices[i] = choices[i][pos[i]];
        if (auto target = model_.find(world.form, t)) r.add(w, *target);
        bool done = true;
        for (Player i = v.size(); i-- > 0;) {
          if (++pos[i] < choices[i].size()) {
            done = false;
            break;
          }
          pos[i] = 0;
        }
        if (done) break;
      }
    }
    return vectors_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  void check_arity(const VectorExpr& v) const {
    if (v.size() != model_.players())
      throw EvalError("strategy vector " + render(v) + " has " + std::to_string(v.size()) + " terms, model has " +
                      std::to_string(model_.players()) + " players");
  }

  StrategyIndex resolve(Player i, const std::string& name) const {
    auto idx = model_.game().form().strategy_index(i, name);
    if (!idx) throw EvalError("unknown strategy '" + name + "' for player " + std::to_string(i + 1));
    return *idx;
  }

  StateSet compute(const Formula& f) {
    const std::size_t n = model_.size();
    return std::visit(
        [&](const auto& x) -> StateSet {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ast::Top>) {
            return all_states(n);
          } else if constexpr (std::is_same_v<T, ast::VecAtom>) {
            // s is its own successor iff every concrete position matches s
            check_arity(x.vec);
            StateSet out(n);
            std::vector<std::optional<StrategyIndex>> concrete(x.vec.size());
            for (Player i = 0; i < x.vec.size(); ++i)
              if (x.vec[i].is_concrete()) concrete[i] = resolve(i, x.vec[i].name);
            for (std::size_t w = 0; w < n; ++w) {
              bool ok = true;
              for (Player i = 0; i < concrete.size() && ok; ++i)
                ok = !concrete[i] || model_.world(w).profile[i] == *concrete[i];
              if (ok) out.set(w);
            }
            return out;
          } else if constexpr (std::is_same_v<T, ast::Winner>) {
            StateSet out(n);
            for (std::size_t w = 0; w < n; ++w) {
              const auto& win = model_.outcome(w).winners;
              if (win && std::find(win->begin(), win->end(), x.alternative) != win->end()) out.set(w);
            }
            return out;
          } else if constexpr (std::is_same_v<T, ast::UtilEq>) {
            if (x.player >= model_.players()) throw EvalError("player " + std::to_string(x.player + 1) + " out of range");
            if (!std::binary_search(utilities_.begin(), utilities_.end(), x.value))
              throw EvalError("utility " + to_string(x.value) + " is not in the game's utility range");
            StateSet out(n);
            for (std::size_t w = 0; w < n; ++w)
              if (model_.outcome(w).utils[x.player] == x.value) out.set(w);
            return out;
          } else if constexpr (std::is_same_v<T, ast::Label>) {
            StateSet out(n);
            for (std::size_t w = 0; w < n; ++w)
              if (model_.outcome(w).label == x.text) out.set(w);
            return out;
          } else if constexpr (std::is_same_v<T, ast::Not>) {
            return ~extension(x.sub);
          } else if constexpr (std::is_same_v<T, ast::And>) {
            return extension(x.lhs) & extension(x.rhs);
          } else if constexpr (std::is_same_v<T, ast::Or>) {
            return extension(x.lhs) | extension(x.rhs);
          } else if constexpr (std::is_same_v<T, ast::Implies>) {
            return ~extension(x.lhs) | extension(x.rhs);
          } else if constexpr (std::is_same_v<T, ast::Iff>) {
            return ~(extension(x.lhs) ^ extension(x.rhs));
          } else if constexpr (std::is_same_v<T, ast::Box>) {
            return relation(x.prog).box(extension(x.sub));
          } else {
            return relation(x.prog).diamond(extension(x.sub));
          }
        },
        f->node);
  }

  Relation compute(const Program& p) {
    return std::visit(
        [&](const auto& x) -> Relation {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ast::Vec>) return vector_relation(x.vec);
          else if constexpr (std::is_same_v<T, ast::Test>) return Relation::diagonal(extension(x.cond));
          else if constexpr (std::is_same_v<T, ast::Seq>) return relation(x.lhs).compose(relation(x.rhs));
          else if constexpr (std::is_same_v<T, ast::Choice>) return relation(x.lhs) | relation(x.rhs);
          else if constexpr (std::is_same_v<T, ast::Star>) return relation(x.sub).star();
          else if constexpr (std::is_same_v<T, ast::Agent>) return model_.agent_relation(x.player);
          else return model_.agent_relation(x.player).converse();
        },
        p->node);
  }

  const Model& model_;
  std::vector<Rational> utilities_;
  std::unordered_map<const FormulaNode*, std::pair<Formula, StateSet>> formulas_;
  std::unordered_map<const ProgramNode*, std::pair<Program, Relation>> programs_;
  std::unordered_map<std::string, Relation> vectors_;
};

inline StateSet extension(const Model& m, const Formula& f) { return Checker(m).extension(f); }
inline Relation program_relation(const Model& m, const Program& p) { return Checker(m).relation(p); }
inline Relation vector_relation(const VectorExpr& v, const Model& m) { return Checker(m).vector_relation(v); }
inline bool satisfies(const Model& m, std::size_t world, const Formula& f) { return Checker(m).satisfies(world, f); }

}  // namespace masl
