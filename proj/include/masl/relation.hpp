#pragma once

// Dense boolean relations over an indexed finite state space.

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace masl {

using StateSet = boost::dynamic_bitset<std::uint64_t>;

inline StateSet all_states(std::size_t n) { return StateSet(n).set(); }

template <class F>
void for_each_state(const StateSet& s, F&& f) {
  for (auto k = s.find_first(); k != StateSet::npos; k = s.find_next(k)) f(k);
}

inline std::vector<std::size_t> to_indices(const StateSet& s) {
  std::vector<std::size_t> out;
  for_each_state(s, [&](std::size_t k) { out.push_back(k); });
  return out;
}

class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, StateSet(n)) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (std::size_t k = 0; k < n; ++k) r.rows_[k].set(k);
    return r;
  }

  /// Identity restricted to the given states.
  static Relation diagonal(const StateSet& s) {
    Relation r(s.size());
    for_each_state(s, [&](std::size_t k) { r.rows_[k].set(k); });
    return r;
  }

  std::size_t size() const { return rows_.size(); }
  bool contains(std::size_t from, std::size_t to) const { return rows_.at(from).test(to); }
  void add(std::size_t from, std::size_t to) { rows_.at(from).set(to); }
  const StateSet& successors(std::size_t from) const { return rows_.at(from); }
  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
  }

  Relation& operator|=(const Relation& o) {
    check(o);
    for (std::size_t k = 0; k < rows_.size(); ++k) rows_[k] |= o.rows_[k];
    return *this;
  }
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend bool operator==(const Relation&, const Relation&) = default;

  /// this ; o  (first this, then o)
  Relation compose(const Relation& o) const {
    check(o);
    Relation out(size());
    for (std::size_t k = 0; k < size(); ++k)
      for_each_state(rows_[k], [&](std::size_t j) { out.rows_[k] |= o.rows_[j]; });
    return out;
  }

  Relation converse() const {
    Relation out(size());
    for (std::size_t k = 0; k < size(); ++k) for_each_state(rows_[k], [&](std::size_t j) { out.rows_[j].set(k); });
    return out;
  }

  /// Reflexive transitive closure by repeated squaring.
  Relation star() const {
    Relation r = *this | identity(size());
    for (;;) {
      Relation sq = r.compose(r);
      if (sq == r) return r;
      r = std::move(sq);
    }
  }

  /// States all of whose successors lie in `s`.
  StateSet box(const StateSet& s) const {
    StateSet out(size());
    for (std::size_t k = 0; k < size(); ++k)
      if (rows_[k].is_subset_of(s)) out.set(k);
    return out;
  }

  /// States with some successor in `s`.
  StateSet diamond(const StateSet& s) const {
    StateSet out(size());
    for (std::size_t k = 0; k < size(); ++k)
      if (rows_[k].intersects(s)) out.set(k);
    return out;
  }

  bool reflexive() const {
    for (std::size_t k = 0; k < size(); ++k)
      if (!rows_[k].test(k)) return false;
    return true;
  }
  bool symmetric() const { return *this == converse(); }
  bool transitive() const { return compose(*this).rows_is_subset_of(*this); }
  bool equivalence() const { return reflexive() && symmetric() && transitive(); }
  bool total() const {
    for (const auto& r : rows_)
      if (!r.all()) return false;
    return true;
  }

 private:
  bool rows_is_subset_of(const Relation& o) const {
    for (std::size_t k = 0; k < size(); ++k)
      if (!rows_[k].is_subset_of(o.rows_[k])) return false;
    return true;
  }

  void check(const Relation& o) const {
    if (o.size() != size()) throw std::invalid_argument("relation size mismatch");
  }

  std::vector<StateSet> rows_;
};

}  // namespace masl
