#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schemoid/errors.hpp"

namespace schemoid {

using ElemId = std::uint32_t;
inline constexpr ElemId kNoElem = static_cast<ElemId>(-1);

enum class RelationMode { Covers, Full };

/// Finite poset over named elements. The order is stored as a dense bit
/// matrix of up-sets: row x has bit y set iff x <= y. Immutable after
/// construction; all member functions are const.
class FinitePoset {
 public:
  /// Builds a poset from a pair list. In Covers mode the reflexive-transitive
  /// closure of the pairs is taken and antisymmetry of the result is checked
  /// (a cycle shows up as a mutual pair). In Full mode the given relation
  /// plus the diagonal must already be a partial order; reflexive pairs in
  /// the input are accepted and ignored.
  static FinitePoset from_relation(std::vector<std::string> elements,
                                   const std::vector<std::pair<ElemId, ElemId>>& pairs,
                                   RelationMode mode) {
    FinitePoset p;
    p.names_ = std::move(elements);
    p.n_ = p.names_.size();
    p.words_ = (p.n_ + 63) / 64;
    p.rows_.assign(p.n_ * p.words_, 0);
    for (std::size_t i = 0; i < p.n_; ++i) p.set(i, i);
    for (const auto& [a, b] : pairs) {
      if (a >= p.n_ || b >= p.n_)
        throw Error(ErrorKind::BadInput, "pair index out of range", {a, b});
      p.set(a, b);
    }
    if (mode == RelationMode::Covers) {
      p.transitive_close();
      for (ElemId x = 0; x < p.n_; ++x)
        for (ElemId y = x + 1; y < p.n_; ++y)
          if (p.leq(x, y) && p.leq(y, x))
            throw Error(ErrorKind::CycleDetected,
                        "elements '" + p.names_[x] + "' and '" + p.names_[y] +
                            "' lie on a cycle",
                        {x, y});
    } else {
      for (ElemId x = 0; x < p.n_; ++x)
        for (ElemId y = 0; y < p.n_; ++y) {
          if (x != y && p.leq(x, y) && p.leq(y, x))
            throw Error(ErrorKind::NotAntisymmetric,
                        "'" + p.names_[x] + "' <= '" + p.names_[y] +
                            "' and conversely",
                        {x, y});
          if (!p.leq(x, y)) continue;
          for (ElemId z = 0; z < p.n_; ++z)
            if (p.leq(y, z) && !p.leq(x, z))
              throw Error(ErrorKind::NotTransitive,
                          "'" + p.names_[x] + "' <= '" + p.names_[y] +
                              "' <= '" + p.names_[z] + "' but the outer pair is missing",
                          {x, y, z});
        }
    }
    p.index_names();
    return p;
  }

  /// Trusted constructor for generators that compute the full order directly.
  /// Validates antisymmetry and transitivity the same way as Full mode.
  static FinitePoset from_leq(std::vector<std::string> elements,
                              const std::vector<std::pair<ElemId, ElemId>>& full_pairs) {
    return from_relation(std::move(elements), full_pairs, RelationMode::Full);
  }

  std::size_t size() const { return n_; }
  const std::string& name(ElemId x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<ElemId> index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(ElemId x, ElemId y) const {
    return (rows_[x * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  bool lt(ElemId x, ElemId y) const { return x != y && leq(x, y); }

  /// Closed interval [x,y]; throws NotComparable when x is not below y.
  std::vector<ElemId> interval(ElemId x, ElemId y) const {
    if (!leq(x, y))
      throw Error(ErrorKind::NotComparable,
                  "'" + names_[x] + "' is not below '" + names_[y] + "'", {x, y});
    std::vector<ElemId> out;
    for (ElemId z = 0; z < n_; ++z)
      if (leq(x, z) && leq(z, y)) out.push_back(z);
    return out;
  }

  std::vector<ElemId> upper_bounds(ElemId x, ElemId y) const {
    std::vector<ElemId> out;
    for (ElemId z = 0; z < n_; ++z)
      if (leq(x, z) && leq(y, z)) out.push_back(z);
    return out;
  }

  /// Minimal elements of a subset (given as a sorted id list).
  std::vector<ElemId> minimal_of(const std::vector<ElemId>& subset) const {
    std::vector<ElemId> out;
    for (ElemId u : subset) {
      bool minimal = true;
      for (ElemId v : subset)
        if (v != u && leq(v, u)) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(u);
    }
    return out;
  }

  /// The minimum common upper bound, if the set of upper bounds is nonempty.
  /// Throws AmbiguousJoin when there are two or more minimal upper bounds.
  std::optional<ElemId> join(ElemId x, ElemId y) const {
    const auto ubs = upper_bounds(x, y);
    if (ubs.empty()) return std::nullopt;
    const auto mins = minimal_of(ubs);
    if (mins.size() > 1)
      throw Error(ErrorKind::AmbiguousJoin,
                  "pair ('" + names_[x] + "', '" + names_[y] + "') has " +
                      std::to_string(mins.size()) + " minimal upper bounds",
                  {x, y, mins[0], mins[1]});
    return mins[0];
  }

  /// Cover pairs (x, y) with x covered by y, in (x, y) index order.
  std::vector<std::pair<ElemId, ElemId>> cover_pairs() const {
    std::vector<std::pair<ElemId, ElemId>> out;
    for (ElemId x = 0; x < n_; ++x)
      for (ElemId y = 0; y < n_; ++y) {
        if (!lt(x, y)) continue;
        bool cover = true;
        for (ElemId z = 0; z < n_ && cover; ++z)
          if (lt(x, z) && lt(z, y)) cover = false;
        if (cover) out.emplace_back(x, y);
      }
    return out;
  }

  std::optional<ElemId> minimum() const {
    for (ElemId m = 0; m < n_; ++m) {
      bool below_all = true;
      for (ElemId y = 0; y < n_ && below_all; ++y) below_all = leq(m, y);
      if (below_all) return m;
    }
    return std::nullopt;
  }

  std::size_t relation_size() const {
    std::size_t c = 0;
    for (ElemId x = 0; x < n_; ++x)
      for (ElemId y = 0; y < n_; ++y)
        if (leq(x, y)) ++c;
    return c;
  }

  /// Graded rank from the given minimum: every cover step must raise the
  /// longest-chain rank by exactly one, which holds iff all maximal chains
  /// from the minimum to any element have equal length. Returns nullopt
  /// when the poset is not graded. Throws NoMinimum if `min` is not below
  /// every element.
  std::optional<std::vector<int>> rank_from(ElemId min) const {
    for (ElemId y = 0; y < n_; ++y)
      if (!leq(min, y))
        throw Error(ErrorKind::NoMinimum,
                    "'" + names_[min] + "' is not below '" + names_[y] + "'",
                    {min, y});
    const auto covers = cover_pairs();
    std::vector<int> rank(n_, 0);
    // longest path from min over the cover DAG; iterate to fixpoint
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [x, y] : covers)
        if (rank[x] + 1 > rank[y]) {
          rank[y] = rank[x] + 1;
          changed = true;
        }
    }
    for (const auto& [x, y] : covers)
      if (rank[y] != rank[x] + 1) return std::nullopt;
    return rank;
  }

 private:
  void set(std::size_t x, std::size_t y) {
    rows_[x * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
  }
  void transitive_close() {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (leq(static_cast<ElemId>(i), static_cast<ElemId>(k)))
          for (std::size_t w = 0; w < words_; ++w)
            rows_[i * words_ + w] |= rows_[k * words_ + w];
  }
  void index_names() {
    for (std::size_t i = 0; i < n_; ++i) {
      if (by_name_.count(names_[i]))
        throw Error(ErrorKind::BadInput, "duplicate element name '" + names_[i] + "'",
                    {static_cast<ElemId>(i)});
      by_name_[names_[i]] = static_cast<ElemId>(i);
    }
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint64_t> rows_;
  std::unordered_map<std::string, ElemId> by_name_;
};

/// A poset together with a validated minimum and graded rank function.
struct RankedPoset {
  FinitePoset base;
  ElemId minimum = 0;
  std::vector<int> rank;

  static RankedPoset make(FinitePoset p) {
    const auto min = p.minimum();
    if (!min)
      throw Error(ErrorKind::NoMinimum, "poset has no minimum element");
    auto rank = p.rank_from(*min);
    if (!rank)
      throw Error(ErrorKind::PreconditionFailed, "poset is not graded");
    RankedPoset rp;
    rp.minimum = *min;
    rp.rank = std::move(*rank);
    rp.base = std::move(p);
    return rp;
  }
};

/// Outcome of the four precondition checks a poset must pass before the
/// join/rank category can be built over it. Failures carry witnesses.
struct TildePreconditionReport {
  bool unique_joins = false;      // (a) every pair has <= 1 minimal upper bound
  bool has_minimum = false;       // (b)
  bool graded = false;            // (c)
  bool rank_subadditive = false;  // (d) rank(x v y) <= rank(x) + rank(y)
  std::optional<std::pair<ElemId, ElemId>> join_witness;
  std::optional<std::pair<ElemId, ElemId>> subadd_witness;
  ElemId minimum = kNoElem;
  std::vector<int> rank;

  bool passed() const {
    return unique_joins && has_minimum && graded && rank_subadditive;
  }
  std::string failing() const {
    if (!unique_joins) return "unique_joins";
    if (!has_minimum) return "has_minimum";
    if (!graded) return "graded";
    if (!rank_subadditive) return "rank_subadditive";
    return "";
  }
};

inline TildePreconditionReport check_tilde_preconditions(const FinitePoset& p) {
  TildePreconditionReport r;
  r.unique_joins = true;
  const ElemId n = static_cast<ElemId>(p.size());
  for (ElemId x = 0; x < n && r.unique_joins; ++x)
    for (ElemId y = x; y < n; ++y) {
      const auto mins = p.minimal_of(p.upper_bounds(x, y));
      if (mins.size() > 1) {
        r.unique_joins = false;
        r.join_witness = {x, y};
        break;
      }
    }
  const auto min = p.minimum();
  r.has_minimum = min.has_value();
  if (!r.has_minimum) return r;
  r.minimum = *min;
  auto rank = p.rank_from(*min);
  r.graded = rank.has_value();
  if (!r.graded) return r;
  r.rank = std::move(*rank);
  r.rank_subadditive = true;
  if (!r.unique_joins) return r;
  for (ElemId x = 0; x < n && r.rank_subadditive; ++x)
    for (ElemId y = x; y < n; ++y) {
      const auto j = p.join(x, y);
      if (!j) continue;
      if (r.rank[*j] > r.rank[x] + r.rank[y]) {
        r.rank_subadditive = false;
        r.subadd_witness = {x, y};
        break;
      }
    }
  return r;
}

}  // namespace schemoid
