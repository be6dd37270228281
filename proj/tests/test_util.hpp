#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "schemoid/schemoid.hpp"

namespace testutil {

using namespace schemoid;

/// Factorization counts by the plain double loop over all ordered morphism
/// pairs; independent of the by-object bucketing the library uses.
inline std::map<std::tuple<LabelId, LabelId, MorphismId>, std::uint64_t> brute_counts(
    const SchemoidInstance& inst) {
  std::map<std::tuple<LabelId, LabelId, MorphismId>, std::uint64_t> counts;
  const auto& c = inst.category;
  for (MorphismId f = 0; f < c.num_morphisms(); ++f)
    for (MorphismId g = 0; g < c.num_morphisms(); ++g) {
      if (c.src(f) != c.tgt(g)) continue;
      ++counts[{inst.label_of(f), inst.label_of(g), c.compose(f, g)}];
    }
  return counts;
}

/// Exhaustive-bijection oracle for one interval of the difference-operation
/// condition: tries every bijection [x,y] -> [o, delta(y,x)].
inline bool interval_bijection_bruteforce(const FinitePoset& p,
                                          const DifferenceOpCandidate& cand, ElemId x,
                                          ElemId y) {
  const std::size_t n = p.size();
  const auto left = p.interval(x, y);
  const ElemId d = cand.delta_of(y, x, n);
  const auto right =
      p.leq(cand.base, d) ? p.interval(cand.base, d) : std::vector<ElemId>{};
  if (left.size() != right.size()) return false;
  std::vector<std::size_t> perm(right.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < left.size() && ok; ++i)
      ok = cand.delta_of(right[perm[i]], cand.base, n) == cand.delta_of(left[i], x, n);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Full difference-operation decision by the exhaustive-bijection oracle.
/// Only usable when every interval is small.
inline bool diffop_bruteforce(const FinitePoset& p, const DifferenceOpCandidate& cand) {
  for (ElemId x = 0; x < p.size(); ++x)
    for (ElemId y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !interval_bijection_bruteforce(p, cand, x, y)) return false;
  return true;
}

/// The hollow triangle: three vertices, all three edges, no 2-face.
inline SimplicialComplex hollow_triangle() {
  return SimplicialComplex{{"1", "2", "3"}, {0b011u, 0b101u, 0b110u}};
}

/// Lumped two-class labeling (identities vs everything else).
inline SchemoidInstance lumped_instance(const FiniteCategory& cat) {
  Labeling lab;
  lab.labels = {"id", "rest"};
  lab.assign.resize(cat.num_morphisms());
  for (MorphismId m = 0; m < cat.num_morphisms(); ++m)
    lab.assign[m] = cat.is_identity(m) ? 0 : 1;
  return SchemoidInstance(cat, std::move(lab));
}

/// The Z_3 difference partition: block R_b = {(x, y) : y - x = b mod 3}.
inline RelationPartition z3_partition() {
  std::vector<std::vector<std::pair<ElemId, ElemId>>> blocks(3);
  for (ElemId x = 0; x < 3; ++x)
    for (ElemId y = 0; y < 3; ++y) blocks[(3 + y - x) % 3].push_back({x, y});
  return RelationPartition::from_blocks({"0", "1", "2"}, blocks);
}

/// Four incomparable-top poset: a, b below both t1 and t2; join(a,b) ambiguous.
inline FinitePoset two_tops_poset() {
  return FinitePoset::from_relation({"a", "b", "t1", "t2"},
                                    {{0, 2}, {0, 3}, {1, 2}, {1, 3}},
                                    RelationMode::Covers);
}

inline MorphismId mor_by_name(const FiniteCategory& c, const std::string& name) {
  for (MorphismId m = 0; m < c.num_morphisms(); ++m)
    if (c.name(m) == name) return m;
  throw std::runtime_error("no morphism named " + name);
}

inline ObjectId obj_by_name(const FiniteCategory& c, const std::string& name) {
  for (ObjectId x = 0; x < c.num_objects(); ++x)
    if (c.object_name(x) == name) return x;
  throw std::runtime_error("no object named " + name);
}

inline LabelId label_by_name(const SchemoidInstance& inst, const std::string& name) {
  for (LabelId l = 0; l < inst.labeling.num_labels(); ++l)
    if (inst.labeling.labels[l] == name) return l;
  throw std::runtime_error("no label named " + name);
}

/// deterministic xorshift for seeded fixtures
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
};

}  // namespace testutil

#define CHECK_ERROR_KIND(expr, expected_kind)                      \
  do {                                                             \
    bool thrown_ = false;                                          \
    try {                                                          \
      (void)(expr);                                                \
    } catch (const schemoid::Error& e_) {                          \
      thrown_ = true;                                              \
      CHECK(e_.kind() == (expected_kind));                         \
    }                                                              \
    CHECK(thrown_);                                                \
  } while (0)
