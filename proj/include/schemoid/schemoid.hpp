#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schemoid/category.hpp"
#include "schemoid/errors.hpp"
#include "schemoid/functor_search.hpp"
#include "schemoid/generators.hpp"
#include "schemoid/matching.hpp"
#include "schemoid/poset.hpp"

namespace schemoid {

using LabelId = std::uint32_t;

/// A labeling of a category's morphisms into a label set I. Total, and
/// every listed label must be used by at least one morphism.
struct Labeling {
  std::vector<std::string> labels;
  std::vector<LabelId> assign;  // per morphism

  void validate(MorphismId num_morphisms) const {
    if (assign.size() != num_morphisms)
      throw Error(ErrorKind::BadLabeling, "labeling is not total on the morphisms");
    std::vector<bool> used(labels.size(), false);
    for (LabelId l : assign) {
      if (l >= labels.size())
        throw Error(ErrorKind::BadLabeling, "label index out of range");
      used[l] = true;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!used[i])
        throw Error(ErrorKind::BadLabeling, "label '" + labels[i] + "' is unused");
  }

  LabelId num_labels() const { return static_cast<LabelId>(labels.size()); }
};

/// A finite category together with a morphism labeling: the triple (C, I, l).
struct SchemoidInstance {
  FiniteCategory category;
  Labeling labeling;

  SchemoidInstance(FiniteCategory c, Labeling l)
      : category(std::move(c)), labeling(std::move(l)) {
    labeling.validate(category.num_morphisms());
  }

  LabelId label_of(MorphismId m) const { return labeling.assign[m]; }
};

// ---------------------------------------------------------------------------
// The schemoid condition.
// ---------------------------------------------------------------------------

/// N_h^{i,j} = |{(f,g) : l(f)=i, l(g)=j, f o g = h}|, by the direct double
/// loop over morphism pairs. This is the reference definition; the checker
/// below uses a single bucketing pass instead.
inline std::uint64_t n_count(const SchemoidInstance& inst, LabelId i, LabelId j, MorphismId h) {
  const auto& c = inst.category;
  std::uint64_t count = 0;
  for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
    if (inst.label_of(f) != i) continue;
    for (MorphismId g = 0; g < c.num_morphisms(); ++g)
      if (inst.label_of(g) == j && c.composable(f, g) && c.compose_or_none(f, g) == h)
        ++count;
  }
  return count;
}

struct SchemoidWitness {
  LabelId i = 0, j = 0;
  MorphismId h = kNoMorphism, k = kNoMorphism;  // same label, differing counts
  std::uint64_t count_h = 0, count_k = 0;
};

struct SchemoidReport {
  bool ok = false;
  std::optional<SchemoidWitness> witness;
};

namespace detail {

/// One pass over all composable pairs, bucketing by (l(f), l(g), f o g).
inline std::unordered_map<std::uint64_t, std::uint64_t> factorization_buckets(
    const SchemoidInstance& inst) {
  const auto& c = inst.category;
  const std::uint64_t L = inst.labeling.num_labels();
  const std::uint64_t M = c.num_morphisms();
  std::unordered_map<std::uint64_t, std::uint64_t> buckets;
  for (MorphismId f = 0; f < M; ++f)
    for (MorphismId g : c.morphisms_into(c.src(f))) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(inst.label_of(f)) * L + inst.label_of(g)) * M +
          c.compose_or_none(f, g);
      ++buckets[key];
    }
  return buckets;
}

inline std::vector<std::vector<MorphismId>> label_classes(const SchemoidInstance& inst) {
  std::vector<std::vector<MorphismId>> classes(inst.labeling.num_labels());
  for (MorphismId m = 0; m < inst.category.num_morphisms(); ++m)
    classes[inst.label_of(m)].push_back(m);
  return classes;
}

}  // namespace detail

/// Checks the schemoid condition: within every label class, all morphisms
/// must have the same N-count for every label pair (i,j), zero counts
/// included. The first violation in (i, j, class, morphism) order is
/// reported.
inline SchemoidReport verify_schemoid(const SchemoidInstance& inst) {
  const auto& c = inst.category;
  const std::uint64_t L = inst.labeling.num_labels();
  const std::uint64_t M = c.num_morphisms();
  const auto buckets = detail::factorization_buckets(inst);
  const auto classes = detail::label_classes(inst);
  auto count_of = [&](LabelId i, LabelId j, MorphismId h) -> std::uint64_t {
    const auto it = buckets.find((static_cast<std::uint64_t>(i) * L + j) * M + h);
    return it == buckets.end() ? 0 : it->second;
  };
  // label pairs (i,j) that factor at least one morphism; classes untouched
  // by a pair have all-zero counts and cannot violate the condition
  std::vector<std::pair<LabelId, LabelId>> pairs;
  for (const auto& [key, cnt] : buckets) {
    const std::uint64_t ij = key / M;
    pairs.emplace_back(static_cast<LabelId>(ij / L), static_cast<LabelId>(ij % L));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  for (const auto& [i, j] : pairs)
    for (const auto& cls : classes) {
      const MorphismId rep = cls.front();
      const std::uint64_t expected = count_of(i, j, rep);
      for (MorphismId h : cls) {
        const std::uint64_t got = count_of(i, j, h);
        if (got != expected)
          return {false, SchemoidWitness{i, j, rep, h, expected, got}};
      }
    }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Association schemes and the codiscrete embedding.
// ---------------------------------------------------------------------------

/// The codiscrete groupoid on a point set: one morphism per ordered pair,
/// composed by gluing. The morphism from a to b is the pair (b, a), matching
/// the global orientation (a morphism x -> y is the pair (y, x)).
inline FiniteCategory codiscrete_category(const std::vector<std::string>& points) {
  const ObjectId n = static_cast<ObjectId>(points.size());
  std::vector<MorphismData> mors;
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      mors.push_back({"(" + points[b] + "," + points[a] + ")", a, b});
  auto mid = [n](ObjectId a, ObjectId b) { return a * n + b; };
  std::vector<std::array<MorphismId, 3>> entries;
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      for (ObjectId c = 0; c < n; ++c)
        entries.push_back({mid(b, c), mid(a, b), mid(a, c)});
  std::vector<MorphismId> ids;
  for (ObjectId x = 0; x < n; ++x) ids.push_back(mid(x, x));
  return FiniteCategory::build(points, std::move(mors), entries, std::move(ids));
}

/// A partition of X x X into named blocks, stored as a dense block index
/// per ordered pair.
struct RelationPartition {
  std::vector<std::string> elements;
  std::vector<std::string> block_names;
  std::vector<LabelId> block_of;  // (x * n + y) -> block index

  static RelationPartition from_blocks(std::vector<std::string> elements,
                                       const std::vector<std::vector<std::pair<ElemId, ElemId>>>& blocks,
                                       std::vector<std::string> block_names = {}) {
    RelationPartition p;
    p.elements = std::move(elements);
    const std::size_t n = p.elements.size();
    if (block_names.empty())
      for (std::size_t b = 0; b < blocks.size(); ++b)
        block_names.push_back("R" + std::to_string(b));
    if (block_names.size() != blocks.size())
      throw Error(ErrorKind::BadInput, "block name count != block count");
    p.block_names = std::move(block_names);
    p.block_of.assign(n * n, static_cast<LabelId>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty())
        throw Error(ErrorKind::BadInput, "block '" + p.block_names[b] + "' is empty");
      for (const auto& [x, y] : blocks[b]) {
        if (x >= n || y >= n)
          throw Error(ErrorKind::BadInput, "pair index out of range", {x, y});
        if (p.block_of[x * n + y] != static_cast<LabelId>(-1))
          throw Error(ErrorKind::BadInput, "blocks are not disjoint", {x, y});
        p.block_of[x * n + y] = static_cast<LabelId>(b);
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (p.block_of[x * n + y] == static_cast<LabelId>(-1))
          throw Error(ErrorKind::BadInput, "blocks do not cover X x X",
                      {static_cast<ElemId>(x), static_cast<ElemId>(y)});
    return p;
  }

  std::size_t num_elements() const { return elements.size(); }
  LabelId num_blocks() const { return static_cast<LabelId>(block_names.size()); }
  LabelId block(ElemId x, ElemId y) const { return block_of[x * elements.size() + y]; }
};

/// Labels the codiscrete groupoid by block membership: the morphism a -> b
/// is the pair (b, a) and gets the block containing (b, a). No verification
/// is performed; coherent configurations enter the same way.
inline SchemoidInstance partition_to_schemoid(const RelationPartition& part) {
  FiniteCategory cat = codiscrete_category(part.elements);
  Labeling lab;
  lab.labels = part.block_names;
  const ObjectId n = static_cast<ObjectId>(part.elements.size());
  lab.assign.resize(static_cast<std::size_t>(n) * n);
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      lab.assign[a * n + b] = part.block(b, a);  // morphism a->b is the pair (b,a)
  return SchemoidInstance(std::move(cat), std::move(lab));
}

struct SchemeReport {
  bool diagonal_ok = false;
  bool transpose_ok = false;
  bool constants_ok = false;
  // valid when constants_ok: p[(i*L + j)*L + k]
  std::vector<std::uint64_t> p;
  std::optional<std::array<ElemId, 2>> diagonal_witness;   // pair in/out of place
  std::optional<LabelId> transpose_witness;                // block whose transpose is no block
  std::optional<std::array<std::uint32_t, 4>> constants_witness;  // (i, j, x, z)

  bool passed() const { return diagonal_ok && transpose_ok && constants_ok; }
  std::uint64_t p_at(LabelId i, LabelId j, LabelId k, LabelId L) const {
    return p[(static_cast<std::size_t>(i) * L + j) * L + k];
  }
};

/// Checks the three association-scheme conditions directly on the partition:
/// the diagonal is one block, blocks are closed under transpose, and the
/// intersection numbers p_ij^k are well defined (by triple counting).
inline SchemeReport verify_association_scheme(const RelationPartition& part) {
  SchemeReport r;
  const std::size_t n = part.num_elements();
  const LabelId L = part.num_blocks();
  if (n == 0) return r;

  const LabelId diag = part.block(0, 0);
  r.diagonal_ok = true;
  for (ElemId x = 0; x < n && r.diagonal_ok; ++x)
    for (ElemId y = 0; y < n; ++y) {
      const bool in_diag_block = part.block(x, y) == diag;
      if (in_diag_block != (x == y)) {
        r.diagonal_ok = false;
        r.diagonal_witness = {{x, y}};
        break;
      }
    }

  r.transpose_ok = true;
  for (LabelId b = 0; b < L && r.transpose_ok; ++b) {
    LabelId image = static_cast<LabelId>(-1);
    for (ElemId x = 0; x < n; ++x)
      for (ElemId y = 0; y < n; ++y) {
        if (part.block(x, y) != b) continue;
        const LabelId t = part.block(y, x);
        if (image == static_cast<LabelId>(-1)) image = t;
        if (t != image) {
          r.transpose_ok = false;
          r.transpose_witness = b;
          break;
        }
      }
  }

  // condition 3 by direct triple counting
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(L) * L * n * n, 0);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      for (ElemId z = 0; z < n; ++z) {
        const LabelId i = part.block(x, y), j = part.block(y, z);
        ++counts[((static_cast<std::size_t>(i) * L + j) * n + x) * n + z];
      }
  r.constants_ok = true;
  r.p.assign(static_cast<std::size_t>(L) * L * L, 0);
  std::vector<bool> seen(static_cast<std::size_t>(L) * L * L, false);
  for (LabelId i = 0; i < L && r.constants_ok; ++i)
    for (LabelId j = 0; j < L && r.constants_ok; ++j)
      for (ElemId x = 0; x < n && r.constants_ok; ++x)
        for (ElemId z = 0; z < n; ++z) {
          const LabelId k = part.block(x, z);
          const std::uint64_t c = counts[((static_cast<std::size_t>(i) * L + j) * n + x) * n + z];
          const std::size_t slot = (static_cast<std::size_t>(i) * L + j) * L + k;
          if (!seen[slot]) {
            seen[slot] = true;
            r.p[slot] = c;
          } else if (r.p[slot] != c) {
            r.constants_ok = false;
            r.constants_witness = {{i, j, x, z}};
            break;
          }
        }
  if (!r.constants_ok) r.p.clear();
  return r;
}

// ---------------------------------------------------------------------------
// Difference operations and the order category C_P.
// ---------------------------------------------------------------------------

/// A candidate difference operation: a base point and a total map on the
/// order relation, delta(upper, lower) for lower <= upper. The interval
/// bijections of the definition are existential and are searched for during
/// verification, never stored.
struct DifferenceOpCandidate {
  ElemId base = 0;
  std::vector<ElemId> table;  // (upper * n + lower) -> element, kNoElem if undefined

  ElemId delta_of(ElemId upper, ElemId lower, std::size_t n) const {
    return table[static_cast<std::size_t>(upper) * n + lower];
  }
  void set(ElemId upper, ElemId lower, ElemId value, std::size_t n) {
    table[static_cast<std::size_t>(upper) * n + lower] = value;
  }
  static DifferenceOpCandidate empty(std::size_t n, ElemId base) {
    DifferenceOpCandidate c;
    c.base = base;
    c.table.assign(n * n, kNoElem);
    return c;
  }
};

struct DiffOpWitness {
  ElemId x = 0, y = 0;            // first failing interval [x, y]
  std::size_t left_size = 0;      // |[x, y]|
  std::size_t right_size = 0;     // |[o, delta(y, x)]|
  std::size_t matched = 0;        // maximum matching found
};

struct DiffOpReport {
  bool ok = false;
  std::optional<DiffOpWitness> witness;
};

/// Decides, interval by interval, whether a bijection [x,y] -> [o, delta(y,x)]
/// compatible with the delta fibers exists: build the bipartite graph with
/// edges z -- w iff delta(w, o) = delta(z, x) and test for a perfect
/// matching. Intervals are scanned in (x, y) index order; the first failure
/// is the witness.
inline DiffOpReport verify_difference_op(const FinitePoset& p, const DifferenceOpCandidate& cand) {
  const std::size_t n = p.size();
  if (cand.base >= n)
    throw Error(ErrorKind::BasePointNotInPoset, "base point index out of range", {cand.base});
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (p.leq(x, y) && cand.delta_of(y, x, n) == kNoElem)
        throw Error(ErrorKind::BadInput,
                    "candidate is not total: no value for ('" + p.name(y) + "', '" +
                        p.name(x) + "')",
                    {y, x});

  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      const std::vector<ElemId> left = p.interval(x, y);
      const ElemId d = cand.delta_of(y, x, n);
      const std::vector<ElemId> right =
          p.leq(cand.base, d) ? p.interval(cand.base, d) : std::vector<ElemId>{};
      if (left.size() != right.size())
        return {false, DiffOpWitness{x, y, left.size(), right.size(), 0}};
      BipartiteMatcher matcher(left.size(), right.size());
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b)
          if (cand.delta_of(right[b], cand.base, n) == cand.delta_of(left[a], x, n))
            matcher.add_edge(a, b);
      const std::size_t matched = matcher.solve();
      if (matched != left.size())
        return {false, DiffOpWitness{x, y, left.size(), right.size(), matched}};
    }
  return {true, std::nullopt};
}

/// delta(y, x) = y \ x on a poset whose elements are named sets
/// ("{a,b}" form), with base point the empty set.
inline DifferenceOpCandidate set_difference_delta(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::string>> tokens(n);
  for (ElemId e = 0; e < n; ++e) {
    auto t = parse_set_name(p.name(e));
    if (!t)
      throw Error(ErrorKind::ElementTypeMismatch,
                  "element '" + p.name(e) + "' is not a set name", {e});
    std::sort(t->begin(), t->end());
    tokens[e] = std::move(*t);
  }
  const auto base = p.index_of("{}");
  if (!base)
    throw Error(ErrorKind::ElementTypeMismatch, "poset has no empty-set element '{}'");
  auto cand = DifferenceOpCandidate::empty(n, *base);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      std::vector<std::string> diff;
      std::set_difference(tokens[y].begin(), tokens[y].end(), tokens[x].begin(),
                          tokens[x].end(), std::back_inserter(diff));
      const auto value = p.index_of(set_name(std::move(diff)));
      if (!value)
        throw Error(ErrorKind::ElementTypeMismatch,
                    "difference of '" + p.name(y) + "' and '" + p.name(x) +
                        "' is not an element of the poset",
                    {y, x});
      cand.set(y, x, *value, n);
    }
  return cand;
}

/// delta(y, x) = y * x^-1 on a poset whose elements are named permutations
/// in one-line notation, with base point the identity.
inline DifferenceOpCandidate bruhat_delta(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Permutation> perms(n);
  for (ElemId e = 0; e < n; ++e) {
    auto q = Permutation::parse(p.name(e));
    if (!q)
      throw Error(ErrorKind::ElementTypeMismatch,
                  "element '" + p.name(e) + "' is not a permutation name", {e});
    perms[e] = std::move(*q);
  }
  for (ElemId e = 1; e < n; ++e)
    if (perms[e].n() != perms[0].n())
      throw Error(ErrorKind::ElementTypeMismatch, "permutations of mixed degree");
  const auto base = p.index_of(Permutation::identity(perms[0].n()).name());
  if (!base)
    throw Error(ErrorKind::ElementTypeMismatch, "poset has no identity permutation");
  auto cand = DifferenceOpCandidate::empty(n, *base);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      const auto value = p.index_of((perms[y] * perms[x].inverse()).name());
      if (!value)
        throw Error(ErrorKind::ElementTypeMismatch,
                    "quotient of '" + p.name(y) + "' by '" + p.name(x) +
                        "' is not an element of the poset",
                    {y, x});
      cand.set(y, x, *value, n);
    }
  return cand;
}

/// The order category C_P: one morphism (y, x) per comparable pair x <= y,
/// composed by interval gluing, labeled by the candidate difference values.
inline SchemoidInstance build_cp(const FinitePoset& p, const DifferenceOpCandidate& cand) {
  const std::size_t n = p.size();
  std::vector<MorphismData> mors;
  std::vector<MorphismId> mid(n * n, kNoMorphism);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (p.leq(x, y)) {
        mid[x * n + y] = static_cast<MorphismId>(mors.size());
        mors.push_back({"(" + p.name(y) + "," + p.name(x) + ")", x, y});
      }
  std::vector<std::array<MorphismId, 3>> entries;
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (ElemId z = 0; z < n; ++z)
        if (p.leq(y, z))
          entries.push_back({mid[y * n + z], mid[x * n + y], mid[x * n + z]});
    }
  std::vector<MorphismId> ids;
  std::vector<std::string> obj_names = p.names();
  for (ElemId x = 0; x < n; ++x) ids.push_back(mid[x * n + x]);
  FiniteCategory cat =
      FiniteCategory::build(std::move(obj_names), std::move(mors), entries, std::move(ids));

  // labels: used delta values, in element order
  std::vector<ElemId> used_values;
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (p.leq(x, y)) used_values.push_back(cand.delta_of(y, x, n));
  std::sort(used_values.begin(), used_values.end());
  used_values.erase(std::unique(used_values.begin(), used_values.end()), used_values.end());
  std::vector<LabelId> label_of_elem(n, 0);
  Labeling lab;
  for (std::size_t i = 0; i < used_values.size(); ++i) {
    label_of_elem[used_values[i]] = static_cast<LabelId>(i);
    lab.labels.push_back(p.name(used_values[i]));
  }
  lab.assign.resize(cat.num_morphisms());
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (p.leq(x, y))
        lab.assign[mid[x * n + y]] = label_of_elem[cand.delta_of(y, x, n)];
  return SchemoidInstance(std::move(cat), std::move(lab));
}

/// The join/rank category over a ranked poset: morphisms are triples
/// (x, y, d) with y = x v d and rank(y) = rank(x) + rank(d), composed by
/// (y,z,d2) o (x,y,d1) = (x,z,d1 v d2), labeled by d. The composite is
/// looked up rather than assumed; a miss raises CompositionEscape (which
/// must never fire on input passing the preconditions).
inline SchemoidInstance build_tilde(const RankedPoset& rp) {
  const auto pre = check_tilde_preconditions(rp.base);
  if (!pre.passed())
    throw Error(ErrorKind::PreconditionFailed,
                "tilde precondition '" + pre.failing() + "' fails");
  const FinitePoset& p = rp.base;
  const std::size_t n = p.size();

  struct Tri {
    ElemId x, y, d;
  };
  std::vector<Tri> tris;
  std::vector<MorphismId> mid(n * n, kNoMorphism);  // (x, d) -> morphism
  for (ElemId x = 0; x < n; ++x)
    for (ElemId d = 0; d < n; ++d) {
      const auto y = p.join(x, d);
      if (!y || rp.rank[*y] != rp.rank[x] + rp.rank[d]) continue;
      mid[x * n + d] = static_cast<MorphismId>(tris.size());
      tris.push_back({x, *y, d});
    }
  std::vector<MorphismData> mors;
  for (const auto& t : tris)
    mors.push_back({"f^{" + p.name(t.d) + "}_{" + p.name(t.x) + "," + p.name(t.y) + "}",
                    t.x, t.y});
  std::vector<std::array<MorphismId, 3>> entries;
  for (MorphismId a = 0; a < tris.size(); ++a)
    for (MorphismId b = 0; b < tris.size(); ++b) {
      // compose a after b: b = (x, y, d1), a = (y, z, d2)
      if (tris[b].y != tris[a].x) continue;
      const auto dd = p.join(tris[b].d, tris[a].d);
      if (!dd)
        throw Error(ErrorKind::CompositionEscape,
                    "labels of a composable pair have no join", {a, b});
      const MorphismId h = mid[tris[b].x * n + *dd];
      if (h == kNoMorphism || tris[h].y != tris[a].y)
        throw Error(ErrorKind::CompositionEscape,
                    "composite triple is not a morphism", {a, b});
      entries.push_back({a, b, h});
    }
  std::vector<MorphismId> ids;
  for (ElemId x = 0; x < n; ++x) ids.push_back(mid[x * n + rp.minimum]);
  std::vector<std::string> obj_names = p.names();
  FiniteCategory cat =
      FiniteCategory::build(std::move(obj_names), std::move(mors), entries, std::move(ids));

  Labeling lab;
  lab.labels = p.names();  // every d is used: (0^, d, d) is always a morphism
  lab.assign.resize(cat.num_morphisms());
  for (MorphismId m = 0; m < tris.size(); ++m) lab.assign[m] = tris[m].d;
  return SchemoidInstance(std::move(cat), std::move(lab));
}

// ---------------------------------------------------------------------------
// Lemma-based verification via label-preserving functor search.
// ---------------------------------------------------------------------------

enum class LemmaStatus { Pass, Fail, Inconclusive };

struct LemmaReport {
  LemmaStatus status = LemmaStatus::Fail;
  std::optional<std::pair<MorphismId, MorphismId>> witness;  // pair with no functor
  std::uint64_t pairs_checked = 0;
  std::uint64_t cap_hits = 0;
};

/// For every label class and every ordered pair (f, g) in it, searches for a
/// label-preserving morphism bijection C_f -> C_g pinning f to g. A genuine
/// non-existence is a definite failure; hitting the node cap anywhere (with
/// no failure found) makes the outcome inconclusive. Requires the category
/// to be endomorphism-free.
inline LemmaReport verify_via_lemma(const SchemoidInstance& inst,
                                    std::uint64_t node_cap = kDefaultNodeCap) {
  const auto& c = inst.category;
  if (!c.is_endomorphism_free())
    throw Error(ErrorKind::HasEndomorphisms,
                "category has a non-identity endomorphism");
  const auto classes = detail::label_classes(inst);

  std::vector<std::optional<Subcategory>> sub(c.num_morphisms());
  std::vector<std::vector<LabelId>> sub_labels(c.num_morphisms());
  auto ensure = [&](MorphismId f) {
    if (!sub[f]) {
      sub[f] = minimal_subcategory_through(c, f);
      for (MorphismId parent : sub[f]->morphism_in_parent)
        sub_labels[f].push_back(inst.label_of(parent));
    }
  };

  LemmaReport r;
  r.status = LemmaStatus::Pass;
  for (const auto& cls : classes)
    for (MorphismId f : cls)
      for (MorphismId g : cls) {
        ++r.pairs_checked;
        if (f == g) continue;  // the identity functor
        ensure(f);
        ensure(g);
        const auto pin_f = sub[f]->local_morphism(f);
        const auto pin_g = sub[g]->local_morphism(g);
        try {
          const auto phi = find_functor(sub[f]->cat, sub_labels[f], sub[g]->cat,
                                        sub_labels[g], *pin_f, *pin_g, node_cap);
          if (!phi) {
            r.status = LemmaStatus::Fail;
            r.witness = {f, g};
            return r;
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::CapExceeded) throw;
          ++r.cap_hits;
        }
      }
  if (r.cap_hits > 0) r.status = LemmaStatus::Inconclusive;
  return r;
}

}  // namespace schemoid
