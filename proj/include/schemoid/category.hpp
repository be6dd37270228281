#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schemoid/errors.hpp"

namespace schemoid {

using ObjectId = std::uint32_t;
using MorphismId = std::uint32_t;
inline constexpr MorphismId kNoMorphism = static_cast<MorphismId>(-1);

struct MorphismData {
  std::string name;
  ObjectId src = 0;
  ObjectId tgt = 0;
};

/// A nerve: a composable sequence of morphisms in application order,
/// tgt(seq[i]) = src(seq[i+1]).
using Nerve = std::vector<MorphismId>;

/// Finite small category with a dense composition table, fully validated at
/// construction: comp(g,f) is defined exactly when src(g) = tgt(f), typing
/// of every composite is checked, associativity is checked on every
/// length-3 nerve, and each object carries exactly one neutral identity.
/// Instances are immutable; operations are pure.
class FiniteCategory {
 public:
  /// comp_entries are triples {g, f, h} meaning g after f equals h.
  /// When `identities` is not provided they are inferred by neutrality.
  static FiniteCategory build(std::vector<std::string> objects,
                              std::vector<MorphismData> morphisms,
                              const std::vector<std::array<MorphismId, 3>>& comp_entries,
                              std::optional<std::vector<MorphismId>> identities = std::nullopt) {
    FiniteCategory c;
    c.objects_ = std::move(objects);
    c.morphisms_ = std::move(morphisms);
    const MorphismId m = c.num_morphisms();
    for (MorphismId f = 0; f < m; ++f)
      if (c.morphisms_[f].src >= c.num_objects() || c.morphisms_[f].tgt >= c.num_objects())
        throw Error(ErrorKind::BadInput, "morphism '" + c.morphisms_[f].name +
                        "' has an out-of-range endpoint", {f});
    c.comp_.assign(static_cast<std::size_t>(m) * m, kNoMorphism);

    for (const auto& [g, f, h] : comp_entries) {
      if (g >= m || f >= m || h >= m)
        throw Error(ErrorKind::BadInput, "composition entry index out of range", {g, f, h});
      if (c.src(g) != c.tgt(f))
        throw Error(ErrorKind::BadComposite,
                    "entry for non-composable pair ('" + c.name(g) + "', '" + c.name(f) + "')",
                    {g, f, h});
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g))
        throw Error(ErrorKind::BadComposite,
                    "composite '" + c.name(h) + "' of ('" + c.name(g) + "', '" + c.name(f) +
                        "') has wrong endpoints",
                    {g, f, h});
      if (c.comp_[static_cast<std::size_t>(g) * m + f] != kNoMorphism)
        throw Error(ErrorKind::BadInput,
                    "duplicate composition entry for ('" + c.name(g) + "', '" + c.name(f) + "')",
                    {g, f});
      c.comp_[static_cast<std::size_t>(g) * m + f] = h;
    }
    for (MorphismId g = 0; g < m; ++g)
      for (MorphismId f = 0; f < m; ++f)
        if (c.src(g) == c.tgt(f) && c.comp_[static_cast<std::size_t>(g) * m + f] == kNoMorphism)
          throw Error(ErrorKind::MissingComposite,
                      "no composite for composable pair ('" + c.name(g) + "', '" + c.name(f) + "')",
                      {g, f});

    c.index_by_object();
    c.resolve_identities(identities);
    c.check_associativity();
    return c;
  }

  ObjectId num_objects() const { return static_cast<ObjectId>(objects_.size()); }
  MorphismId num_morphisms() const { return static_cast<MorphismId>(morphisms_.size()); }
  const std::string& object_name(ObjectId x) const { return objects_[x]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const MorphismData& morphism(MorphismId f) const { return morphisms_[f]; }
  const std::string& name(MorphismId f) const { return morphisms_[f].name; }
  ObjectId src(MorphismId f) const { return morphisms_[f].src; }
  ObjectId tgt(MorphismId f) const { return morphisms_[f].tgt; }
  MorphismId identity(ObjectId x) const { return identity_[x]; }
  const std::vector<MorphismId>& identities() const { return identity_; }
  bool is_identity(MorphismId f) const { return identity_[src(f)] == f && src(f) == tgt(f); }

  bool composable(MorphismId g, MorphismId f) const { return src(g) == tgt(f); }

  /// g after f. Throws NotComposable when src(g) != tgt(f).
  MorphismId compose(MorphismId g, MorphismId f) const {
    if (!composable(g, f))
      throw Error(ErrorKind::NotComposable,
                  "src('" + name(g) + "') != tgt('" + name(f) + "')", {g, f});
    return comp_[static_cast<std::size_t>(g) * num_morphisms() + f];
  }

  /// Table lookup without the composability check; kNoMorphism if undefined.
  MorphismId compose_or_none(MorphismId g, MorphismId f) const {
    return comp_[static_cast<std::size_t>(g) * num_morphisms() + f];
  }

  std::vector<MorphismId> hom_set(ObjectId x, ObjectId y) const {
    std::vector<MorphismId> out;
    for (MorphismId f : by_src_[x])
      if (tgt(f) == y) out.push_back(f);
    return out;
  }

  const std::vector<MorphismId>& morphisms_from(ObjectId x) const { return by_src_[x]; }
  const std::vector<MorphismId>& morphisms_into(ObjectId y) const { return by_tgt_[y]; }

  /// All composable sequences of length n, in lexicographic order of
  /// morphism ids. n is guarded by `cap` (CapExceeded beyond it).
  std::vector<Nerve> nerves(std::size_t n, std::size_t cap = 3) const {
    if (n == 0) throw Error(ErrorKind::BadInput, "nerve length must be positive");
    if (n > cap)
      throw Error(ErrorKind::CapExceeded,
                  "nerve length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Nerve> out;
    Nerve cur;
    cur.reserve(n);
    extend_nerve(cur, n, out);
    return out;
  }

  /// Morphisms g through which f factors: f = f1 o g o f2 for some f1, f2.
  /// f itself is always a member (take identities).
  std::vector<MorphismId> divisors(MorphismId f) const {
    std::set<MorphismId> out;
    for (MorphismId g = 0; g < num_morphisms(); ++g) {
      bool divides = false;
      for (MorphismId f2 : by_tgt_[src(g)]) {
        const MorphismId gf2 = compose_or_none(g, f2);
        for (MorphismId f1 : by_src_[tgt(g)]) {
          if (compose_or_none(f1, gf2) == f) {
            divides = true;
            break;
          }
        }
        if (divides) break;
      }
      if (divides) out.insert(g);
    }
    return {out.begin(), out.end()};
  }

  /// True iff every endomorphism is an identity.
  bool is_endomorphism_free() const {
    for (MorphismId f = 0; f < num_morphisms(); ++f)
      if (src(f) == tgt(f) && !is_identity(f)) return false;
    return true;
  }

 private:
  void index_by_object() {
    by_src_.assign(num_objects(), {});
    by_tgt_.assign(num_objects(), {});
    for (MorphismId f = 0; f < num_morphisms(); ++f) {
      by_src_[src(f)].push_back(f);
      by_tgt_[tgt(f)].push_back(f);
    }
  }

  bool neutral_at(MorphismId e, ObjectId x) const {
    if (src(e) != x || tgt(e) != x) return false;
    for (MorphismId f : by_tgt_[x])
      if (compose_or_none(e, f) != f) return false;
    for (MorphismId g : by_src_[x])
      if (compose_or_none(g, e) != g) return false;
    return true;
  }

  void resolve_identities(const std::optional<std::vector<MorphismId>>& given) {
    identity_.assign(num_objects(), kNoMorphism);
    if (given) {
      if (given->size() != num_objects())
        throw Error(ErrorKind::BadIdentity, "identity list size != object count");
      for (ObjectId x = 0; x < num_objects(); ++x) {
        const MorphismId e = (*given)[x];
        if (e >= num_morphisms() || !neutral_at(e, x))
          throw Error(ErrorKind::BadIdentity,
                      "morphism is not a neutral identity on '" + objects_[x] + "'", {x, e});
        identity_[x] = e;
      }
      return;
    }
    for (ObjectId x = 0; x < num_objects(); ++x) {
      std::vector<MorphismId> found;
      for (MorphismId e : by_src_[x])
        if (neutral_at(e, x)) found.push_back(e);
      if (found.size() != 1)
        throw Error(ErrorKind::BadIdentity,
                    "object '" + objects_[x] + "' has " + std::to_string(found.size()) +
                        " neutral identities",
                    {x});
      identity_[x] = found[0];
    }
  }

  void check_associativity() const {
    for (MorphismId f = 0; f < num_morphisms(); ++f)
      for (MorphismId g : by_src_[tgt(f)]) {
        const MorphismId gf = compose_or_none(g, f);
        for (MorphismId h : by_src_[tgt(g)]) {
          if (compose_or_none(h, gf) != compose_or_none(compose_or_none(h, g), f))
            throw Error(ErrorKind::NotAssociative,
                        "h o (g o f) != (h o g) o f for ('" + name(h) + "', '" + name(g) +
                            "', '" + name(f) + "')",
                        {h, g, f});
        }
      }
  }

  void extend_nerve(Nerve& cur, std::size_t n, std::vector<Nerve>& out) const {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (MorphismId f = 0; f < num_morphisms(); ++f) {
      if (!cur.empty() && tgt(cur.back()) != src(f)) continue;
      cur.push_back(f);
      extend_nerve(cur, n, out);
      cur.pop_back();
    }
  }

  std::vector<std::string> objects_;
  std::vector<MorphismData> morphisms_;
  std::vector<MorphismId> comp_;  // dense (g, f) -> h, kNoMorphism if not composable
  std::vector<MorphismId> identity_;
  std::vector<std::vector<MorphismId>> by_src_;
  std::vector<std::vector<MorphismId>> by_tgt_;
};

/// A subcategory presented with its embedding back into the parent.
struct Subcategory {
  FiniteCategory cat;
  std::vector<ObjectId> object_in_parent;
  std::vector<MorphismId> morphism_in_parent;

  std::optional<MorphismId> local_morphism(MorphismId parent) const {
    for (std::size_t i = 0; i < morphism_in_parent.size(); ++i)
      if (morphism_in_parent[i] == parent) return static_cast<MorphismId>(i);
    return std::nullopt;
  }
};

/// The minimum subcategory C_f whose morphisms contain divisors(f):
/// divisors, identities of all touched objects, and closure under
/// composition.
inline Subcategory minimal_subcategory_through(const FiniteCategory& c, MorphismId f) {
  std::set<MorphismId> mors;
  for (MorphismId g : c.divisors(f)) mors.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<MorphismId> next = mors;
    for (MorphismId a : mors) {
      next.insert(c.identity(c.src(a)));
      next.insert(c.identity(c.tgt(a)));
      for (MorphismId b : mors)
        if (c.composable(a, b)) next.insert(c.compose_or_none(a, b));
    }
    if (next.size() != mors.size()) {
      mors = std::move(next);
      grew = true;
    }
  }

  Subcategory sub;
  std::set<ObjectId> objs;
  for (MorphismId a : mors) {
    objs.insert(c.src(a));
    objs.insert(c.tgt(a));
  }
  sub.object_in_parent.assign(objs.begin(), objs.end());
  sub.morphism_in_parent.assign(mors.begin(), mors.end());
  std::vector<ObjectId> obj_local(c.num_objects(), 0);
  for (std::size_t i = 0; i < sub.object_in_parent.size(); ++i)
    obj_local[sub.object_in_parent[i]] = static_cast<ObjectId>(i);
  std::vector<MorphismId> mor_local(c.num_morphisms(), kNoMorphism);
  for (std::size_t i = 0; i < sub.morphism_in_parent.size(); ++i)
    mor_local[sub.morphism_in_parent[i]] = static_cast<MorphismId>(i);

  std::vector<std::string> names;
  for (ObjectId o : sub.object_in_parent) names.push_back(c.object_name(o));
  std::vector<MorphismData> sub_mors;
  for (MorphismId a : sub.morphism_in_parent)
    sub_mors.push_back({c.name(a), obj_local[c.src(a)], obj_local[c.tgt(a)]});
  std::vector<std::array<MorphismId, 3>> entries;
  for (MorphismId a : sub.morphism_in_parent)
    for (MorphismId b : sub.morphism_in_parent)
      if (c.composable(a, b))
        entries.push_back({mor_local[a], mor_local[b], mor_local[c.compose_or_none(a, b)]});
  std::vector<MorphismId> ids;
  for (ObjectId o : sub.object_in_parent) ids.push_back(mor_local[c.identity(o)]);
  sub.cat = FiniteCategory::build(std::move(names), std::move(sub_mors), entries, std::move(ids));
  return sub;
}

}  // namespace schemoid
