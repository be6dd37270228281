#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schemoid/category.hpp"
#include "schemoid/errors.hpp"

namespace schemoid {

struct Functor {
  std::vector<ObjectId> obj_map;     // per object of the source category
  std::vector<MorphismId> mor_map;   // per morphism of the source category
};

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

/// Independent validity check: endpoints transported consistently,
/// identities preserved, composition preserved on every length-2 nerve.
inline bool functor_is_valid(const FiniteCategory& cf, const FiniteCategory& cg,
                             const Functor& phi) {
  if (phi.obj_map.size() != cf.num_objects() || phi.mor_map.size() != cf.num_morphisms())
    return false;
  for (ObjectId x = 0; x < cf.num_objects(); ++x) {
    if (phi.obj_map[x] >= cg.num_objects()) return false;
    if (phi.mor_map[cf.identity(x)] != cg.identity(phi.obj_map[x])) return false;
  }
  for (MorphismId m = 0; m < cf.num_morphisms(); ++m) {
    const MorphismId im = phi.mor_map[m];
    if (im >= cg.num_morphisms()) return false;
    if (cg.src(im) != phi.obj_map[cf.src(m)] || cg.tgt(im) != phi.obj_map[cf.tgt(m)])
      return false;
  }
  for (MorphismId a = 0; a < cf.num_morphisms(); ++a)
    for (MorphismId b = 0; b < cf.num_morphisms(); ++b)
      if (cf.composable(a, b) &&
          phi.mor_map[cf.compose_or_none(a, b)] !=
              cg.compose_or_none(phi.mor_map[a], phi.mor_map[b]))
        return false;
  return true;
}

inline bool functor_is_morphism_bijection(const FiniteCategory& cf, const FiniteCategory& cg,
                                          const Functor& phi) {
  if (cf.num_morphisms() != cg.num_morphisms()) return false;
  std::vector<bool> hit(cg.num_morphisms(), false);
  for (MorphismId m = 0; m < cf.num_morphisms(); ++m) {
    if (hit[phi.mor_map[m]]) return false;
    hit[phi.mor_map[m]] = true;
  }
  return true;
}

inline bool functor_preserves_labels(std::span<const std::uint32_t> labels_f,
                                     std::span<const std::uint32_t> labels_g,
                                     const Functor& phi) {
  for (std::size_t m = 0; m < phi.mor_map.size(); ++m)
    if (labels_f[m] != labels_g[phi.mor_map[m]]) return false;
  return true;
}

namespace detail {

struct FunctorSearch {
  FunctorSearch(const FiniteCategory& cf_, const FiniteCategory& cg_,
                std::span<const std::uint32_t> lf, std::span<const std::uint32_t> lg,
                std::uint64_t cap_)
      : cf(cf_), cg(cg_), labels_f(lf), labels_g(lg), cap(cap_) {}

  const FiniteCategory& cf;
  const FiniteCategory& cg;
  std::span<const std::uint32_t> labels_f;
  std::span<const std::uint32_t> labels_g;
  std::uint64_t cap;
  std::uint64_t nodes = 0;

  std::vector<MorphismId> order;            // assignment order over cf morphisms
  std::vector<MorphismId> mor_map;          // partial, kNoMorphism = unset
  std::vector<ObjectId> obj_map;            // partial, sentinel = unset
  std::vector<bool> used;                   // cg morphisms already taken
  std::vector<std::vector<MorphismId>> by_label;  // cg morphisms per label

  static constexpr ObjectId kNoObject = static_cast<ObjectId>(-1);

  bool bind_object(ObjectId x, ObjectId image, std::vector<ObjectId>& undo) {
    if (obj_map[x] != kNoObject) return obj_map[x] == image;
    obj_map[x] = image;
    undo.push_back(x);
    return true;
  }

  bool consistent_after(MorphismId m) {
    // composition checks against everything already assigned
    for (MorphismId a = 0; a < cf.num_morphisms(); ++a) {
      if (mor_map[a] == kNoMorphism) continue;
      for (MorphismId pair_first : {m, a}) {
        const MorphismId p = pair_first;
        const MorphismId q = (pair_first == m) ? a : m;
        if (!cf.composable(p, q)) continue;
        const MorphismId c = cf.compose_or_none(p, q);
        const MorphismId ip = mor_map[p], iq = mor_map[q];
        if (!cg.composable(ip, iq)) return false;
        if (mor_map[c] != kNoMorphism && cg.compose_or_none(ip, iq) != mor_map[c])
          return false;
      }
    }
    // m itself may be the composite of assigned pairs
    for (MorphismId a = 0; a < cf.num_morphisms(); ++a) {
      if (mor_map[a] == kNoMorphism) continue;
      for (MorphismId b = 0; b < cf.num_morphisms(); ++b) {
        if (mor_map[b] == kNoMorphism || !cf.composable(a, b)) continue;
        if (cf.compose_or_none(a, b) == m &&
            cg.compose_or_none(mor_map[a], mor_map[b]) != mor_map[m])
          return false;
      }
    }
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == order.size()) return true;
    const MorphismId m = order[pos];
    for (MorphismId cand : by_label[labels_f[m]]) {
      if (used[cand]) continue;
      if (cf.is_identity(m) != cg.is_identity(cand)) continue;
      if (++nodes > cap)
        throw Error(ErrorKind::CapExceeded,
                    "functor search exceeded " + std::to_string(cap) + " nodes");
      std::vector<ObjectId> undo;
      if (!bind_object(cf.src(m), cg.src(cand), undo) ||
          !bind_object(cf.tgt(m), cg.tgt(cand), undo)) {
        for (ObjectId x : undo) obj_map[x] = kNoObject;
        continue;
      }
      mor_map[m] = cand;
      used[cand] = true;
      if (consistent_after(m) && assign(pos + 1)) return true;
      mor_map[m] = kNoMorphism;
      used[cand] = false;
      for (ObjectId x : undo) obj_map[x] = kNoObject;
    }
    return false;
  }
};

}  // namespace detail

/// Searches for a functor cf -> cg that is bijective on morphisms,
/// label-preserving (labels_f and labels_g index a shared label set), and
/// maps pin_f to pin_g. Returns nullopt when no such functor exists;
/// throws CapExceeded when the node budget is exhausted, which is distinct
/// from a definite negative.
inline std::optional<Functor> find_functor(const FiniteCategory& cf,
                                           std::span<const std::uint32_t> labels_f,
                                           const FiniteCategory& cg,
                                           std::span<const std::uint32_t> labels_g,
                                           MorphismId pin_f, MorphismId pin_g,
                                           std::uint64_t node_cap = kDefaultNodeCap) {
  if (cf.num_morphisms() != cg.num_morphisms()) return std::nullopt;
  if (labels_f[pin_f] != labels_g[pin_g]) return std::nullopt;

  std::uint32_t num_labels = 0;
  for (auto l : labels_f) num_labels = std::max(num_labels, l + 1);
  for (auto l : labels_g) num_labels = std::max(num_labels, l + 1);
  std::vector<std::size_t> count_f(num_labels, 0), count_g(num_labels, 0);
  for (auto l : labels_f) ++count_f[l];
  for (auto l : labels_g) ++count_g[l];
  if (count_f != count_g) return std::nullopt;

  detail::FunctorSearch s(cf, cg, labels_f, labels_g, node_cap);
  s.by_label.assign(num_labels, {});
  for (MorphismId m = 0; m < cg.num_morphisms(); ++m) s.by_label[labels_g[m]].push_back(m);
  s.mor_map.assign(cf.num_morphisms(), kNoMorphism);
  s.obj_map.assign(cf.num_objects(), detail::FunctorSearch::kNoObject);
  s.used.assign(cg.num_morphisms(), false);

  // pin first, then grow outward over shared objects so endpoint constraints
  // bind as early as possible
  std::vector<bool> queued(cf.num_morphisms(), false);
  s.order.push_back(pin_f);
  queued[pin_f] = true;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    const MorphismId cur = s.order[head];
    for (ObjectId x : {cf.src(cur), cf.tgt(cur)})
      for (MorphismId next = 0; next < cf.num_morphisms(); ++next)
        if (!queued[next] && (cf.src(next) == x || cf.tgt(next) == x)) {
          queued[next] = true;
          s.order.push_back(next);
        }
  }
  for (MorphismId m = 0; m < cf.num_morphisms(); ++m)
    if (!queued[m]) s.order.push_back(m);

  // force the pin
  s.mor_map[pin_f] = pin_g;
  s.used[pin_g] = true;
  std::vector<ObjectId> undo;
  if (!s.bind_object(cf.src(pin_f), cg.src(pin_g), undo) ||
      !s.bind_object(cf.tgt(pin_f), cg.tgt(pin_g), undo) ||
      cf.is_identity(pin_f) != cg.is_identity(pin_g) || !s.consistent_after(pin_f))
    return std::nullopt;
  if (!s.assign(1)) return std::nullopt;

  Functor phi;
  phi.mor_map = s.mor_map;
  phi.obj_map.resize(cf.num_objects());
  for (ObjectId x = 0; x < cf.num_objects(); ++x) {
    // every object carries its identity, so the object map is total
    phi.obj_map[x] = cg.src(s.mor_map[cf.identity(x)]);
  }
  return phi;
}

}  // namespace schemoid
