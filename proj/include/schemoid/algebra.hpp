#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemoid/errors.hpp"
#include "schemoid/generators.hpp"
#include "schemoid/poset.hpp"
#include "schemoid/rational.hpp"
#include "schemoid/schemoid.hpp"

namespace schemoid {

// ---------------------------------------------------------------------------
// The category algebra K[C] on sparse rational vectors over Mor(C).
// ---------------------------------------------------------------------------

/// Sparse vector over the morphism basis; zero coefficients are never stored.
struct SparseVector {
  std::map<MorphismId, Rational> terms;

  void add(MorphismId m, const Rational& r) {
    if (r.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, r);
    if (!inserted) {
      it->second = it->second + r;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Rational coeff(MorphismId m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational{} : it->second;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.terms == b.terms;
  }
};

/// Bilinear extension of g . f = g o f when composable, 0 otherwise.
/// The left factor is the outer morphism.
inline SparseVector algebra_product(const FiniteCategory& c, const SparseVector& a,
                                    const SparseVector& b) {
  SparseVector out;
  for (const auto& [f, af] : a.terms)
    for (const auto& [g, bg] : b.terms)
      if (c.composable(f, g)) out.add(c.compose_or_none(f, g), af * bg);
  return out;
}

/// The class sum i-bar: the sum of all morphisms carrying label i.
inline SparseVector class_sum(const SchemoidInstance& inst, LabelId i) {
  SparseVector v;
  for (MorphismId m = 0; m < inst.category.num_morphisms(); ++m)
    if (inst.label_of(m) == i) v.add(m, Rational{1});
  return v;
}

/// The sum of all identities: the unit of K[C].
inline SparseVector identity_sum(const FiniteCategory& c) {
  SparseVector v;
  for (ObjectId x = 0; x < c.num_objects(); ++x) v.add(c.identity(x), Rational{1});
  return v;
}

// ---------------------------------------------------------------------------
// Structure constants of the schemoid algebra.
// ---------------------------------------------------------------------------

/// The table p_ij^k with i-bar . j-bar = sum_k p_ij^k k-bar.
struct StructureConstants {
  std::vector<std::string> labels;
  std::vector<std::int64_t> p;  // (i * L + j) * L + k

  LabelId num_labels() const { return static_cast<LabelId>(labels.size()); }
  std::int64_t at(LabelId i, LabelId j, LabelId k) const {
    const std::size_t L = labels.size();
    return p[(static_cast<std::size_t>(i) * L + j) * L + k];
  }
  std::int64_t& at(LabelId i, LabelId j, LabelId k) {
    const std::size_t L = labels.size();
    return p[(static_cast<std::size_t>(i) * L + j) * L + k];
  }
};

/// Expands every class-sum product in the class-sum basis. Well-definedness
/// is exactly the schemoid condition; a violation raises NotSchemoid whose
/// witness coincides with the verify_schemoid witness.
inline StructureConstants schemoid_algebra(const SchemoidInstance& inst) {
  const auto report = verify_schemoid(inst);
  if (!report.ok) {
    const auto& w = *report.witness;
    throw Error(ErrorKind::NotSchemoid,
                "class sums do not close: labels (" + inst.labeling.labels[w.i] + ", " +
                    inst.labeling.labels[w.j] + ") factor '" +
                    inst.category.name(w.h) + "' " + std::to_string(w.count_h) +
                    " times but '" + inst.category.name(w.k) + "' " +
                    std::to_string(w.count_k) + " times",
                {w.i, w.j, w.h, w.k, static_cast<std::uint32_t>(w.count_h),
                 static_cast<std::uint32_t>(w.count_k)});
  }
  const auto buckets = detail::factorization_buckets(inst);
  const auto classes = detail::label_classes(inst);
  const std::uint64_t L = inst.labeling.num_labels();
  const std::uint64_t M = inst.category.num_morphisms();
  StructureConstants sc;
  sc.labels = inst.labeling.labels;
  sc.p.assign(static_cast<std::size_t>(L) * L * L, 0);
  for (LabelId i = 0; i < L; ++i)
    for (LabelId j = 0; j < L; ++j)
      for (LabelId k = 0; k < L; ++k) {
        const MorphismId rep = classes[k].front();
        const auto it = buckets.find((static_cast<std::uint64_t>(i) * L + j) * M + rep);
        sc.at(i, j, k) = it == buckets.end() ? 0 : static_cast<std::int64_t>(it->second);
      }
  return sc;
}

/// Recomputes every i-bar . j-bar through algebra_product and compares with
/// sum_k p_ij^k k-bar as sparse vectors.
inline bool closure_oracle(const SchemoidInstance& inst, const StructureConstants& sc) {
  const LabelId L = sc.num_labels();
  std::vector<SparseVector> sums;
  for (LabelId i = 0; i < L; ++i) sums.push_back(class_sum(inst, i));
  for (LabelId i = 0; i < L; ++i)
    for (LabelId j = 0; j < L; ++j) {
      const SparseVector lhs = algebra_product(inst.category, sums[i], sums[j]);
      SparseVector rhs;
      for (LabelId k = 0; k < L; ++k) {
        const std::int64_t coeff = sc.at(i, j, k);
        if (coeff == 0) continue;
        for (const auto& [m, r] : sums[k].terms) rhs.add(m, Rational{coeff} * r);
      }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

/// Associativity of the structure-constant table:
/// sum_m p[i][j][m] p[m][k][l] = sum_m p[j][k][m] p[i][m][l].
inline bool associativity_check(const StructureConstants& sc) {
  const LabelId L = sc.num_labels();
  for (LabelId i = 0; i < L; ++i)
    for (LabelId j = 0; j < L; ++j)
      for (LabelId k = 0; k < L; ++k)
        for (LabelId l = 0; l < L; ++l) {
          std::int64_t lhs = 0, rhs = 0;
          for (LabelId m = 0; m < L; ++m) {
            lhs += sc.at(i, j, m) * sc.at(m, k, l);
            rhs += sc.at(j, k, m) * sc.at(i, m, l);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

// ---------------------------------------------------------------------------
// Reference rings as basis-indexed multiplication tables. All four are
// monomial: a product is either a single basis element or zero.
// ---------------------------------------------------------------------------

struct RingTable {
  static constexpr std::uint32_t kZeroProduct = static_cast<std::uint32_t>(-1);

  std::vector<std::string> basis;
  std::optional<std::uint32_t> unit;
  std::vector<std::uint32_t> mul;  // (i * B + j) -> k, kZeroProduct for zero

  std::uint32_t size() const { return static_cast<std::uint32_t>(basis.size()); }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return mul[static_cast<std::size_t>(i) * basis.size() + j];
  }
  std::uint32_t& at(std::uint32_t i, std::uint32_t j) {
    return mul[static_cast<std::size_t>(i) * basis.size() + j];
  }

  /// Exhaustive unit and associativity check over the basis; zero absorbs.
  void validate() const {
    const std::uint32_t B = size();
    if (B > 256) throw Error(ErrorKind::SizeCap, "ring basis too large to validate");
    if (unit)
      for (std::uint32_t b = 0; b < B; ++b)
        if (at(*unit, b) != b || at(b, *unit) != b)
          throw Error(ErrorKind::BadInput, "unit is not neutral on '" + basis[b] + "'", {b});
    auto mul3 = [&](std::uint32_t ab, std::uint32_t c) {
      return ab == kZeroProduct ? kZeroProduct : at(ab, c);
    };
    for (std::uint32_t a = 0; a < B; ++a)
      for (std::uint32_t b = 0; b < B; ++b)
        for (std::uint32_t c = 0; c < B; ++c) {
          const std::uint32_t left = mul3(at(a, b), c);
          const std::uint32_t bc = at(b, c);
          const std::uint32_t right = bc == kZeroProduct ? kZeroProduct : at(a, bc);
          if (left != right)
            throw Error(ErrorKind::BadInput, "ring table is not associative", {a, b, c});
        }
  }
};

/// K[x_i | i in [n]] / (x_i^2): basis the subsets of {1..n} (squarefree
/// monomials), product union when disjoint, zero otherwise, unit the empty set.
inline RingTable squarefree_quotient_ring(int n) {
  if (n < 0 || n > 8) throw Error(ErrorKind::SizeCap, "squarefree ring needs 0 <= n <= 8");
  RingTable r;
  const std::uint32_t B = 1u << n;
  for (std::uint32_t m = 0; m < B; ++m) r.basis.push_back(subset_name(m));
  r.unit = 0;
  r.mul.assign(static_cast<std::size_t>(B) * B, RingTable::kZeroProduct);
  for (std::uint32_t a = 0; a < B; ++a)
    for (std::uint32_t b = 0; b < B; ++b)
      if ((a & b) == 0) r.at(a, b) = a | b;
  r.validate();
  return r;
}

/// The nil-Coxeter algebra of S_n: basis the permutations, product u*v when
/// length(u*v) = length(u) + length(v), zero otherwise, unit the identity.
inline RingTable nilcoxeter_ring(int n) {
  if (n < 1 || n > 4) throw Error(ErrorKind::SizeCap, "nilcoxeter ring needs 1 <= n <= 4");
  const auto elems = symmetric_group(n);
  RingTable r;
  for (const auto& u : elems) r.basis.push_back(u.name());
  r.unit = 0;  // identity is first in lexicographic order
  const std::uint32_t B = r.size();
  auto index_of = [&](const Permutation& u) -> std::uint32_t {
    for (std::uint32_t i = 0; i < B; ++i)
      if (elems[i] == u) return i;
    return RingTable::kZeroProduct;
  };
  r.mul.assign(static_cast<std::size_t>(B) * B, RingTable::kZeroProduct);
  for (std::uint32_t a = 0; a < B; ++a)
    for (std::uint32_t b = 0; b < B; ++b) {
      const Permutation w = elems[a] * elems[b];
      if (w.length() == elems[a].length() + elems[b].length()) r.at(a, b) = index_of(w);
    }
  r.validate();
  return r;
}

/// The Stanley-Reisner ring with squares added, K[x_i]/(I_Delta + (x_i^2)):
/// basis the faces of the complex (including the empty face), product union
/// when disjoint and still a face, zero otherwise.
inline RingTable stanley_reisner_sq_ring(const SimplicialComplex& complex) {
  complex.validate();
  const auto faces = complex.faces();
  RingTable r;
  for (auto f : faces) r.basis.push_back(complex.face_name(f));
  r.unit = 0;  // the empty face sorts first
  const std::uint32_t B = r.size();
  if (B > 256) throw Error(ErrorKind::SizeCap, "complex has too many faces");
  std::map<std::uint32_t, std::uint32_t> index_of;
  for (std::uint32_t i = 0; i < B; ++i) index_of[faces[i]] = i;
  r.mul.assign(static_cast<std::size_t>(B) * B, RingTable::kZeroProduct);
  for (std::uint32_t a = 0; a < B; ++a)
    for (std::uint32_t b = 0; b < B; ++b) {
      if (faces[a] & faces[b]) continue;
      const auto it = index_of.find(faces[a] | faces[b]);
      if (it != index_of.end()) r.at(a, b) = it->second;
    }
  r.validate();
  return r;
}

/// The ring R_P over a ranked poset: basis P, product X_x X_y = X_{x v y}
/// when the join exists and rank is additive, zero otherwise; X_0^ is the
/// unit. Requires the same preconditions as the tilde construction.
inline RingTable rp_ring(const RankedPoset& rp) {
  const auto pre = check_tilde_preconditions(rp.base);
  if (!pre.passed())
    throw Error(ErrorKind::PreconditionFailed,
                "rp_ring precondition '" + pre.failing() + "' fails");
  const FinitePoset& p = rp.base;
  const std::uint32_t B = static_cast<std::uint32_t>(p.size());
  if (B > 256) throw Error(ErrorKind::SizeCap, "poset too large for rp_ring");
  RingTable r;
  r.basis = p.names();
  r.unit = rp.minimum;
  r.mul.assign(static_cast<std::size_t>(B) * B, RingTable::kZeroProduct);
  for (std::uint32_t a = 0; a < B; ++a)
    for (std::uint32_t b = 0; b < B; ++b) {
      const auto j = p.join(a, b);
      if (j && rp.rank[*j] == rp.rank[a] + rp.rank[b]) r.at(a, b) = *j;
    }
  r.validate();
  return r;
}

// ---------------------------------------------------------------------------
// Table-level isomorphism checking.
// ---------------------------------------------------------------------------

struct IsoMismatch {
  LabelId i = 0, j = 0;
  std::string detail;
};

struct IsoReport {
  bool ok = false;
  std::vector<std::uint32_t> correspondence;  // label index -> basis index
  std::optional<IsoMismatch> mismatch;
};

/// Checks that the class-sum products match the ring table entrywise under
/// the given bijective correspondence. The claimed isomorphisms require
/// monomial tables, so any coefficient outside {0,1} or any product with
/// more than one term is a structural mismatch.
inline IsoReport table_isomorphic(const StructureConstants& sc, const RingTable& ring,
                                  const std::vector<std::uint32_t>& correspondence) {
  const LabelId L = sc.num_labels();
  if (correspondence.size() != L || ring.size() != L)
    throw Error(ErrorKind::NotBijective, "correspondence is not a bijection");
  std::vector<std::uint32_t> inverse(ring.size(), RingTable::kZeroProduct);
  for (LabelId i = 0; i < L; ++i) {
    if (correspondence[i] >= ring.size() || inverse[correspondence[i]] != RingTable::kZeroProduct)
      throw Error(ErrorKind::NotBijective, "correspondence is not a bijection");
    inverse[correspondence[i]] = i;
  }

  IsoReport report;
  report.correspondence = correspondence;
  for (LabelId i = 0; i < L; ++i)
    for (LabelId j = 0; j < L; ++j) {
      std::optional<LabelId> support;
      for (LabelId k = 0; k < L; ++k) {
        const std::int64_t v = sc.at(i, j, k);
        if (v == 0) continue;
        if (v != 1) {
          report.mismatch = {i, j, "coefficient " + std::to_string(v) + " on '" +
                                       sc.labels[k] + "' is not 0 or 1"};
          return report;
        }
        if (support) {
          report.mismatch = {i, j, "product has more than one term"};
          return report;
        }
        support = k;
      }
      const std::uint32_t expected = ring.at(correspondence[i], correspondence[j]);
      if (expected == RingTable::kZeroProduct) {
        if (support) {
          report.mismatch = {i, j, "class-sum product is '" + sc.labels[*support] +
                                       "' but the ring product is zero"};
          return report;
        }
      } else {
        if (!support || correspondence[*support] != expected) {
          report.mismatch = {i, j, "ring product is '" + ring.basis[expected] +
                                       "' but the class-sum product is " +
                                       (support ? "'" + sc.labels[*support] + "'" : "zero")};
          return report;
        }
      }
    }
  report.ok = true;
  return report;
}

/// The canonical correspondence: each label value must name a basis element.
inline IsoReport table_isomorphic_by_name(const StructureConstants& sc, const RingTable& ring) {
  IsoReport report;
  if (sc.num_labels() != ring.size()) {
    report.mismatch = {0, 0,
                       "label count " + std::to_string(sc.num_labels()) +
                           " != basis size " + std::to_string(ring.size())};
    return report;
  }
  std::vector<std::uint32_t> corr(sc.num_labels());
  for (LabelId i = 0; i < sc.num_labels(); ++i) {
    const auto it = std::find(ring.basis.begin(), ring.basis.end(), sc.labels[i]);
    if (it == ring.basis.end()) {
      report.mismatch = {i, 0, "label '" + sc.labels[i] + "' names no basis element"};
      return report;
    }
    corr[i] = static_cast<std::uint32_t>(it - ring.basis.begin());
  }
  return table_isomorphic(sc, ring, corr);
}

}  // namespace schemoid
