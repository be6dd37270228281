#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "schemoid/errors.hpp"
#include "schemoid/poset.hpp"

namespace schemoid {

// ---------------------------------------------------------------------------
// Canonical element names. Set-like elements are printed "{a,b,c}" with
// tokens sorted numerically when they all parse as integers, else
// lexicographically; permutations are printed in one-line notation ("2134").
// The difference-operation builders parse these names back, so generators
// and ring constructors must share them.
// ---------------------------------------------------------------------------

inline void sort_tokens(std::vector<std::string>& tokens) {
  bool all_int = !tokens.empty();
  for (const auto& t : tokens) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
      all_int = false;
      break;
    }
  }
  if (all_int)
    std::sort(tokens.begin(), tokens.end(), [](const std::string& a, const std::string& b) {
      return std::stol(a) != std::stol(b) ? std::stol(a) < std::stol(b) : a < b;
    });
  else
    std::sort(tokens.begin(), tokens.end());
}

inline std::string set_name(std::vector<std::string> tokens) {
  sort_tokens(tokens);
  std::string s = "{";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) s += ",";
    s += tokens[i];
  }
  return s + "}";
}

inline std::optional<std::vector<std::string>> parse_set_name(const std::string& name) {
  if (name.size() < 2 || name.front() != '{' || name.back() != '}') return std::nullopt;
  std::vector<std::string> tokens;
  std::string body = name.substr(1, name.size() - 2);
  if (body.empty()) return tokens;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) return std::nullopt;
    tokens.push_back(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return tokens;
}

/// Name of the subset of {1..n} encoded by `mask` (bit i-1 <-> element i).
inline std::string subset_name(std::uint32_t mask) {
  std::vector<std::string> tokens;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) tokens.push_back(std::to_string(i + 1));
  return set_name(std::move(tokens));
}

// ---------------------------------------------------------------------------
// Permutations (type A only). The product is function composition:
// (u * v)(m) = u(v(m)).
// ---------------------------------------------------------------------------

struct Permutation {
  std::vector<int> line;  // one-line notation, values 1..n

  static Permutation identity(int n) {
    Permutation p;
    p.line.resize(n);
    std::iota(p.line.begin(), p.line.end(), 1);
    return p;
  }

  int n() const { return static_cast<int>(line.size()); }
  int apply(int m) const { return line[m - 1]; }

  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    Permutation w;
    w.line.resize(u.line.size());
    for (std::size_t m = 0; m < u.line.size(); ++m) w.line[m] = u.line[v.line[m] - 1];
    return w;
  }

  Permutation inverse() const {
    Permutation w;
    w.line.resize(line.size());
    for (std::size_t m = 0; m < line.size(); ++m) w.line[line[m] - 1] = static_cast<int>(m + 1);
    return w;
  }

  /// Coxeter length = inversion count.
  int length() const {
    int c = 0;
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        if (line[i] > line[j]) ++c;
    return c;
  }

  std::string name() const {
    std::string s;
    for (int v : line) s += static_cast<char>('0' + v);
    return s;
  }

  static std::optional<Permutation> parse(const std::string& name) {
    Permutation p;
    std::vector<bool> seen(name.size(), false);
    for (char c : name) {
      int v = c - '0';
      if (v < 1 || v > static_cast<int>(name.size()) || seen[v - 1]) return std::nullopt;
      seen[v - 1] = true;
      p.line.push_back(v);
    }
    if (p.line.empty()) return std::nullopt;
    return p;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.line == b.line;
  }
};

/// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.line.begin(), p.line.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial complexes (vertex subsets as bitmasks over the vertex list).
// ---------------------------------------------------------------------------

struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<std::uint32_t> facets;

  void validate() const {
    if (vertices.size() > 31)
      throw Error(ErrorKind::SizeCap, "at most 31 vertices supported");
    for (const auto& v : vertices)
      if (v.empty() || v.find_first_of("{},") != std::string::npos)
        throw Error(ErrorKind::BadInput, "vertex name '" + v + "' is empty or contains {},");
    for (auto f : facets)
      if (f >> vertices.size())
        throw Error(ErrorKind::BadInput, "facet refers to a vertex out of range");
  }

  /// All faces (downward closure of the facets, always including the empty
  /// face), sorted by (cardinality, mask).
  std::vector<std::uint32_t> faces() const {
    std::vector<std::uint32_t> out;
    std::vector<bool> seen(std::size_t{1} << vertices.size(), false);
    seen[0] = true;
    out.push_back(0);
    for (std::uint32_t facet : facets) {
      // enumerate submasks
      std::uint32_t sub = facet;
      while (true) {
        if (!seen[sub]) {
          seen[sub] = true;
          out.push_back(sub);
        }
        if (sub == 0) break;
        sub = (sub - 1) & facet;
      }
    }
    std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    return out;
  }

  std::string face_name(std::uint32_t mask) const {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (mask >> i & 1u) tokens.push_back(vertices[i]);
    return set_name(std::move(tokens));
  }
};

// ---------------------------------------------------------------------------
// GF(2) subspaces via reduced-row-echelon forms.
// ---------------------------------------------------------------------------

struct Gf2Subspace {
  std::vector<std::uint32_t> rows;  // RREF basis rows, bit i = coordinate i+1
  std::uint32_t members = 1;        // bitset over vector indices 0..2^n-1 (bit 0 = zero vector)

  int dim() const { return static_cast<int>(rows.size()); }

  std::string name(int n) const {
    if (rows.empty()) return "<>";
    std::string s = "<";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) s += ",";
      for (int b = 0; b < n; ++b) s += (rows[i] >> b & 1u) ? '1' : '0';
    }
    return s + ">";
  }
};

/// All subspaces of GF(2)^n, enumerated by reduced-row-echelon basis
/// matrices, sorted by (dimension, row tuple). n <= 4.
inline std::vector<Gf2Subspace> gf2_subspaces(int n) {
  if (n < 0 || n > 4) throw Error(ErrorKind::SizeCap, "subspace enumeration needs 0 <= n <= 4");
  std::vector<Gf2Subspace> out;
  for (int k = 0; k <= n; ++k) {
    // choose pivot columns
    std::vector<int> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
      // free positions: row i, column j with j > pivots[i] and j not a pivot
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < k; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
            free_pos.emplace_back(i, j);
      for (std::uint32_t bits = 0; bits < (1u << free_pos.size()); ++bits) {
        Gf2Subspace s;
        s.rows.assign(k, 0);
        for (int i = 0; i < k; ++i) s.rows[i] |= 1u << pivots[i];
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          if (bits >> t & 1u) s.rows[free_pos[t].first] |= 1u << free_pos[t].second;
        // membership bitset: all row combinations
        s.members = 0;
        for (std::uint32_t combo = 0; combo < (1u << k); ++combo) {
          std::uint32_t v = 0;
          for (int i = 0; i < k; ++i)
            if (combo >> i & 1u) v ^= s.rows[i];
          s.members |= 1u << v;
        }
        out.push_back(std::move(s));
      }
      // next pivot combination
      int i = k - 1;
      while (i >= 0 && pivots[i] == n - k + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const Gf2Subspace& a, const Gf2Subspace& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a.rows < b.rows;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Poset generators.
// ---------------------------------------------------------------------------

/// Subsets of {1..n} ordered by inclusion, in mask order.
inline FinitePoset boolean_lattice(int n) {
  if (n < 0 || n > 10) throw Error(ErrorKind::SizeCap, "boolean_lattice needs 0 <= n <= 10");
  const std::uint32_t size = 1u << n;
  std::vector<std::string> names(size);
  for (std::uint32_t m = 0; m < size; ++m) names[m] = subset_name(m);
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y)
      if ((x & y) == x) pairs.emplace_back(x, y);
  return FinitePoset::from_leq(std::move(names), pairs);
}

/// Product of chains {0..l_1-1} x ... x {0..l_k-1}, componentwise order,
/// elements in lexicographic tuple order.
inline FinitePoset chain_product(const std::vector<int>& lengths) {
  std::size_t total = 1;
  for (int l : lengths) {
    if (l <= 0) throw Error(ErrorKind::BadInput, "chain lengths must be positive");
    total *= static_cast<std::size_t>(l);
    if (total > 4096) throw Error(ErrorKind::SizeCap, "chain product too large");
  }
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(lengths.size(), 0);
  while (true) {
    tuples.push_back(cur);
    int i = static_cast<int>(lengths.size()) - 1;
    while (i >= 0 && cur[i] == lengths[i] - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  std::vector<std::string> names;
  for (const auto& t : tuples) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t[i]);
    }
    names.push_back(s + ")");
  }
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      bool le = true;
      for (std::size_t i = 0; i < lengths.size() && le; ++i) le = tuples[a][i] <= tuples[b][i];
      if (le) pairs.emplace_back(static_cast<ElemId>(a), static_cast<ElemId>(b));
    }
  return FinitePoset::from_leq(std::move(names), pairs);
}

/// Subspaces of GF(2)^n ordered by inclusion. Only q = 2 is supported.
inline FinitePoset subspace_lattice(int n, int q = 2) {
  if (q != 2) throw Error(ErrorKind::BadInput, "only q = 2 is supported");
  const auto subs = gf2_subspaces(n);
  std::vector<std::string> names;
  for (const auto& s : subs) names.push_back(s.name(n));
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < subs.size(); ++b)
      if ((subs[a].members & subs[b].members) == subs[a].members)
        pairs.emplace_back(static_cast<ElemId>(a), static_cast<ElemId>(b));
  return FinitePoset::from_leq(std::move(names), pairs);
}

/// Face poset of a simplicial complex (including the empty face).
inline FinitePoset face_poset(const SimplicialComplex& complex) {
  complex.validate();
  const auto faces = complex.faces();
  std::vector<std::string> names;
  for (auto f : faces) names.push_back(complex.face_name(f));
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = 0; b < faces.size(); ++b)
      if ((faces[a] & faces[b]) == faces[a]) pairs.emplace_back(static_cast<ElemId>(a), static_cast<ElemId>(b));
  return FinitePoset::from_leq(std::move(names), pairs);
}

/// The weak (Bruhat) order on S_n: reflexive-transitive closure of
/// u < t*u for simple transpositions t = (i,i+1) with length(t*u) =
/// length(u) + 1. Elements in lexicographic one-line order.
inline FinitePoset bruhat_order(int n) {
  if (n < 1 || n > 4) throw Error(ErrorKind::SizeCap, "bruhat_order needs 1 <= n <= 4");
  const auto elems = symmetric_group(n);
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(p.name());
  auto index_of = [&](const Permutation& p) -> ElemId {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == p) return static_cast<ElemId>(i);
    throw Error(ErrorKind::BadInput, "permutation not found");
  };
  std::vector<std::pair<ElemId, ElemId>> covers;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int a = 1; a < n; ++a) {
      Permutation t = Permutation::identity(n);
      std::swap(t.line[a - 1], t.line[a]);
      const Permutation w = t * elems[i];
      if (w.length() == elems[i].length() + 1)
        covers.emplace_back(static_cast<ElemId>(i), index_of(w));
    }
  return FinitePoset::from_relation(std::move(names), covers, RelationMode::Covers);
}

/// Flats of the uniform matroid U_{k,n}: all subsets of {1..n} of size < k,
/// plus the full set, ordered by inclusion.
inline FinitePoset uniform_matroid_flats(int k, int n) {
  if (k <= 0 || k > n || n > 10)
    throw Error(ErrorKind::SizeCap, "uniform_matroid_flats needs 0 < k <= n <= 10");
  std::vector<std::uint32_t> flats;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t m = 0; m <= full; ++m)
    if (std::popcount(m) < k) flats.push_back(m);
  if (std::popcount(full) >= k) flats.push_back(full);
  std::sort(flats.begin(), flats.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> names;
  for (auto f : flats) names.push_back(subset_name(f));
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (std::size_t a = 0; a < flats.size(); ++a)
    for (std::size_t b = 0; b < flats.size(); ++b)
      if ((flats[a] & flats[b]) == flats[a]) pairs.emplace_back(static_cast<ElemId>(a), static_cast<ElemId>(b));
  return FinitePoset::from_leq(std::move(names), pairs);
}

}  // namespace schemoid
