#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemoid/algebra.hpp"
#include "schemoid/category.hpp"
#include "schemoid/errors.hpp"
#include "schemoid/generators.hpp"
#include "schemoid/poset.hpp"
#include "schemoid/schemoid.hpp"

namespace schemoid {

using json = nlohmann::json;

namespace detail {

inline std::uint32_t index_from(const json& v, const std::vector<std::string>& names,
                                const char* what) {
  if (v.is_number_unsigned() || v.is_number_integer()) {
    const std::int64_t i = v.get<std::int64_t>();
    if (i < 0 || i >= static_cast<std::int64_t>(names.size()))
      throw Error(ErrorKind::BadInput, std::string(what) + " index out of range");
    return static_cast<std::uint32_t>(i);
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<std::uint32_t>(i);
    throw Error(ErrorKind::BadInput, std::string(what) + " '" + s + "' not found");
  }
  throw Error(ErrorKind::BadInput, std::string(what) + " must be an index or a name");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Posets
// ---------------------------------------------------------------------------

inline json poset_to_json(const FinitePoset& p) {
  json j;
  j["elements"] = p.names();
  j["mode"] = "covers";
  json pairs = json::array();
  for (const auto& [a, b] : p.cover_pairs()) pairs.push_back({a, b});
  j["pairs"] = std::move(pairs);
  return j;
}

inline FinitePoset poset_from_json(const json& j) {
  if (!j.contains("elements") || !j["elements"].is_array())
    throw Error(ErrorKind::BadInput, "poset file needs an 'elements' array");
  std::vector<std::string> names = j["elements"].get<std::vector<std::string>>();
  const std::string mode = j.value("mode", "covers");
  if (mode != "covers" && mode != "full")
    throw Error(ErrorKind::BadInput, "poset mode must be 'covers' or 'full'");
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (const auto& e : j.value("pairs", json::array())) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorKind::BadInput, "poset pair must be [a, b]");
    pairs.emplace_back(detail::index_from(e[0], names, "element"),
                       detail::index_from(e[1], names, "element"));
  }
  return FinitePoset::from_relation(std::move(names), pairs,
                                    mode == "covers" ? RelationMode::Covers
                                                     : RelationMode::Full);
}

inline json complex_to_json(const SimplicialComplex& c) {
  json j;
  j["vertices"] = c.vertices;
  json facets = json::array();
  for (auto f : c.facets) {
    json one = json::array();
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      if (f >> i & 1u) one.push_back(i);
    facets.push_back(std::move(one));
  }
  j["facets"] = std::move(facets);
  return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
  SimplicialComplex c;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorKind::BadInput, "complex file needs a 'vertices' array");
  c.vertices = j["vertices"].get<std::vector<std::string>>();
  for (const auto& facet : j.value("facets", json::array())) {
    std::uint32_t mask = 0;
    for (const auto& v : facet) mask |= 1u << detail::index_from(v, c.vertices, "vertex");
    c.facets.push_back(mask);
  }
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------
// Categories, labelings, instances
// ---------------------------------------------------------------------------

inline json category_to_json(const FiniteCategory& c) {
  json j;
  j["objects"] = c.object_names();
  json mors = json::array();
  for (MorphismId m = 0; m < c.num_morphisms(); ++m)
    mors.push_back({{"name", c.name(m)}, {"src", c.src(m)}, {"tgt", c.tgt(m)}});
  j["morphisms"] = std::move(mors);
  json comp = json::array();
  for (MorphismId g = 0; g < c.num_morphisms(); ++g)
    for (MorphismId f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f)) comp.push_back({g, f, c.compose_or_none(g, f)});
  j["comp"] = std::move(comp);
  j["identities"] = c.identities();
  return j;
}

inline FiniteCategory category_from_json(const json& j) {
  if (!j.contains("objects") || !j.contains("morphisms"))
    throw Error(ErrorKind::BadInput, "category file needs 'objects' and 'morphisms'");
  std::vector<std::string> objects = j["objects"].get<std::vector<std::string>>();
  std::vector<MorphismData> mors;
  for (const auto& m : j["morphisms"]) {
    MorphismData d;
    d.name = m.value("name", "m" + std::to_string(mors.size()));
    d.src = detail::index_from(m.at("src"), objects, "object");
    d.tgt = detail::index_from(m.at("tgt"), objects, "object");
    mors.push_back(std::move(d));
  }
  std::vector<std::array<MorphismId, 3>> entries;
  for (const auto& e : j.value("comp", json::array())) {
    if (!e.is_array() || e.size() != 3)
      throw Error(ErrorKind::BadInput, "comp entry must be [g, f, h]");
    entries.push_back({e[0].get<MorphismId>(), e[1].get<MorphismId>(), e[2].get<MorphismId>()});
  }
  std::optional<std::vector<MorphismId>> ids;
  if (j.contains("identities")) ids = j["identities"].get<std::vector<MorphismId>>();
  return FiniteCategory::build(std::move(objects), std::move(mors), entries, std::move(ids));
}

inline json labeling_to_json(const Labeling& l) {
  return json{{"labels", l.labels}, {"assign", l.assign}};
}

inline Labeling labeling_from_json(const json& j) {
  Labeling l;
  if (!j.contains("labels") || !j.contains("assign"))
    throw Error(ErrorKind::BadInput, "labeling needs 'labels' and 'assign'");
  l.labels = j["labels"].get<std::vector<std::string>>();
  l.assign = j["assign"].get<std::vector<LabelId>>();
  return l;
}

inline json instance_to_json(const SchemoidInstance& inst) {
  return json{{"category", category_to_json(inst.category)},
              {"labeling", labeling_to_json(inst.labeling)}};
}

inline SchemoidInstance instance_from_json(const json& j) {
  if (!j.contains("category") || !j.contains("labeling"))
    throw Error(ErrorKind::BadInput, "instance file needs 'category' and 'labeling'");
  return SchemoidInstance(category_from_json(j["category"]),
                          labeling_from_json(j["labeling"]));
}

// ---------------------------------------------------------------------------
// Partitions and difference-operation candidates
// ---------------------------------------------------------------------------

inline RelationPartition partition_from_json(const json& j) {
  if (!j.contains("elements") || !j.contains("blocks"))
    throw Error(ErrorKind::BadInput, "partition file needs 'elements' and 'blocks'");
  std::vector<std::string> elements = j["elements"].get<std::vector<std::string>>();
  std::vector<std::vector<std::pair<ElemId, ElemId>>> blocks;
  for (const auto& block : j["blocks"]) {
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (const auto& e : block) {
      if (!e.is_array() || e.size() != 2)
        throw Error(ErrorKind::BadInput, "partition pair must be [x, y]");
      pairs.emplace_back(detail::index_from(e[0], elements, "element"),
                         detail::index_from(e[1], elements, "element"));
    }
    blocks.push_back(std::move(pairs));
  }
  std::vector<std::string> block_names;
  if (j.contains("block_names")) block_names = j["block_names"].get<std::vector<std::string>>();
  return RelationPartition::from_blocks(std::move(elements), blocks, std::move(block_names));
}

inline json delta_to_json(const FinitePoset& p, const DifferenceOpCandidate& cand) {
  json j;
  j["base"] = p.name(cand.base);
  json entries = json::array();
  for (ElemId y = 0; y < p.size(); ++y)
    for (ElemId x = 0; x < p.size(); ++x)
      if (p.leq(x, y))
        entries.push_back({p.name(y), p.name(x), p.name(cand.delta_of(y, x, p.size()))});
  j["entries"] = std::move(entries);
  return j;
}

inline DifferenceOpCandidate delta_from_json(const FinitePoset& p, const json& j) {
  if (!j.contains("base") || !j.contains("entries"))
    throw Error(ErrorKind::BadInput, "delta file needs 'base' and 'entries'");
  const ElemId base = detail::index_from(j["base"], p.names(), "element");
  auto cand = DifferenceOpCandidate::empty(p.size(), base);
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3)
      throw Error(ErrorKind::BadInput, "delta entry must be [upper, lower, value]");
    const ElemId y = detail::index_from(e[0], p.names(), "element");
    const ElemId x = detail::index_from(e[1], p.names(), "element");
    const ElemId v = detail::index_from(e[2], p.names(), "element");
    if (!p.leq(x, y))
      throw Error(ErrorKind::BadInput,
                  "delta entry on non-comparable pair ('" + p.name(y) + "', '" +
                      p.name(x) + "')");
    cand.set(y, x, v, p.size());
  }
  return cand;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json schemoid_report_to_json(const SchemoidInstance& inst, const SchemoidReport& r) {
  json j;
  j["ok"] = r.ok;
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"i", inst.labeling.labels[w.i]},
                    {"j", inst.labeling.labels[w.j]},
                    {"h", inst.category.name(w.h)},
                    {"k", inst.category.name(w.k)},
                    {"count_h", w.count_h},
                    {"count_k", w.count_k}};
  }
  return j;
}

inline json diffop_report_to_json(const FinitePoset& p, const DiffOpReport& r) {
  json j;
  j["ok"] = r.ok;
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"interval", {p.name(w.x), p.name(w.y)}},
                    {"left_size", w.left_size},
                    {"right_size", w.right_size},
                    {"matched", w.matched}};
  }
  return j;
}

inline json scheme_report_to_json(const RelationPartition& part, const SchemeReport& r) {
  json j;
  j["ok"] = r.passed();
  j["diagonal_ok"] = r.diagonal_ok;
  j["transpose_ok"] = r.transpose_ok;
  j["constants_ok"] = r.constants_ok;
  if (r.diagonal_witness)
    j["diagonal_witness"] = {part.elements[(*r.diagonal_witness)[0]],
                             part.elements[(*r.diagonal_witness)[1]]};
  if (r.transpose_witness) j["transpose_witness"] = part.block_names[*r.transpose_witness];
  if (r.constants_witness) {
    const auto& w = *r.constants_witness;
    j["constants_witness"] = {{"i", part.block_names[w[0]]},
                              {"j", part.block_names[w[1]]},
                              {"x", part.elements[w[2]]},
                              {"z", part.elements[w[3]]}};
  }
  return j;
}

inline json tilde_report_to_json(const FinitePoset& p, const TildePreconditionReport& r) {
  json j;
  j["ok"] = r.passed();
  j["unique_joins"] = r.unique_joins;
  j["has_minimum"] = r.has_minimum;
  j["graded"] = r.graded;
  j["rank_subadditive"] = r.rank_subadditive;
  if (r.join_witness)
    j["join_witness"] = {p.name(r.join_witness->first), p.name(r.join_witness->second)};
  if (r.subadd_witness)
    j["subadd_witness"] = {p.name(r.subadd_witness->first), p.name(r.subadd_witness->second)};
  return j;
}

inline json lemma_report_to_json(const SchemoidInstance& inst, const LemmaReport& r) {
  json j;
  j["status"] = r.status == LemmaStatus::Pass          ? "pass"
                : r.status == LemmaStatus::Fail        ? "fail"
                                                       : "inconclusive";
  j["pairs_checked"] = r.pairs_checked;
  j["cap_hits"] = r.cap_hits;
  if (r.witness)
    j["witness"] = {inst.category.name(r.witness->first), inst.category.name(r.witness->second)};
  return j;
}

inline json iso_report_to_json(const StructureConstants& sc, const RingTable& ring,
                               const IsoReport& r) {
  json j;
  j["ok"] = r.ok;
  if (!r.correspondence.empty()) {
    json corr = json::object();
    for (LabelId i = 0; i < r.correspondence.size(); ++i)
      corr[sc.labels[i]] = ring.basis[r.correspondence[i]];
    j["correspondence"] = std::move(corr);
  }
  if (r.mismatch)
    j["mismatch"] = {{"i", sc.labels[r.mismatch->i]},
                     {"j", sc.labels[r.mismatch->j]},
                     {"detail", r.mismatch->detail}};
  return j;
}

// ---------------------------------------------------------------------------
// Structure-constant and ring-table dumps
// ---------------------------------------------------------------------------

inline json sc_to_json(const StructureConstants& sc) {
  json j;
  j["labels"] = sc.labels;
  json rows = json::array();
  const LabelId L = sc.num_labels();
  for (LabelId i = 0; i < L; ++i)
    for (LabelId j2 = 0; j2 < L; ++j2)
      for (LabelId k = 0; k < L; ++k)
        if (sc.at(i, j2, k) != 0) rows.push_back({i, j2, k, sc.at(i, j2, k)});
  j["p"] = std::move(rows);
  return j;
}

inline StructureConstants sc_from_json(const json& j) {
  StructureConstants sc;
  if (!j.contains("labels") || !j.contains("p"))
    throw Error(ErrorKind::BadInput, "structure-constant file needs 'labels' and 'p'");
  sc.labels = j["labels"].get<std::vector<std::string>>();
  const std::size_t L = sc.labels.size();
  sc.p.assign(L * L * L, 0);
  for (const auto& row : j["p"]) {
    if (!row.is_array() || row.size() != 4)
      throw Error(ErrorKind::BadInput, "p entry must be [i, j, k, value]");
    const LabelId i = row[0].get<LabelId>(), j2 = row[1].get<LabelId>(),
                  k = row[2].get<LabelId>();
    if (i >= L || j2 >= L || k >= L)
      throw Error(ErrorKind::BadInput, "p entry index out of range");
    sc.at(i, j2, k) = row[3].get<std::int64_t>();
  }
  return sc;
}

inline std::string sc_to_csv(const StructureConstants& sc) {
  std::ostringstream out;
  out << "i,j,k,value\n";
  const LabelId L = sc.num_labels();
  for (LabelId i = 0; i < L; ++i)
    for (LabelId j = 0; j < L; ++j)
      for (LabelId k = 0; k < L; ++k)
        if (sc.at(i, j, k) != 0)
          out << i << ',' << j << ',' << k << ',' << sc.at(i, j, k) << '\n';
  return out.str();
}

inline json ring_to_json(const RingTable& r) {
  json j;
  j["basis"] = r.basis;
  if (r.unit)
    j["unit"] = *r.unit;
  else
    j["unit"] = nullptr;
  json rows = json::array();
  for (std::uint32_t a = 0; a < r.size(); ++a)
    for (std::uint32_t b = 0; b < r.size(); ++b)
      if (r.at(a, b) != RingTable::kZeroProduct) rows.push_back({a, b, r.at(a, b)});
  j["mul"] = std::move(rows);
  return j;
}

inline std::string ring_to_csv(const RingTable& r) {
  std::ostringstream out;
  out << "i,j,k\n";
  for (std::uint32_t a = 0; a < r.size(); ++a)
    for (std::uint32_t b = 0; b < r.size(); ++b)
      if (r.at(a, b) != RingTable::kZeroProduct)
        out << a << ',' << b << ',' << r.at(a, b) << '\n';
  return out.str();
}

}  // namespace schemoid
