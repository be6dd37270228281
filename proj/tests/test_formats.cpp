#include <doctest.h>

#include "schemoid/json_io.hpp"
#include "test_util.hpp"

using namespace schemoid;

TEST_CASE("poset json round trip and determinism") {
  for (const auto& p : {boolean_lattice(2), bruhat_order(3), chain_product({3, 2})}) {
    const json j = poset_to_json(p);
    CHECK(j.dump() == poset_to_json(p).dump());  // byte-identical dumps
    const auto q = poset_from_json(j);
    REQUIRE(q.size() == p.size());
    CHECK(q.names() == p.names());
    for (ElemId x = 0; x < p.size(); ++x)
      for (ElemId y = 0; y < p.size(); ++y) CHECK(q.leq(x, y) == p.leq(x, y));
  }
}

TEST_CASE("poset json accepts names or indices and rejects junk") {
  const json by_name = {{"elements", {"a", "b"}},
                        {"mode", "covers"},
                        {"pairs", json::array({json::array({"a", "b"})})}};
  const auto p = poset_from_json(by_name);
  CHECK(p.leq(0, 1));
  CHECK_ERROR_KIND(poset_from_json(json{{"mode", "covers"}}), ErrorKind::BadInput);
  CHECK_ERROR_KIND(
      poset_from_json(json{{"elements", {"a"}}, {"mode", "weird"}, {"pairs", json::array()}}),
      ErrorKind::BadInput);
}

TEST_CASE("complex json round trip") {
  const auto tri = testutil::hollow_triangle();
  const auto back = complex_from_json(complex_to_json(tri));
  CHECK(back.vertices == tri.vertices);
  CHECK(back.facets == tri.facets);
  CHECK(back.faces() == tri.faces());
}

TEST_CASE("category and instance round trip through the validator") {
  const auto p = boolean_lattice(2);
  const auto inst = build_cp(p, set_difference_delta(p));
  const json j = instance_to_json(inst);
  const auto back = instance_from_json(j);
  CHECK(back.category.num_morphisms() == inst.category.num_morphisms());
  CHECK(back.labeling.labels == inst.labeling.labels);
  CHECK(back.labeling.assign == inst.labeling.assign);
  for (MorphismId g = 0; g < inst.category.num_morphisms(); ++g)
    for (MorphismId f = 0; f < inst.category.num_morphisms(); ++f)
      if (inst.category.composable(g, f))
        CHECK(back.category.compose(g, f) == inst.category.compose(g, f));
  CHECK(instance_to_json(back).dump() == j.dump());

  // identities are inferred by neutrality when the file omits them
  json no_ids = category_to_json(inst.category);
  no_ids.erase("identities");
  const auto inferred = category_from_json(no_ids);
  for (ObjectId x = 0; x < inst.category.num_objects(); ++x)
    CHECK(inferred.identity(x) == inst.category.identity(x));
}

TEST_CASE("delta json round trip") {
  const auto p = boolean_lattice(2);
  const auto cand = set_difference_delta(p);
  const auto back = delta_from_json(p, delta_to_json(p, cand));
  CHECK(back.base == cand.base);
  for (ElemId x = 0; x < p.size(); ++x)
    for (ElemId y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) CHECK(back.delta_of(y, x, p.size()) == cand.delta_of(y, x, p.size()));
  CHECK_ERROR_KIND(delta_from_json(p, json{{"base", "{}"}}), ErrorKind::BadInput);
}

TEST_CASE("partition json") {
  json j;
  j["elements"] = {"0", "1", "2"};
  j["blocks"] = json::array();
  json diag = json::array(), rest = json::array();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      (x == y ? diag : rest).push_back({x, y});
  j["blocks"].push_back(diag);
  j["blocks"].push_back(rest);
  const auto part = partition_from_json(j);
  CHECK(part.num_blocks() == 2);
  CHECK(verify_association_scheme(part).passed());
}

TEST_CASE("structure-constant dumps") {
  const auto p = boolean_lattice(2);
  const auto inst = build_cp(p, set_difference_delta(p));
  const auto sc = schemoid_algebra(inst);

  const json j = sc_to_json(sc);
  const auto back = sc_from_json(j);
  CHECK(back.labels == sc.labels);
  CHECK(back.p == sc.p);
  CHECK(sc_to_json(back).dump() == j.dump());

  const std::string csv = sc_to_csv(sc);
  CHECK(csv.rfind("i,j,k,value\n", 0) == 0);
  CHECK(csv == sc_to_csv(sc));

  // frozen dump for the two-element chain: labels ["{}", "{1}"],
  // identities x identities, and the two one-sided unit actions
  const auto p1 = boolean_lattice(1);
  const auto sc1 = schemoid_algebra(build_cp(p1, set_difference_delta(p1)));
  CHECK(sc_to_csv(sc1) == "i,j,k,value\n0,0,0,1\n0,1,1,1\n1,0,1,1\n");

  const auto ring = squarefree_quotient_ring(2);
  const json rj = ring_to_json(ring);
  CHECK(rj["basis"].size() == 4);
  CHECK(ring_to_csv(ring).rfind("i,j,k\n", 0) == 0);
}
