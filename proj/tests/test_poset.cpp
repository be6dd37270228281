#include <doctest.h>

#include "schemoid/generators.hpp"
#include "schemoid/poset.hpp"
#include "test_util.hpp"

using namespace schemoid;

TEST_CASE("from_relation: one element, covers of a square, bad input") {
  const auto single = FinitePoset::from_relation({"a"}, {}, RelationMode::Covers);
  CHECK(single.size() == 1);
  CHECK(single.leq(0, 0));

  // covers of 2^[2]: four cover pairs close to nine related pairs
  const auto square = FinitePoset::from_relation(
      {"{}", "{1}", "{2}", "{1,2}"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, RelationMode::Covers);
  CHECK(square.relation_size() == 9);
  CHECK(square.leq(0, 3));

  CHECK_ERROR_KIND(FinitePoset::from_relation({"a", "b"}, {{0, 1}, {1, 0}}, RelationMode::Full),
                   ErrorKind::NotAntisymmetric);
  CHECK_ERROR_KIND(FinitePoset::from_relation({"a", "b"}, {{0, 1}, {1, 0}}, RelationMode::Covers),
                   ErrorKind::CycleDetected);
  CHECK_ERROR_KIND(
      FinitePoset::from_relation({"a", "b", "c"}, {{0, 1}, {1, 2}}, RelationMode::Full),
      ErrorKind::NotTransitive);
  CHECK_ERROR_KIND(FinitePoset::from_relation({"a", "a"}, {}, RelationMode::Covers),
                   ErrorKind::BadInput);
}

TEST_CASE("interval") {
  const auto b3 = boolean_lattice(3);
  const ElemId bot = *b3.index_of("{}");
  CHECK(b3.interval(bot, bot) == std::vector<ElemId>{bot});
  const auto iv = b3.interval(bot, *b3.index_of("{1,2}"));
  CHECK(iv.size() == 4);
  CHECK(std::find(iv.begin(), iv.end(), *b3.index_of("{1}")) != iv.end());
  CHECK(std::find(iv.begin(), iv.end(), *b3.index_of("{2}")) != iv.end());
  CHECK_ERROR_KIND(b3.interval(*b3.index_of("{1}"), *b3.index_of("{2}")),
                   ErrorKind::NotComparable);

  // bottom-to-top interval of the weak order on S_3 is everything
  const auto s3 = bruhat_order(3);
  CHECK(s3.interval(*s3.index_of("123"), *s3.index_of("321")).size() == 6);
}

TEST_CASE("join") {
  const auto b2 = boolean_lattice(2);
  const ElemId x = *b2.index_of("{1}"), y = *b2.index_of("{2}");
  CHECK(*b2.join(x, x) == x);
  CHECK(*b2.join(x, y) == *b2.index_of("{1,2}"));

  const auto tops = testutil::two_tops_poset();
  CHECK_ERROR_KIND(tops.join(*tops.index_of("a"), *tops.index_of("b")),
                   ErrorKind::AmbiguousJoin);
  // no upper bound at all: two incomparable maximal elements
  const auto vee =
      FinitePoset::from_relation({"a", "b", "c"}, {{0, 1}, {0, 2}}, RelationMode::Covers);
  CHECK(!vee.join(1, 2).has_value());
}

TEST_CASE("rank_function") {
  const auto chain = chain_product({3});
  const auto rank = chain.rank_from(0);
  REQUIRE(rank.has_value());
  CHECK(*rank == std::vector<int>{0, 1, 2});

  const auto b3 = boolean_lattice(3);
  const auto brank = b3.rank_from(*b3.index_of("{}"));
  REQUIRE(brank.has_value());
  for (ElemId e = 0; e < b3.size(); ++e)
    CHECK((*brank)[e] == static_cast<int>(parse_set_name(b3.name(e))->size()));

  // two maximal chains of different lengths to the same top: not graded
  const auto broken = FinitePoset::from_relation(
      {"bot", "a", "b", "c", "top"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
      RelationMode::Covers);
  CHECK(!broken.rank_from(0).has_value());

  CHECK_ERROR_KIND(b3.rank_from(*b3.index_of("{1}")), ErrorKind::NoMinimum);
}

TEST_CASE("boolean_lattice: axioms and relation size 3^n") {
  CHECK(boolean_lattice(0).size() == 1);
  std::size_t expect = 1;
  for (int n = 0; n <= 6; ++n) {
    CHECK(boolean_lattice(n).relation_size() == expect);
    expect *= 3;
  }
  CHECK_ERROR_KIND(boolean_lattice(11), ErrorKind::SizeCap);
}

TEST_CASE("chain_product") {
  const auto p = chain_product({3, 2});
  CHECK(p.size() == 6);
  CHECK(p.leq(*p.index_of("(0,0)"), *p.index_of("(2,1)")));
  CHECK(!p.leq(*p.index_of("(1,0)"), *p.index_of("(0,1)")));
  const auto pre = check_tilde_preconditions(p);
  CHECK(pre.passed());
  CHECK_ERROR_KIND(chain_product({0}), ErrorKind::BadInput);
}

TEST_CASE("subspace_lattice") {
  const auto s2 = subspace_lattice(2);
  CHECK(s2.size() == 5);  // 0, three lines, the plane
  CHECK(subspace_lattice(3).size() == 16);
  CHECK(subspace_lattice(4).size() == 67);
  CHECK_ERROR_KIND(subspace_lattice(5), ErrorKind::SizeCap);
  CHECK_ERROR_KIND(subspace_lattice(2, 3), ErrorKind::BadInput);

  // graded by dimension, rank subadditive on all joinable pairs
  const auto pre = check_tilde_preconditions(subspace_lattice(3));
  CHECK(pre.passed());
  const auto rp = RankedPoset::make(subspace_lattice(3));
  const auto subs = gf2_subspaces(3);
  for (ElemId e = 0; e < rp.base.size(); ++e) CHECK(rp.rank[e] == subs[e].dim());
}

TEST_CASE("bruhat_order: weak order on S_3 and S_4") {
  const auto s3 = bruhat_order(3);
  CHECK(s3.size() == 6);
  CHECK(*s3.minimum() == *s3.index_of("123"));

  // two atoms: the simple reflections
  std::size_t atoms = 0;
  for (const auto& [x, y] : s3.cover_pairs())
    if (x == *s3.minimum()) ++atoms;
  CHECK(atoms == 2);

  // maximum is the reversal, of length 3
  const ElemId w0 = *s3.index_of("321");
  for (ElemId e = 0; e < s3.size(); ++e) CHECK(s3.leq(e, w0));

  for (int n = 2; n <= 4; ++n) {
    const auto p = bruhat_order(n);
    const auto elems = symmetric_group(n);
    // rank = inversion count
    const auto rank = p.rank_from(*p.minimum());
    REQUIRE(rank.has_value());
    for (ElemId e = 0; e < p.size(); ++e) CHECK((*rank)[e] == elems[e].length());
    // independent characterization of the weak order:
    // u <= v iff length(v) = length(u) + length(v * u^-1)
    for (ElemId u = 0; u < p.size(); ++u)
      for (ElemId v = 0; v < p.size(); ++v) {
        const bool expected =
            elems[v].length() == elems[u].length() + (elems[v] * elems[u].inverse()).length();
        CHECK(p.leq(u, v) == expected);
      }
  }
  CHECK_ERROR_KIND(bruhat_order(5), ErrorKind::SizeCap);
}

TEST_CASE("face_poset and uniform_matroid_flats") {
  const auto fp = face_poset(testutil::hollow_triangle());
  CHECK(fp.size() == 7);  // no 2-face
  CHECK(!fp.index_of("{1,2,3}").has_value());
  CHECK(fp.leq(*fp.index_of("{}"), *fp.index_of("{1,2}")));

  const auto um = uniform_matroid_flats(2, 4);
  CHECK(um.size() == 6);  // empty set, four points, the full set
  CHECK(um.index_of("{1,2,3,4}").has_value());
  CHECK(!um.index_of("{1,2}").has_value());
  CHECK(check_tilde_preconditions(um).passed());
  CHECK_ERROR_KIND(uniform_matroid_flats(0, 3), ErrorKind::SizeCap);
}

TEST_CASE("check_tilde_preconditions") {
  CHECK(check_tilde_preconditions(boolean_lattice(3)).passed());
  CHECK(check_tilde_preconditions(chain_product({3, 2})).passed());

  const auto tops = testutil::two_tops_poset();
  const auto r = check_tilde_preconditions(tops);
  CHECK(!r.passed());
  CHECK(!r.unique_joins);
  REQUIRE(r.join_witness.has_value());
  // the witness pair really has two minimal upper bounds
  const auto mins = tops.minimal_of(tops.upper_bounds(r.join_witness->first,
                                                      r.join_witness->second));
  CHECK(mins.size() >= 2);
}
