#include <doctest.h>

#include "schemoid/algebra.hpp"
#include "schemoid/generators.hpp"
#include "test_util.hpp"

using namespace schemoid;
using testutil::label_by_name;
using testutil::mor_by_name;

namespace {

SchemoidInstance boolean_cp(int n) {
  const auto p = boolean_lattice(n);
  return build_cp(p, set_difference_delta(p));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(1, 3).str() == "1/3");
}

TEST_CASE("algebra_product") {
  const auto inst = boolean_cp(2);
  const auto& c = inst.category;

  SUBCASE("the all-identities sum is the unit") {
    const auto unit = identity_sum(c);
    CHECK(algebra_product(c, unit, unit) == unit);
    for (MorphismId m = 0; m < c.num_morphisms(); ++m) {
      SparseVector v;
      v.add(m, Rational{1});
      CHECK(algebra_product(c, unit, v) == v);
      CHECK(algebra_product(c, v, unit) == v);
    }
  }

  SUBCASE("product of the two generator class sums") {
    const auto prod = algebra_product(c, class_sum(inst, label_by_name(inst, "{1}")),
                                      class_sum(inst, label_by_name(inst, "{2}")));
    REQUIRE(prod.terms.size() == 1);
    CHECK(prod.coeff(mor_by_name(c, "({1,2},{})")) == Rational{1});
  }

  SUBCASE("no composable pairs gives the zero vector") {
    SparseVector a, b;
    a.add(mor_by_name(c, "({1},{})"), Rational{1});
    b.add(mor_by_name(c, "({2},{})"), Rational{1});
    CHECK(algebra_product(c, a, b).terms.empty());
  }
}

TEST_CASE("schemoid_algebra") {
  SUBCASE("structure constants of the cube instance") {
    const auto inst = boolean_cp(3);
    const auto sc = schemoid_algebra(inst);
    const LabelId l1 = label_by_name(inst, "{1}");
    const LabelId l2 = label_by_name(inst, "{2}");
    const LabelId l12 = label_by_name(inst, "{1,2}");
    CHECK(sc.at(l1, l2, l12) == 1);
    for (LabelId k = 0; k < sc.num_labels(); ++k) {
      if (k != l12) CHECK(sc.at(l1, l2, k) == 0);
      CHECK(sc.at(l1, l1, k) == 0);  // mirrors x_1^2 = 0
    }
  }

  SUBCASE("structure constants of the running tilde example") {
    const auto inst = build_tilde(RankedPoset::make(chain_product({3, 2})));
    const auto sc = schemoid_algebra(inst);
    CHECK(sc.at(label_by_name(inst, "(1,0)"), label_by_name(inst, "(0,1)"),
                label_by_name(inst, "(1,1)")) == 1);
  }

  SUBCASE("a lumped labeling raises NotSchemoid matching the verifier witness") {
    const auto lumped = testutil::lumped_instance(boolean_cp(2).category);
    const auto report = verify_schemoid(lumped);
    REQUIRE(!report.ok);
    try {
      schemoid_algebra(lumped);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSchemoid);
      REQUIRE(e.witness().size() == 6);
      CHECK(e.witness()[0] == report.witness->i);
      CHECK(e.witness()[1] == report.witness->j);
      CHECK(e.witness()[2] == report.witness->h);
      CHECK(e.witness()[3] == report.witness->k);
    }
  }
}

TEST_CASE("closure_oracle and associativity_check") {
  const auto inst = boolean_cp(3);
  const auto sc = schemoid_algebra(inst);
  CHECK(closure_oracle(inst, sc));
  CHECK(associativity_check(sc));

  SUBCASE("hand-corrupted table fails both") {
    auto bad = sc;
    const LabelId l1 = label_by_name(inst, "{1}");
    const LabelId l2 = label_by_name(inst, "{2}");
    const LabelId l12 = label_by_name(inst, "{1,2}");
    bad.at(l1, l2, l12) += 1;
    CHECK(!closure_oracle(inst, bad));
    CHECK(!associativity_check(bad));
  }

  SUBCASE("the Z_3 scheme table reproduces the group multiplication") {
    const auto inst3 = partition_to_schemoid(testutil::z3_partition());
    const auto sc3 = schemoid_algebra(inst3);
    CHECK(closure_oracle(inst3, sc3));
    CHECK(associativity_check(sc3));
    for (LabelId i = 0; i < 3; ++i)
      for (LabelId j = 0; j < 3; ++j)
        for (LabelId k = 0; k < 3; ++k)
          CHECK(sc3.at(i, j, k) == ((i + j) % 3 == k ? 1 : 0));
  }
}

TEST_CASE("squarefree_quotient_ring") {
  const auto r = squarefree_quotient_ring(2);
  const auto idx = [&](const std::string& n) {
    return static_cast<std::uint32_t>(
        std::find(r.basis.begin(), r.basis.end(), n) - r.basis.begin());
  };
  CHECK(r.at(idx("{1}"), idx("{2}")) == idx("{1,2}"));
  CHECK(r.at(idx("{1}"), idx("{1}")) == RingTable::kZeroProduct);
  CHECK(r.at(idx("{}"), idx("{2}")) == idx("{2}"));
  CHECK(*r.unit == idx("{}"));
}

TEST_CASE("nilcoxeter_ring") {
  const auto r2 = nilcoxeter_ring(2);
  const auto i2 = [&](const std::string& n) {
    return static_cast<std::uint32_t>(
        std::find(r2.basis.begin(), r2.basis.end(), n) - r2.basis.begin());
  };
  CHECK(r2.at(i2("21"), i2("21")) == RingTable::kZeroProduct);
  CHECK(r2.at(i2("12"), i2("21")) == i2("21"));

  const auto r3 = nilcoxeter_ring(3);
  const auto i3 = [&](const std::string& n) {
    return static_cast<std::uint32_t>(
        std::find(r3.basis.begin(), r3.basis.end(), n) - r3.basis.begin());
  };
  // s1 * s2 = the 3-cycle of length 2
  const Permutation s1 = *Permutation::parse("213");
  const Permutation s2 = *Permutation::parse("132");
  CHECK((s1 * s2).length() == 2);
  CHECK(r3.at(i3("213"), i3("132")) == i3((s1 * s2).name()));
  for (std::uint32_t b = 0; b < r3.size(); ++b) CHECK(r3.at(*r3.unit, b) == b);

  // grading: a nonzero product has additive length, checked for n <= 4
  for (int n = 2; n <= 4; ++n) {
    const auto r = nilcoxeter_ring(n);
    const auto elems = symmetric_group(n);
    for (std::uint32_t a = 0; a < r.size(); ++a)
      for (std::uint32_t b = 0; b < r.size(); ++b) {
        const auto k = r.at(a, b);
        if (k == RingTable::kZeroProduct) {
          CHECK((elems[a] * elems[b]).length() != elems[a].length() + elems[b].length());
        } else {
          CHECK(elems[k] == elems[a] * elems[b]);
          CHECK(elems[k].length() == elems[a].length() + elems[b].length());
        }
      }
  }
  CHECK_ERROR_KIND(nilcoxeter_ring(5), ErrorKind::SizeCap);
}

TEST_CASE("stanley_reisner_sq_ring") {
  const auto tri = testutil::hollow_triangle();
  const auto r = stanley_reisner_sq_ring(tri);
  const auto idx = [&](const std::string& n) {
    return static_cast<std::uint32_t>(
        std::find(r.basis.begin(), r.basis.end(), n) - r.basis.begin());
  };
  CHECK(r.basis.size() == 7);
  CHECK(r.at(idx("{1}"), idx("{2}")) == idx("{1,2}"));
  CHECK(r.at(idx("{1,2}"), idx("{3}")) == RingTable::kZeroProduct);  // {1,2,3} is no face
  CHECK(r.at(idx("{1}"), idx("{1}")) == RingTable::kZeroProduct);
}

TEST_CASE("rp_ring") {
  const auto rp = RankedPoset::make(subspace_lattice(2));
  const auto r = rp_ring(rp);
  const auto& p = rp.base;
  // lines in the poset order: three rank-1 elements
  std::vector<std::uint32_t> lines;
  std::uint32_t plane = 0;
  for (ElemId e = 0; e < p.size(); ++e) {
    if (rp.rank[e] == 1) lines.push_back(e);
    if (rp.rank[e] == 2) plane = e;
  }
  REQUIRE(lines.size() == 3);
  CHECK(r.at(lines[0], lines[1]) == plane);
  CHECK(r.at(lines[0], lines[0]) == RingTable::kZeroProduct);
  for (std::uint32_t b = 0; b < r.size(); ++b) CHECK(r.at(rp.minimum, b) == b);

  CHECK_ERROR_KIND(rp_ring(RankedPoset{testutil::two_tops_poset(), 0, {0, 0, 1, 1}}),
                   ErrorKind::PreconditionFailed);
}

TEST_CASE("table_isomorphic") {
  SUBCASE("cube instance vs squarefree quotient") {
    const auto inst = boolean_cp(3);
    const auto report = table_isomorphic_by_name(schemoid_algebra(inst),
                                                 squarefree_quotient_ring(3));
    CHECK(report.ok);
  }
  SUBCASE("weak order categories vs nil-Coxeter, up to S_4") {
    for (int n = 2; n <= 4; ++n) {
      const auto sn = bruhat_order(n);
      const auto inst = build_cp(sn, bruhat_delta(sn));
      CHECK(table_isomorphic_by_name(schemoid_algebra(inst), nilcoxeter_ring(n)).ok);
    }
  }
  SUBCASE("hollow-triangle face instance vs Stanley-Reisner with squares") {
    const auto tri = testutil::hollow_triangle();
    const auto fp = face_poset(tri);
    const auto inst = build_cp(fp, set_difference_delta(fp));
    CHECK(table_isomorphic_by_name(schemoid_algebra(inst), stanley_reisner_sq_ring(tri)).ok);
  }
  SUBCASE("subspace tilde instance vs R_P") {
    const auto rp = RankedPoset::make(subspace_lattice(2));
    const auto inst = build_tilde(rp);
    CHECK(table_isomorphic_by_name(schemoid_algebra(inst), rp_ring(rp)).ok);
  }
  SUBCASE("a corrupted table is reported with a mismatch witness") {
    const auto inst = boolean_cp(2);
    auto sc = schemoid_algebra(inst);
    sc.at(label_by_name(inst, "{1}"), label_by_name(inst, "{2}"),
          label_by_name(inst, "{1,2}")) = 0;
    const auto report = table_isomorphic_by_name(sc, squarefree_quotient_ring(2));
    CHECK(!report.ok);
    CHECK(report.mismatch.has_value());
  }
  SUBCASE("a non-bijective correspondence is an error") {
    const auto inst = boolean_cp(2);
    const auto sc = schemoid_algebra(inst);
    std::vector<std::uint32_t> corr(sc.num_labels(), 0);
    CHECK_ERROR_KIND(table_isomorphic(sc, squarefree_quotient_ring(2), corr),
                     ErrorKind::NotBijective);
  }
}

TEST_CASE("unit behavior of the base-label class sum") {
  // in every C_P and tilde instance the class of the base label is the sum
  // of all identities and acts as a two-sided unit on every class sum
  const auto check_unit = [](const SchemoidInstance& inst, const std::string& base_label) {
    const LabelId l0 = label_by_name(inst, base_label);
    const auto unit = class_sum(inst, l0);
    CHECK(unit == identity_sum(inst.category));
    for (LabelId i = 0; i < inst.labeling.num_labels(); ++i) {
      const auto v = class_sum(inst, i);
      CHECK(algebra_product(inst.category, unit, v) == v);
      CHECK(algebra_product(inst.category, v, unit) == v);
    }
  };
  check_unit(boolean_cp(3), "{}");
  const auto s3 = bruhat_order(3);
  check_unit(build_cp(s3, bruhat_delta(s3)), "123");
  check_unit(build_tilde(RankedPoset::make(chain_product({3, 2}))), "(0,0)");
}
