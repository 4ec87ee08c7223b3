#include <doctest.h>

#include "oracle.hpp"
#include "semimod/catalog.hpp"
#include "semimod/subquot.hpp"
#include "semimod/universe.hpp"

using namespace semimod;

namespace {

Module b31() { return additive_monoid(b31_semiring()); }

std::vector<std::vector<Elem>> arrays(const std::vector<LinearMap>& maps) {
  std::vector<std::vector<Elem>> out;
  for (const auto& f : maps) out.push_back(f.map);
  return out;
}

}  // namespace

TEST_SUITE("morphisms") {
  TEST_CASE("make_linear_map") {
    const auto m = b31();
    CHECK(make_linear_map(m, m, {0, 1, 2}).ok());
    const auto l = as_module(Subsemimodule{m, {0, 2}}).first;
    CHECK(make_linear_map(m, l, {0, 1, 1}).ok());
    const auto bad = make_linear_map(z2_monoid(), additive_monoid(boolean_semiring()), {0, 1});
    REQUIRE_FALSE(bad.ok());
    CHECK_FALSE(bad.violations.empty());
    CHECK_THROWS_AS(make_linear_map(z2_monoid(), regular_module(boolean_semiring()), {0, 1}), StructuralError);
    CHECK_THROWS_AS(make_linear_map(m, m, {0, 1}), StructuralError);
    CHECK_THROWS_AS(make_linear_map(m, m, {0, 1, 7}), StructuralError);
  }

  TEST_CASE("Hom examples") {
    CHECK(enumerate_hom(z2_monoid(), b31()).size() == 1);
    const auto b = regular_module(boolean_semiring());
    const auto hb = enumerate_hom(b, b);
    REQUIRE(hb.size() == 2);
    CHECK(is_zero(hb[0]));
    CHECK(hb[1].map == std::vector<Elem>{0, 1});
    for (const auto& m : {b31(), z2_monoid(), builtin_module("C(2,3)")}) {
      CHECK(enumerate_hom(zero_module(), m).size() == 1);
    }
  }

  TEST_CASE("hom enumeration matches brute force over the size <= 3 universe") {
    auto mods = commutative_monoids(3);
    for (const auto& m : boolean_semimodules(3)) mods.push_back(m);
    mods.push_back(b31());
    for (const auto& p : mods)
      for (const auto& m : mods) {
        if (!(p->scalars == m->scalars)) continue;
        INFO(p->name << " -> " << m->name);
        auto got = arrays(enumerate_hom(p, m));
        auto want = oracle::homs(*p, *m);
        CHECK(std::is_sorted(got.begin(), got.end()));
        std::sort(want.begin(), want.end());
        CHECK(got == want);
      }
  }

  TEST_CASE("hom enumeration respects the budget") {
    const auto m = builtin_module("C(0,4)+C(0,4)");
    CHECK_THROWS_AS(enumerate_hom(m, m, 3), ResourceError);
  }

  TEST_CASE("kernel and image") {
    const auto m = b31();
    const auto pi = make_linear_map(m, z2_monoid(), {0, 1, 0}).value.value();
    const auto ki = kernel_image(pi);
    CHECK(ki.kernel == ElementSet{0, 2});
    CHECK(ki.image == ElementSet{0, 1});
    const auto id = kernel_image(identity_map(m));
    CHECK(id.kernel == ElementSet{0});
    CHECK(id.image == ElementSet{0, 1, 2});
    const auto z = kernel_image(zero_map(m, z2_monoid()));
    CHECK(z.kernel == ElementSet{0, 1, 2});
    CHECK(z.image == ElementSet{0});
  }

  TEST_CASE("normality examples") {
    const auto pi = make_linear_map(b31(), z2_monoid(), {0, 1, 0}).value.value();
    const auto r = classify_normality(pi);
    CHECK(r.k_normal);
    CHECK(r.i_normal);
    CHECK(r.normal);
    CHECK(r.surjective);

    const auto bb = builtin_module("reg(B)+reg(B)");
    // (1,0) = 2 and (0,1) = 1 in the pair encoding.
    const auto q = quotient(generated_congruence(bb, {{2, 1}}));
    const auto n = classify_normality(q.projection);
    CHECK_FALSE(n.k_normal);
    REQUIRE(n.k_normal_witness);
    CHECK(*n.k_normal_witness == std::pair<Elem, Elem>{1, 2});
  }

  TEST_CASE("normality agrees with the definitions on every universe map") {
    auto mods = commutative_monoids(3);
    for (const auto& m : boolean_semimodules(4)) mods.push_back(m);
    for (const auto& p : mods)
      for (const auto& m : mods) {
        if (!(p->scalars == m->scalars)) continue;
        for (const auto& f : enumerate_hom(p, m)) {
          const auto r = classify_normality(f);
          CHECK(r.k_normal == oracle::k_normal(f));
          CHECK(r.i_normal == oracle::i_normal(f));
          CHECK(r.normal == (r.k_normal && r.i_normal));
          CHECK(r.injective == (oracle::image(f).size() == p->size()));
          CHECK(r.surjective == (oracle::image(f).size() == m->size()));
          if (r.injective) CHECK(r.k_normal);
          if (r.surjective) CHECK(r.i_normal);
        }
      }
  }

  TEST_CASE("composition") {
    const auto m = b31();
    const auto l = as_module(Subsemimodule{m, {0, 2}});
    const auto f = make_linear_map(m, l.first, {0, 1, 1}).value.value();
    CHECK(compose(f, identity_map(m)).map == f.map);
    CHECK(compose(f, l.second).map == identity_map(l.first).map);
    CHECK(is_zero(compose(zero_map(l.first, z2_monoid()), f)));
    CHECK_THROWS_AS(compose(f, f), StructuralError);
  }

  TEST_CASE("isomorphism search") {
    const auto m = b31();
    const auto q = quotient(Subsemimodule{m, {0, 2}});
    CHECK(are_isomorphic(q.apex, z2_monoid()));
    CHECK_FALSE(are_isomorphic(additive_monoid(boolean_semiring()), z2_monoid()));
    const auto self = find_isomorphism(m, m);
    REQUIRE(self);
    CHECK(self->map == identity_map(m).map);
  }

  TEST_CASE("isomorphism search matches bijection scan") {
    const auto mods = commutative_monoids(4);
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = 0; j < mods.size(); ++j) {
        if (mods[i]->size() != mods[j]->size()) continue;
        CHECK(are_isomorphic(mods[i], mods[j]) == oracle::isomorphic(*mods[i], *mods[j]));
        CHECK(are_isomorphic(mods[i], mods[j]) == (i == j));
      }
  }
}
