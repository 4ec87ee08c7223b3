#include <doctest.h>

#include "oracle.hpp"
#include "semimod/catalog.hpp"
#include "semimod/subquot.hpp"
#include "semimod/universe.hpp"

using namespace semimod;

namespace {

Module b31() { return additive_monoid(b31_semiring()); }

std::vector<Module> small_universe() {
  auto mods = commutative_monoids(4);
  for (const auto& m : boolean_semimodules(4)) mods.push_back(m);
  mods.push_back(regular_module(b31_semiring()));
  mods.push_back(builtin_module("reg(B)+reg(B)"));
  return mods;
}

}  // namespace

TEST_SUITE("subquot") {
  TEST_CASE("subtractive closure examples") {
    const auto m = b31();
    const auto a = subtractive_closure(*m, {0, 2});
    CHECK(a.closure == ElementSet{0, 2});
    CHECK(a.is_subtractive);
    const auto b = subtractive_closure(*m, {0, 1});
    CHECK(b.closure == ElementSet{0, 1, 2});
    CHECK_FALSE(b.is_subtractive);
    CHECK(subtractive_closure(*m, {0}).closure == ElementSet{0});
  }

  TEST_CASE("closure matches its defining formula on every subset") {
    for (const auto& m : small_universe()) {
      const auto n = m->size();
      for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        ElementSet s;
        for (Elem i = 0; i < n; ++i)
          if ((mask >> i) & 1U) s.push_back(i);
        const auto c = subtractive_closure(*m, s);
        CHECK(c.closure == oracle::closure(*m, s));
        CHECK(c.is_subtractive == (c.closure == s));
      }
    }
  }

  TEST_CASE("generated subsemimodules") {
    const auto m = b31();
    CHECK(generated_subsemimodule(m, {1}).elements == ElementSet{0, 1, 2});
    CHECK(generated_subsemimodule(m, {}).elements == ElementSet{0});
    CHECK(generated_subsemimodule(m, {2}).elements == ElementSet{0, 2});
  }

  TEST_CASE("subsemimodule enumeration examples") {
    const auto subs = enumerate_subsemimodules(b31());
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].sub.elements == ElementSet{0});
    CHECK(subs[1].sub.elements == ElementSet{0, 2});
    CHECK(subs[2].sub.elements == ElementSet{0, 1, 2});
    CHECK(subs[1].subtractive);
    CHECK(enumerate_subsemimodules(z2_monoid()).size() == 2);
    CHECK(enumerate_subsemimodules(zero_module()).size() == 1);
  }

  TEST_CASE("subsemimodule enumeration matches subset scan") {
    for (const auto& m : small_universe()) {
      INFO(m->name);
      std::set<ElementSet> got;
      for (const auto& e : enumerate_subsemimodules(m)) {
        got.insert(e.sub.elements);
        CHECK(e.subtractive == (oracle::closure(*m, e.sub.elements) == e.sub.elements));
      }
      CHECK(got == oracle::subsemimodules(*m));
    }
  }

  TEST_CASE("generated congruence examples") {
    const auto m = b31();
    CHECK(generated_congruence(m, {{0, 2}}).class_of == std::vector<Elem>{0, 1, 0});
    CHECK(generated_congruence(m, {}) == diagonal_congruence(m));
    const auto bb = builtin_module("reg(B)+reg(B)");
    CHECK(generated_congruence(bb, {{2, 1}}).class_of == std::vector<Elem>{0, 1, 1, 1});
  }

  TEST_CASE("generated congruence is the least congruence containing the pairs") {
    Rng rng(7);
    for (const auto& m : small_universe()) {
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::pair<Elem, Elem>> pairs;
        const auto k = rng.below(3);
        for (std::size_t i = 0; i < k; ++i)
          pairs.emplace_back(static_cast<Elem>(rng.below(m->size())), static_cast<Elem>(rng.below(m->size())));
        CHECK(generated_congruence(m, pairs).class_of == oracle::least_congruence(*m, pairs));
      }
    }
  }

  TEST_CASE("congruence enumeration examples") {
    const auto c = enumerate_congruences(b31());
    REQUIRE(c.size() == 4);
    std::set<std::vector<Elem>> got;
    for (const auto& x : c) got.insert(x.class_of);
    CHECK(got == std::set<std::vector<Elem>>{{0, 1, 2}, {0, 1, 0}, {0, 1, 1}, {0, 0, 0}});
    CHECK(enumerate_congruences(z2_monoid()).size() == 2);
    CHECK(enumerate_congruences(zero_module()).size() == 1);
  }

  TEST_CASE("congruence enumeration matches partition scan") {
    for (const auto& m : small_universe()) {
      INFO(m->name);
      std::set<std::vector<Elem>> got;
      for (const auto& c : enumerate_congruences(m)) {
        got.insert(c.class_of);
        CHECK(is_congruence(*m, c.class_of));
      }
      const auto want = oracle::congruences(*m);
      CHECK(got == std::set<std::vector<Elem>>(want.begin(), want.end()));
    }
  }

  TEST_CASE("congruences above a base") {
    const auto m = builtin_module("reg(B)+reg(B)");
    const auto base = generated_congruence(m, {{0, 2}});
    for (const auto& c : enumerate_congruences_above(base)) CHECK(base.refines(c));
    std::size_t above = 0;
    for (const auto& c : enumerate_congruences(m)) above += base.refines(c) ? 1 : 0;
    CHECK(enumerate_congruences_above(base).size() == above);
  }

  TEST_CASE("Bourne congruence matches its definition") {
    for (const auto& m : small_universe()) {
      for (const auto& e : enumerate_subsemimodules(m)) {
        const auto rho = bourne_congruence(m, e.sub.elements);
        CHECK(rho.class_of == oracle::bourne(*m, e.sub.elements));
        CHECK(is_congruence(*m, rho.class_of));
      }
    }
  }

  TEST_CASE("quotient examples") {
    const auto m = b31();
    const auto q = quotient(Subsemimodule{m, {0, 2}});
    CHECK(q.apex->size() == 2);
    CHECK(q.projection(1) == 1);
    CHECK(q.apex->add(1, 1) == 0);
    const auto d = quotient(diagonal_congruence(m));
    CHECK(d.apex->size() == 3);
    CHECK(is_injective(d.projection));
    const auto c = quotient(Congruence{m, {0, 1, 1}, 2});
    CHECK(c.apex->size() == 2);
    CHECK(c.apex->add(1, 1) == 1);
  }

  TEST_CASE("Bourne projections are normal epimorphisms with kernel the closure") {
    for (const auto& m : small_universe()) {
      for (const auto& e : enumerate_subsemimodules(m)) {
        const auto q = quotient(e.sub);
        CHECK(is_surjective(q.projection));
        CHECK(oracle::k_normal(q.projection));
        CHECK(oracle::kernel(q.projection) == oracle::closure(*m, e.sub.elements));
      }
    }
  }

  TEST_CASE("closure is extensive and idempotent on subsemimodules") {
    for (const auto& m : small_universe()) {
      for (const auto& e : enumerate_subsemimodules(m)) {
        const auto c = subtractive_closure(*m, e.sub.elements).closure;
        CHECK(std::includes(c.begin(), c.end(), e.sub.elements.begin(), e.sub.elements.end()));
        CHECK(subtractive_closure(*m, c).closure == c);
        CHECK(is_subsemimodule(*m, c));
      }
    }
  }
}
