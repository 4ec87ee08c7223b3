#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "semimod/catalog.hpp"
#include "semimod/category.hpp"
#include "semimod/exactness.hpp"
#include "semimod/universe.hpp"

using namespace semimod;

namespace {

Module b31() { return additive_monoid(b31_semiring()); }

LinearMap lm(const Module& d, const Module& c, std::vector<Elem> map) {
  return make_linear_map(d, c, std::move(map)).value.value();
}

std::vector<Module> small_modules() {
  auto out = commutative_monoids(3);
  for (const auto& m : boolean_semimodules(3)) out.push_back(m);
  out.push_back(b31());
  return out;
}

bool same_scalars(const Module& a, const Module& b) { return a->scalars == b->scalars; }

struct Expected {
  bool chain, proper, semi, quasi, exact;
};

Expected position_oracle(const LinearMap& f, const LinearMap& g) {
  const auto& m = *g.dom;
  Expected e{};
  e.chain = true;
  for (Elem x = 0; x < f.dom->size(); ++x) e.chain = e.chain && g.map[f.map[x]] == 0;
  const auto im = oracle::image(f);
  const auto ker = oracle::kernel(g);
  e.proper = im == ker;
  e.semi = oracle::closure(m, im) == ker;
  e.quasi = e.semi && oracle::k_normal(g);
  e.exact = e.proper && oracle::k_normal(g);
  return e;
}

void check_against_oracle(const Sequence& seq) {
  const auto maps = materialize(seq);
  const auto report = classify_exactness(seq);
  REQUIRE(report.positions.size() == maps.size() - 1);
  bool all_exact = true;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    const auto want = position_oracle(maps[i], maps[i + 1]);
    const auto& got = report.positions[i];
    CHECK(got.chain == want.chain);
    CHECK(got.proper_exact == want.proper);
    CHECK(got.semi_exact == want.semi);
    CHECK(got.quasi_exact == want.quasi);
    CHECK(got.exact == want.exact);
    CHECK(got.image_outside_kernel.has_value() == !want.chain);
    CHECK(got.k_normal_witness.has_value() == !oracle::k_normal(maps[i + 1]));
    // Implication lattice.
    if (got.exact) CHECK((got.proper_exact && got.quasi_exact));
    if (got.quasi_exact) CHECK(got.semi_exact);
    if (got.proper_exact) CHECK(got.semi_exact);
    all_exact = all_exact && want.exact;
  }
  CHECK(report.exact == all_exact);
}

bool short_exact_oracle(const LinearMap& f, const LinearMap& g) {
  const auto& n = *g.cod;
  return oracle::kernel(f).size() == 1 && oracle::image(f).size() == f.dom->size() &&
         oracle::image(f) == oracle::kernel(g) && oracle::image(g).size() == n.size() &&
         oracle::k_normal(g);
}

std::optional<std::vector<Elem>> first_left_inverse(const LinearMap& f) {
  for (const auto& h : oracle::homs(*f.cod, *f.dom)) {
    bool ok = true;
    for (Elem x = 0; x < f.dom->size() && ok; ++x) ok = h[f.map[x]] == x;
    if (ok) return h;
  }
  return std::nullopt;
}

std::optional<std::vector<Elem>> first_right_inverse(const LinearMap& g) {
  for (const auto& h : oracle::homs(*g.cod, *g.dom)) {
    bool ok = true;
    for (Elem x = 0; x < g.cod->size() && ok; ++x) ok = g.map[h[x]] == x;
    if (ok) return h;
  }
  return std::nullopt;
}

template <class F>
void for_each_composable_pair(F&& fn) {
  const auto mods = small_modules();
  for (const auto& l : mods)
    for (const auto& m : mods) {
      if (!same_scalars(l, m)) continue;
      for (const auto& n : mods) {
        if (!same_scalars(m, n)) continue;
        const auto fs = enumerate_hom(l, m);
        const auto gs = enumerate_hom(m, n);
        for (const auto& f : fs)
          for (const auto& g : gs) fn(f, g);
      }
    }
}

}  // namespace

TEST_SUITE("exactness") {
  TEST_CASE("0 -> {0,2} -> B31 -> Z2 -> 0 is exact everywhere") {
    const auto m = b31();
    const auto [l, iota] = as_module(Subsemimodule{m, {0, 2}});
    const auto pi = lm(m, z2_monoid(), {0, 1, 0});
    const auto report = classify_exactness({{iota, pi}, true, true});
    CHECK(report.positions.size() == 3);
    for (const auto& p : report.positions) CHECK(p.exact);
    CHECK(report.exact);
    const auto se = is_short_exact(iota, pi);
    CHECK(se.short_exact);
    CHECK(se.kernel_iso_canonical);
    CHECK(se.quotient_iso_canonical);
    CHECK(se.kernel_isomorphic == std::optional<bool>(true));
    CHECK(se.quotient_isomorphic == std::optional<bool>(true));
    CHECK(se.f_normal);
    CHECK(se.g_normal);

    const auto split = find_splittings(iota, pi);
    REQUIRE(split.left);
    CHECK(split.left->map == std::vector<Elem>{0, 1, 1});
    CHECK_FALSE(split.right.has_value());
  }

  TEST_CASE("0 -> Zero -> B(+)B -> quotient is proper-exact but not exact at the middle") {
    const auto bb = builtin_module("reg(B)+reg(B)");
    const auto zero = zero_module(bb->scalars);
    const auto rho = generated_congruence(bb, {{2, 1}});
    const auto q = quotient(rho);
    const auto report = classify_exactness({{zero_map(zero, bb), q.projection}, true, false});
    REQUIRE(report.positions.size() == 2);
    const auto& mid = report.positions[1];
    CHECK(mid.chain);
    CHECK(mid.proper_exact);
    CHECK(mid.semi_exact);
    CHECK_FALSE(mid.quasi_exact);
    CHECK_FALSE(mid.exact);
    REQUIRE(mid.k_normal_witness);
    CHECK(q.projection(mid.k_normal_witness->first) == q.projection(mid.k_normal_witness->second));
  }

  TEST_CASE("degenerate short sequences") {
    const auto m = b31();
    const auto zero = zero_module();
    CHECK(classify_exactness({{identity_map(m), zero_map(m, zero)}, true, true}).exact);
    CHECK(is_short_exact(identity_map(m), zero_map(m, zero)).short_exact);
    CHECK(is_short_exact(zero_map(zero, m), identity_map(m)).short_exact);

    const auto split = find_splittings(identity_map(m), zero_map(m, zero));
    REQUIRE(split.left);
    CHECK(split.left->map == identity_map(m).map);
    REQUIRE(split.right);
    CHECK(split.right->map == std::vector<Elem>{0});
  }

  TEST_CASE("mismatched endpoints are rejected") {
    const auto m = b31();
    const auto z2 = z2_monoid();
    CHECK_THROWS_AS(materialize({{identity_map(m), identity_map(z2)}, false, false}), StructuralError);
    CHECK_THROWS_AS(is_short_exact(identity_map(m), identity_map(z2)), StructuralError);
  }

  TEST_CASE("canonical direct-sum sequence splits both ways") {
    const auto mods = small_modules();
    for (const auto& a : mods)
      for (const auto& b : mods) {
        if (!same_scalars(a, b)) continue;
        const auto ds = direct_sum(a, b);
        CHECK(is_short_exact(ds.inject_left, ds.project_right, false).short_exact);
        const auto split = find_splittings(ds.inject_left, ds.project_right);
        CHECK(split.left.has_value());
        CHECK(split.right.has_value());
      }
  }

  TEST_CASE("position verdicts agree with table scans") {
    std::size_t count = 0;
    for_each_composable_pair([&](const LinearMap& f, const LinearMap& g) {
      check_against_oracle({{f, g}, true, true});
      check_against_oracle({{f, g}, false, false});
      ++count;
    });
    CHECK(count > 1000);
  }

  TEST_CASE("short exactness agrees with the defining conditions") {
    std::size_t hits = 0;
    for_each_composable_pair([&](const LinearMap& f, const LinearMap& g) {
      const bool want = short_exact_oracle(f, g);
      const auto got = is_short_exact(f, g, want);
      CHECK(got.short_exact == want);
      CHECK(got.exactness.exact == want);
      if (!want) return;
      ++hits;
      CHECK(got.f_normal);
      CHECK(got.g_normal);
      CHECK(got.kernel_isomorphic == std::optional<bool>(true));
      CHECK(got.quotient_isomorphic == std::optional<bool>(true));
      CHECK(corestricts_to_kernel(f, g));
      CHECK(induces_quotient_iso(f, g));
    });
    CHECK(hits > 20);
  }

  TEST_CASE("splitting search returns the first inverse in lexicographic order") {
    for_each_composable_pair([&](const LinearMap& f, const LinearMap& g) {
      if (!short_exact_oracle(f, g)) return;
      const auto got = find_splittings(f, g);
      const auto left = first_left_inverse(f);
      const auto right = first_right_inverse(g);
      REQUIRE(got.left.has_value() == left.has_value());
      REQUIRE(got.right.has_value() == right.has_value());
      if (left) CHECK(got.left->map == *left);
      if (right) CHECK(got.right->map == *right);
      const auto section = find_section(g);
      CHECK(section.has_value() == right.has_value());
    });
  }

  TEST_CASE("kernel-cokernel examples") {
    const auto m = b31();
    const auto z2 = z2_monoid();
    const auto kc = ker_coker_sequence(lm(m, z2, {0, 1, 0}));
    CHECK(kc.kernel->size() == 2);
    CHECK(kc.cokernel->size() == 1);
    CHECK(kc.report.exact);
    CHECK(kc.gamma_normal);

    const auto id = ker_coker_sequence(identity_map(m));
    CHECK(id.kernel->size() == 1);
    CHECK(id.cokernel->size() == 1);
    CHECK(id.report.exact);

    const auto [l, iota] = as_module(Subsemimodule{m, {0, 2}});
    const auto inc = ker_coker_sequence(iota);
    CHECK(are_isomorphic(inc.cokernel, z2));
    CHECK(inc.report.exact);
  }

  TEST_CASE("kernel-cokernel sequence is semi-exact and exact iff normal") {
    const auto mods = small_modules();
    std::size_t normal = 0, total = 0;
    for (const auto& x : mods)
      for (const auto& y : mods) {
        if (!same_scalars(x, y)) continue;
        for (const auto& gamma : enumerate_hom(x, y)) {
          const auto kc = ker_coker_sequence(gamma);
          const bool is_normal = oracle::k_normal(gamma) && oracle::i_normal(gamma);
          CHECK(kc.report.semi_exact);
          CHECK(kc.report.exact == is_normal);
          CHECK(kc.gamma_normal == is_normal);
          CHECK(kc.kernel->size() == oracle::kernel(gamma).size());
          const auto labels = oracle::bourne(*y, oracle::image(gamma));
          CHECK(kc.cokernel->size() == static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1));
          normal += is_normal ? 1 : 0;
          ++total;
        }
      }
    CHECK(normal > 0);
    CHECK(normal < total);
  }

  TEST_CASE("closure and subsemimodule sequences") {
    const auto mods = small_modules();
    for (const auto& m : mods)
      for (const auto& entry : enumerate_subsemimodules(m)) {
        const auto q = quotient(entry.sub);
        const auto [l, iota] = as_module(entry.sub);
        CHECK(is_short_exact(iota, q.projection, false).short_exact == entry.subtractive);
        const auto closed = subtractive_closure(*m, entry.sub.elements).closure;
        const auto [lbar, iota_bar] = as_module(Subsemimodule{m, closed});
        CHECK(is_short_exact(iota_bar, q.projection, false).short_exact);
      }
  }
}
