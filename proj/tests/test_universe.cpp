#include <doctest.h>

#include <functional>
#include <set>

#include "oracle.hpp"
#include "semimod/universe.hpp"

using namespace semimod;

namespace {

/// Commutative monoid tables on {0..n-1} with identity 0, one per iso class.
std::vector<FiniteSemimodule> monoids_oracle(std::size_t n, bool idempotent_only) {
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = a; b < n; ++b) cells.emplace_back(a, b);
  std::vector<FiniteSemimodule> reps;
  oracle::Tables t(n, std::vector<std::int64_t>(n, 0));
  for (Elem a = 0; a < n; ++a) t[0][a] = t[a][0] = a;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            if (t[t[a][b]][c] != t[a][t[b][c]]) return;
      if (idempotent_only)
        for (Elem a = 0; a < n; ++a)
          if (t[a][a] != a) return;
      FiniteSemimodule m;
      m.add = Table(n, n);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) m.add(a, b) = static_cast<Elem>(t[a][b]);
      for (const auto& r : reps)
        if (oracle::isomorphic(r, m)) return;
      reps.push_back(std::move(m));
      return;
    }
    const auto [a, b] = cells[i];
    for (Elem v = 0; v < n; ++v) {
      t[a][b] = t[b][a] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return reps;
}

std::size_t count_of_size(const std::vector<Module>& mods, std::size_t n) {
  std::size_t c = 0;
  for (const auto& m : mods) c += m->size() == n ? 1 : 0;
  return c;
}

}  // namespace

TEST_SUITE("universe") {
  TEST_CASE("commutative monoid counts per size") {
    const auto mods = commutative_monoids(5);
    CHECK(count_of_size(mods, 1) == 1);
    CHECK(count_of_size(mods, 2) == 2);
    CHECK(count_of_size(mods, 3) == 5);
    CHECK(count_of_size(mods, 4) == 19);
    CHECK(count_of_size(mods, 5) == 78);
    CHECK(mods.size() == 105);
  }

  TEST_CASE("counts match a brute-force table scan") {
    const auto mods = commutative_monoids(4);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(count_of_size(mods, n) == monoids_oracle(n, false).size());
  }

  TEST_CASE("members are pairwise non-isomorphic monoids") {
    const auto mods = commutative_monoids(4);
    std::set<std::string> names;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const auto& m = *mods[i];
      names.insert(m.name);
      CHECK(m.name.rfind("Mon", 0) == 0);
      CHECK(semimodule_violations(m).empty());
      if (i > 0) CHECK(mods[i - 1]->size() <= m.size());
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(oracle::isomorphic(*mods[j], m));
    }
    CHECK(names.size() == mods.size());
  }

  TEST_CASE("canonical forms identify relabelings") {
    for (const auto& m : commutative_monoids(4)) {
      const std::size_t n = m->size();
      if (n < 3) continue;
      // Swap the last two elements.
      std::vector<Elem> perm(n);
      for (Elem i = 0; i < n; ++i) perm[i] = i;
      std::swap(perm[n - 1], perm[n - 2]);
      Table t(n, n);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t(perm[a], perm[b]) = perm[m->add(a, b)];
      CHECK(canonical_monoid_form(t) == canonical_monoid_form(m->add));
    }
  }

  TEST_CASE("Boolean semimodules") {
    const auto mods = boolean_semimodules(4);
    CHECK(mods.size() == 5);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(count_of_size(mods, n) == monoids_oracle(n, true).size());
    for (const auto& m : mods) {
      CHECK(m->name.rfind("Bmod", 0) == 0);
      CHECK(semimodule_violations(*m).empty());
      for (Elem x = 0; x < m->size(); ++x) {
        CHECK(m->act(0, x) == 0);
        CHECK(m->act(1, x) == x);
      }
    }
  }

  TEST_CASE("seeded draws are reproducible") {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
      const auto x = a.below(1000);
      CHECK(x == b.below(1000));
      CHECK(x < 1000);
      differs = differs || x != c.below(1000);
    }
    CHECK(differs);
    Rng d(5);
    const std::vector<int> v{1, 2, 3};
    for (int i = 0; i < 20; ++i) {
      const int p = d.pick(v);
      CHECK((p >= 1 && p <= 3));
    }
  }
}
