#include "semimod/universe.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "semimod/catalog.hpp"

namespace semimod {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

struct MonoidSearch {
  std::size_t n;
  std::vector<Elem> t;  // n*n, kUnset where unknown
  std::vector<std::pair<Elem, Elem>> cells;
  std::vector<std::vector<Elem>> found;

  Elem at(Elem a, Elem b) const { return t[a * n + b]; }

  bool associative_so_far() const {
    for (Elem a = 1; a < n; ++a) {
      for (Elem b = 1; b < n; ++b) {
        const Elem ab = at(a, b);
        if (ab == kUnset) continue;
        for (Elem c = 1; c < n; ++c) {
          const Elem bc = at(b, c);
          if (bc == kUnset) continue;
          const Elem left = at(ab, c);
          const Elem right = at(a, bc);
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    }
    return true;
  }

  void run(std::size_t depth) {
    if (depth == cells.size()) {
      found.push_back(t);
      return;
    }
    const auto [a, b] = cells[depth];
    for (Elem v = 0; v < n; ++v) {
      t[a * n + b] = v;
      t[b * n + a] = v;
      if (associative_so_far()) run(depth + 1);
    }
    t[a * n + b] = kUnset;
    t[b * n + a] = kUnset;
  }
};

std::vector<std::vector<Elem>> monoid_classes(std::size_t n) {
  MonoidSearch s{n, std::vector<Elem>(n * n, kUnset), {}, {}};
  for (Elem a = 0; a < n; ++a) {
    s.t[a] = a;
    s.t[a * n] = a;
  }
  for (Elem a = 1; a < n; ++a)
    for (Elem b = a; b < n; ++b) s.cells.emplace_back(a, b);
  s.run(0);
  std::vector<std::vector<Elem>> classes;
  for (const auto& t : s.found) classes.push_back(canonical_monoid_form(Table(n, n, t)));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

}  // namespace

std::vector<Elem> canonical_monoid_form(const Table& add) {
  const auto n = add.rows();
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best;
  std::vector<Elem> cur(n * n);
  do {
    // perm[old] = new
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) cur[perm[a] * n + perm[b]] = perm[add(a, b)];
    if (best.empty() || cur < best) best = cur;
  } while (n > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::vector<Module> commutative_monoids(std::size_t max_size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<std::vector<Elem>>> cache;
  const std::lock_guard lock(mutex);
  std::vector<Module> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, monoid_classes(n)).first;
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      FiniteSemimodule m;
      m.name = "Mon" + std::to_string(n) + "." + std::to_string(k);
      m.add = Table(n, n, it->second[k]);
      out.push_back(std::make_shared<const FiniteSemimodule>(std::move(m)));
    }
  }
  return out;
}

std::vector<Module> boolean_semimodules(std::size_t max_size) {
  const auto scalars = ScalarDomain::finite(boolean_semiring());
  std::vector<Module> out;
  std::size_t last_size = 0, k = 0;
  for (const auto& mon : commutative_monoids(max_size)) {
    const auto n = mon->size();
    bool idempotent = true;
    for (Elem a = 0; a < n; ++a) idempotent = idempotent && mon->plus(a, a) == a;
    if (!idempotent) continue;
    if (n != last_size) {
      last_size = n;
      k = 0;
    }
    FiniteSemimodule m;
    m.name = "Bmod" + std::to_string(n) + "." + std::to_string(k++);
    m.scalars = scalars;
    m.add = mon->add;
    m.action = Table(2, n);
    for (Elem a = 0; a < n; ++a) m.action(1, a) = a;
    out.push_back(std::make_shared<const FiniteSemimodule>(std::move(m)));
  }
  return out;
}

}  // namespace semimod
