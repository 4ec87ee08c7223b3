#include "semimod/morphism.hpp"

#include <algorithm>
#include <limits>

#include "semimod/subquot.hpp"

namespace semimod {

std::vector<Violation> linearity_violations(const FiniteSemimodule& dom,
                                            const FiniteSemimodule& cod,
                                            const std::vector<Elem>& map) {
  std::vector<Violation> out;
  if (map[dom.zero] != cod.zero) out.push_back({"map(0)=0", {map[dom.zero]}});
  const auto n = static_cast<Elem>(dom.size());
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (map[dom.plus(a, b)] != cod.plus(map[a], map[b])) {
          out.push_back({"map(a+b)=map(a)+map(b)", {a, b}});
          return;
        }
  }();
  const auto ns = static_cast<Elem>(dom.scalars.scalar_count());
  [&] {
    for (Elem s = 0; s < ns; ++s)
      for (Elem a = 0; a < n; ++a)
        if (map[dom.act(s, a)] != cod.act(s, map[a])) {
          out.push_back({"map(s·a)=s·map(a)", {s, a}});
          return;
        }
  }();
  return out;
}

namespace {

void check_endpoints(const Module& dom, const Module& cod) {
  if (!dom || !cod) throw StructuralError("linear map with missing endpoint");
  if (!(dom->scalars == cod->scalars)) {
    throw StructuralError("scalar-domain mismatch: " + dom->name + " over " +
                          dom->scalars.name() + ", " + cod->name + " over " +
                          cod->scalars.name());
  }
}

}  // namespace

Validated<LinearMap> make_linear_map(Module dom, Module cod, std::vector<Elem> map) {
  check_endpoints(dom, cod);
  if (map.size() != dom->size()) {
    throw StructuralError("map array has length " + std::to_string(map.size()) + ", domain " +
                          dom->name + " has size " + std::to_string(dom->size()));
  }
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= cod->size()) {
      throw StructuralError("map entry " + std::to_string(i) + " = " + std::to_string(map[i]) +
                            " out of range for codomain " + cod->name);
    }
  }
  Validated<LinearMap> out;
  out.violations = linearity_violations(*dom, *cod, map);
  if (out.violations.empty()) out.value = LinearMap{std::move(dom), std::move(cod), std::move(map)};
  return out;
}

LinearMap identity_map(const Module& m) { return {m, m, full_set(m->size())}; }

LinearMap zero_map(const Module& dom, const Module& cod) {
  check_endpoints(dom, cod);
  return {dom, cod, std::vector<Elem>(dom->size(), cod->zero)};
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.cod != g.dom) {
    throw StructuralError("cannot compose: codomain " + f.cod->name + " is not domain " +
                          g.dom->name);
  }
  LinearMap out{f.dom, g.cod, std::vector<Elem>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) out.map[i] = g.map[f.map[i]];
  return out;
}

LinearMap add_maps(const LinearMap& a, const LinearMap& b) {
  if (a.dom != b.dom || a.cod != b.cod) throw StructuralError("cannot add non-parallel maps");
  LinearMap out{a.dom, a.cod, std::vector<Elem>(a.map.size())};
  for (std::size_t i = 0; i < a.map.size(); ++i) out.map[i] = a.cod->plus(a.map[i], b.map[i]);
  return out;
}

bool is_zero(const LinearMap& f) {
  return std::all_of(f.map.begin(), f.map.end(), [&](Elem v) { return v == f.cod->zero; });
}

namespace {

struct PartialMap {
  std::vector<Elem> value;
  std::vector<char> known;
  std::vector<Elem> assigned;
};

// Assigns every queued (x, v) and closes under sums and scalars. False on a
// conflicting assignment.
bool propagate(const FiniteSemimodule& p, const FiniteSemimodule& m, PartialMap& st,
               std::vector<std::pair<Elem, Elem>>& queue) {
  const auto ns = static_cast<Elem>(p.scalars.scalar_count());
  while (!queue.empty()) {
    const auto [x, v] = queue.back();
    queue.pop_back();
    if (st.known[x]) {
      if (st.value[x] != v) return false;
      continue;
    }
    st.known[x] = 1;
    st.value[x] = v;
    st.assigned.push_back(x);
    for (const Elem y : st.assigned) queue.emplace_back(p.plus(x, y), m.plus(v, st.value[y]));
    for (Elem s = 0; s < ns; ++s) queue.emplace_back(p.act(s, x), m.act(s, v));
  }
  return true;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

// Number of generators the search branches on after the fixed part.
std::size_t free_generator_count(const Module& p, const ElementSet& seed) {
  auto known = generated_subsemimodule(p, seed).elements;
  std::size_t k = 0;
  while (known.size() < p->size()) {
    Elem u = 0;
    while (contains(known, u)) ++u;
    known = generated_subsemimodule(p, set_union(known, {u})).elements;
    ++k;
  }
  return k;
}

}  // namespace

std::size_t generator_count(const FiniteSemimodule& m) {
  auto copy = std::make_shared<const FiniteSemimodule>(m);
  return free_generator_count(copy, {});
}

void for_each_linear_extension(const Module& p, const Module& m,
                               const std::vector<std::optional<Elem>>& fixed,
                               const std::function<bool(const LinearMap&)>& visit,
                               std::uint64_t budget) {
  check_endpoints(p, m);
  if (fixed.size() != p->size()) throw StructuralError("partial map has wrong length");

  ElementSet seed;
  std::vector<std::pair<Elem, Elem>> queue{{p->zero, m->zero}};
  for (Elem x = 0; x < fixed.size(); ++x) {
    if (!fixed[x]) continue;
    if (*fixed[x] >= m->size()) throw StructuralError("partial map entry out of range");
    seed.push_back(x);
    queue.emplace_back(x, *fixed[x]);
  }
  const auto k = free_generator_count(p, seed);
  const auto leaves = saturating_pow(m->size(), k);
  if (leaves > budget) {
    throw ResourceError("hom enumeration " + p->name + " -> " + m->name + " needs |M|^k = " +
                        std::to_string(m->size()) + "^" + std::to_string(k) +
                        " candidates, over budget " + std::to_string(budget));
  }

  PartialMap start{std::vector<Elem>(p->size()), std::vector<char>(p->size()), {}};
  if (!propagate(*p, *m, start, queue)) return;

  bool stop = false;
  std::function<void(const PartialMap&)> dfs = [&](const PartialMap& st) {
    const auto it = std::find(st.known.begin(), st.known.end(), 0);
    if (it == st.known.end()) {
      if (!visit(LinearMap{p, m, st.value})) stop = true;
      return;
    }
    const auto u = static_cast<Elem>(it - st.known.begin());
    for (Elem v = 0; v < m->size() && !stop; ++v) {
      PartialMap next = st;
      std::vector<std::pair<Elem, Elem>> q{{u, v}};
      if (propagate(*p, *m, next, q)) dfs(next);
    }
  };
  dfs(start);
}

std::vector<LinearMap> enumerate_hom(const Module& p, const Module& m, std::uint64_t budget) {
  std::vector<LinearMap> out;
  for_each_linear_extension(
      p, m, std::vector<std::optional<Elem>>(p->size()),
      [&](const LinearMap& f) {
        out.push_back(f);
        return true;
      },
      budget);
  return out;
}

KernelImage kernel_image(const LinearMap& f) {
  KernelImage out;
  std::vector<char> hit(f.cod->size());
  for (Elem x = 0; x < f.map.size(); ++x) {
    if (f.map[x] == f.cod->zero) out.kernel.push_back(x);
    hit[f.map[x]] = 1;
  }
  for (Elem y = 0; y < hit.size(); ++y) {
    if (hit[y]) out.image.push_back(y);
  }
  return out;
}

NormalityReport classify_normality(const LinearMap& f) {
  NormalityReport r;
  const auto& dom = *f.dom;
  const auto n = static_cast<Elem>(dom.size());
  const auto ki = kernel_image(f);

  for (Elem a = 0; a < n && !r.injective_witness; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (f(a) == f(b)) {
        r.injective_witness = {a, b};
        break;
      }
  r.injective = !r.injective_witness;

  for (Elem y = 0; y < f.cod->size(); ++y) {
    if (!contains(ki.image, y)) {
      r.surjective_witness = y;
      break;
    }
  }
  r.surjective = !r.surjective_witness;

  // a + k = b + k' for some kernel elements k, k'
  std::vector<char> reach(dom.size());
  for (Elem a = 0; a < n && !r.k_normal_witness; ++a) {
    std::fill(reach.begin(), reach.end(), 0);
    for (const Elem k : ki.kernel) reach[dom.plus(a, k)] = 1;
    for (Elem b = a + 1; b < n; ++b) {
      if (f(a) != f(b)) continue;
      const bool fixed = std::any_of(ki.kernel.begin(), ki.kernel.end(),
                                     [&](Elem k) { return reach[dom.plus(b, k)] != 0; });
      if (!fixed) {
        r.k_normal_witness = {a, b};
        break;
      }
    }
  }
  r.k_normal = !r.k_normal_witness;

  const auto closure = subtractive_closure(*f.cod, ki.image);
  const auto extra = set_difference(closure.closure, ki.image);
  if (!extra.empty()) r.i_normal_witness = extra.front();
  r.i_normal = !r.i_normal_witness;

  r.normal = r.k_normal && r.i_normal;
  return r;
}

bool is_injective(const LinearMap& f) { return classify_normality(f).injective; }
bool is_surjective(const LinearMap& f) { return kernel_image(f).image.size() == f.cod->size(); }
bool is_k_normal(const LinearMap& f) { return classify_normality(f).k_normal; }
bool is_i_normal(const LinearMap& f) { return classify_normality(f).i_normal; }

std::optional<LinearMap> find_isomorphism(const Module& m, const Module& n,
                                          std::uint64_t budget) {
  if (m->size() != n->size() || !(m->scalars == n->scalars)) return std::nullopt;
  if (cancellative_elements(*m).elements.size() != cancellative_elements(*n).elements.size()) {
    return std::nullopt;
  }
  std::optional<LinearMap> found;
  std::vector<char> hit(n->size());
  for_each_linear_extension(
      m, n, std::vector<std::optional<Elem>>(m->size()),
      [&](const LinearMap& f) {
        std::fill(hit.begin(), hit.end(), 0);
        for (const Elem v : f.map) hit[v] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return true;
        std::vector<Elem> inverse(n->size());
        for (Elem x = 0; x < f.map.size(); ++x) inverse[f.map[x]] = x;
        if (!linearity_violations(*n, *m, inverse).empty()) return true;
        found = f;
        return false;
      },
      budget);
  return found;
}

}  // namespace semimod
