#include "semimod/exactness.hpp"

#include "semimod/catalog.hpp"

namespace semimod {

std::vector<LinearMap> materialize(const Sequence& seq) {
  if (seq.maps.empty()) throw StructuralError("empty sequence");
  for (std::size_t i = 1; i < seq.maps.size(); ++i) {
    if (seq.maps[i - 1].cod != seq.maps[i].dom) {
      throw StructuralError("sequence maps " + std::to_string(i - 1) + " and " +
                            std::to_string(i) + " are not composable");
    }
  }
  std::vector<LinearMap> out;
  if (seq.zero_left) {
    const auto& first = seq.maps.front().dom;
    out.push_back(zero_map(zero_module(first->scalars), first));
  }
  out.insert(out.end(), seq.maps.begin(), seq.maps.end());
  if (seq.zero_right) {
    const auto& last = seq.maps.back().cod;
    out.push_back(zero_map(last, zero_module(last->scalars)));
  }
  return out;
}

namespace {

PositionReport classify_position(const LinearMap& f, const LinearMap& g, std::size_t index) {
  PositionReport r;
  r.index = index;
  r.object = f.cod->name;
  const auto& mid = *f.cod;
  const auto image = kernel_image(f).image;
  const auto kernel = kernel_image(g).kernel;
  const auto closure = subtractive_closure(mid, image).closure;
  for (const Elem x : image) {
    if (g(x) != 0) {
      r.image_outside_kernel = x;
      break;
    }
  }
  for (const Elem x : kernel) {
    if (!contains(image, x) && !r.kernel_outside_image) r.kernel_outside_image = x;
    if (!contains(closure, x) && !r.kernel_outside_closure) r.kernel_outside_closure = x;
  }
  for (const Elem x : closure) {
    if (g(x) != 0) {
      r.closure_outside_kernel = x;
      break;
    }
  }
  r.k_normal_witness = classify_normality(g).k_normal_witness;
  const bool g_k_normal = !r.k_normal_witness;
  r.chain = !r.image_outside_kernel;
  r.proper_exact = image == kernel;
  r.semi_exact = closure == kernel;
  r.quasi_exact = r.semi_exact && g_k_normal;
  r.exact = r.proper_exact && g_k_normal;
  return r;
}

}  // namespace

ExactnessReport classify_exactness(const Sequence& seq) {
  const auto maps = materialize(seq);
  ExactnessReport report;
  for (std::size_t i = 1; i < maps.size(); ++i) {
    auto p = classify_position(maps[i - 1], maps[i], i);
    report.chain = report.chain && p.chain;
    report.proper_exact = report.proper_exact && p.proper_exact;
    report.semi_exact = report.semi_exact && p.semi_exact;
    report.quasi_exact = report.quasi_exact && p.quasi_exact;
    report.exact = report.exact && p.exact;
    report.positions.push_back(std::move(p));
  }
  return report;
}

bool corestricts_to_kernel(const LinearMap& f, const LinearMap& g) {
  return is_injective(f) && kernel_image(f).image == kernel_image(g).kernel;
}

bool induces_quotient_iso(const LinearMap& f, const LinearMap& g) {
  if (!is_surjective(g)) return false;
  const auto bourne = bourne_congruence(f.cod, kernel_image(f).image);
  const auto n = f.cod->size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if ((g(a) == g(b)) != bourne.related(a, b)) return false;
    }
  }
  return true;
}

ShortExactReport is_short_exact(const LinearMap& f, const LinearMap& g, bool abstract_isos,
                                std::uint64_t budget) {
  if (f.cod != g.dom) throw StructuralError("short sequence maps are not composable");
  ShortExactReport r;
  const auto nf = classify_normality(f);
  const auto ng = classify_normality(g);
  const auto image = kernel_image(f).image;
  const auto kernel = kernel_image(g).kernel;
  r.f_injective = nf.injective;
  r.image_is_kernel = image == kernel;
  r.g_surjective = ng.surjective;
  r.g_k_normal = ng.k_normal;
  r.f_normal = nf.normal;
  r.g_normal = ng.normal;
  r.short_exact = r.f_injective && r.image_is_kernel && r.g_surjective && r.g_k_normal;
  r.kernel_iso_canonical = r.f_injective && r.image_is_kernel;
  r.quotient_iso_canonical = induces_quotient_iso(f, g);
  r.exactness = classify_exactness(Sequence{{f, g}, true, true});
  if (abstract_isos) {
    auto [ker, _] = as_module(Subsemimodule{g.dom, kernel});
    r.kernel_isomorphic = are_isomorphic(f.dom, ker, budget);
    const auto q = quotient(Subsemimodule{f.cod, image});
    r.quotient_isomorphic = are_isomorphic(g.cod, q.apex, budget);
  }
  return r;
}

Splittings find_splittings(const LinearMap& f, const LinearMap& g, std::uint64_t budget) {
  Splittings out;
  std::vector<std::optional<Elem>> fixed(f.cod->size());
  bool consistent = true;
  for (Elem a = 0; a < f.dom->size(); ++a) {
    if (fixed[f(a)] && *fixed[f(a)] != a) consistent = false;
    fixed[f(a)] = a;
  }
  if (consistent) {
    for_each_linear_extension(
        f.cod, f.dom, fixed,
        [&](const LinearMap& h) {
          out.left = h;
          return false;
        },
        budget);
  }
  out.right = find_section(g, budget);
  return out;
}

std::optional<LinearMap> find_section(const LinearMap& g, std::uint64_t budget) {
  std::optional<LinearMap> found;
  for_each_linear_extension(
      g.cod, g.dom, std::vector<std::optional<Elem>>(g.cod->size()),
      [&](const LinearMap& s) {
        for (Elem c = 0; c < s.map.size(); ++c) {
          if (g(s(c)) != c) return true;
        }
        found = s;
        return false;
      },
      budget);
  return found;
}

KerCoker ker_coker_sequence(const LinearMap& gamma) {
  const auto ki = kernel_image(gamma);
  auto [kernel, inclusion] =
      as_module(Subsemimodule{gamma.dom, ki.kernel}, "Ker(" + gamma.dom->name + ")");
  auto q = quotient(Subsemimodule{gamma.cod, ki.image}, "Coker(" + gamma.cod->name + ")");
  KerCoker out{kernel, q.apex, Sequence{{inclusion, gamma, q.projection}, true, true}, {}, false};
  out.report = classify_exactness(out.sequence);
  out.gamma_normal = classify_normality(gamma).normal;
  return out;
}

}  // namespace semimod
