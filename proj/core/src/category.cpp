#include "semimod/category.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semimod {

DirectSum direct_sum(const Module& m, const Module& n, std::string name) {
  if (!(m->scalars == n->scalars)) {
    throw StructuralError("direct sum of " + m->name + " and " + n->name +
                          " over different scalars");
  }
  const auto a = static_cast<Elem>(m->size());
  const auto b = static_cast<Elem>(n->size());
  const auto size = static_cast<std::size_t>(a) * b;
  auto pair = [b](Elem x, Elem y) { return x * b + y; };

  FiniteSemimodule out;
  out.name = name.empty() ? m->name + "+" + n->name : std::move(name);
  out.scalars = m->scalars;
  out.add = Table(size, size);
  for (Elem x = 0; x < a; ++x)
    for (Elem y = 0; y < b; ++y)
      for (Elem u = 0; u < a; ++u)
        for (Elem v = 0; v < b; ++v) out.add(pair(x, y), pair(u, v)) = pair(m->plus(x, u), n->plus(y, v));
  const auto ns = m->scalars.scalar_count();
  if (ns > 0) {
    out.action = Table(ns, size);
    for (Elem s = 0; s < ns; ++s)
      for (Elem x = 0; x < a; ++x)
        for (Elem y = 0; y < b; ++y) out.action(s, pair(x, y)) = pair(m->act(s, x), n->act(s, y));
  }
  auto sum = std::make_shared<const FiniteSemimodule>(std::move(out));

  DirectSum ds{sum,
               {m, sum, std::vector<Elem>(a)},
               {n, sum, std::vector<Elem>(b)},
               {sum, m, std::vector<Elem>(size)},
               {sum, n, std::vector<Elem>(size)}};
  for (Elem x = 0; x < a; ++x) ds.inject_left.map[x] = pair(x, 0);
  for (Elem y = 0; y < b; ++y) ds.inject_right.map[y] = pair(0, y);
  for (Elem x = 0; x < a; ++x) {
    for (Elem y = 0; y < b; ++y) {
      ds.project_left.map[pair(x, y)] = x;
      ds.project_right.map[pair(x, y)] = y;
    }
  }
  return ds;
}

DirectSumCheck is_direct_sum(const FiniteSemimodule& m, const ElementSet& k, const ElementSet& l) {
  DirectSumCheck out;
  std::vector<std::vector<std::pair<Elem, Elem>>> decompositions(m.size());
  for (const Elem a : k)
    for (const Elem b : l) decompositions[m.plus(a, b)].emplace_back(a, b);
  for (Elem x = 0; x < m.size(); ++x) {
    const auto& d = decompositions[x];
    if (d.empty() && !out.uncovered) out.uncovered = x;
    if (d.size() > 1 && !out.non_unique) {
      out.non_unique = std::vector<Elem>{x, d[0].first, d[0].second, d[1].first, d[1].second};
    }
  }
  out.direct = !out.uncovered && !out.non_unique;
  return out;
}

std::optional<Subsemimodule> direct_complement(const Module& m, const ElementSet& k,
                                               std::uint64_t budget) {
  for (auto& entry : enumerate_subsemimodules(m, budget)) {
    if (is_direct_sum(*m, k, entry.sub.elements).direct) return entry.sub;
  }
  return std::nullopt;
}

bool commutes(const Span& span, const Cospan& cocone) {
  return compose(cocone.leg_m, span.f).map == compose(cocone.leg_n, span.g).map;
}

PullbackResult pullback(const LinearMap& f, const LinearMap& g) {
  if (f.cod != g.cod) throw StructuralError("pullback needs a shared codomain");
  auto sum = direct_sum(f.dom, g.dom);
  ElementSet pairs;
  for (Elem a = 0; a < f.dom->size(); ++a)
    for (Elem b = 0; b < g.dom->size(); ++b)
      if (f(a) == g(b)) pairs.push_back(sum.pair(a, b));
  auto [apex, inclusion] =
      as_module(Subsemimodule{sum.sum, pairs}, "PB(" + f.dom->name + "," + g.dom->name + ")");
  return {apex, compose(sum.project_left, inclusion), compose(sum.project_right, inclusion),
          std::move(pairs), std::move(sum)};
}

namespace {

void check_span(const Span& span) {
  if (span.f.dom != span.g.dom) throw StructuralError("span legs need a shared domain");
}

PushoutResult assemble(DirectSum sum, Congruence rho, std::string name) {
  auto q = quotient(rho, std::move(name));
  Cospan legs{compose(q.projection, sum.inject_left), compose(q.projection, sum.inject_right)};
  return {q.apex, std::move(legs), std::move(rho), std::move(sum)};
}

}  // namespace

PushoutResult pushout(const Span& span) {
  check_span(span);
  auto sum = direct_sum(span.f.cod, span.g.cod);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem l = 0; l < span.f.dom->size(); ++l) {
    pairs.emplace_back(sum.pair(span.f(l), 0), sum.pair(0, span.g(l)));
  }
  auto rho = generated_congruence(sum.sum, pairs);
  return assemble(std::move(sum), std::move(rho),
                  "PO(" + span.f.cod->name + "," + span.g.cod->name + ")");
}

Congruence c_pushout_relation(const Span& span, const DirectSum& sum) {
  const auto& m = *span.f.cod;
  const auto& n = *span.g.cod;
  const auto size = static_cast<Elem>(sum.sum->size());
  const auto nl = static_cast<Elem>(span.f.dom->size());
  std::vector<std::vector<char>> rel(size, std::vector<char>(size, 0));

  // key of (m1, n1) on the left is (m1 + f(l1), n1 + g(l2)); on the right
  // (m2 + f(l2), n2 + g(l1)).
  std::vector<std::vector<Elem>> bucket(size);
  for (Elem l1 = 0; l1 < nl; ++l1) {
    for (Elem l2 = 0; l2 < nl; ++l2) {
      for (auto& b : bucket) b.clear();
      for (Elem x = 0; x < m.size(); ++x)
        for (Elem y = 0; y < n.size(); ++y)
          bucket[sum.pair(m.plus(x, span.f(l2)), n.plus(y, span.g(l1)))].push_back(sum.pair(x, y));
      for (Elem x = 0; x < m.size(); ++x)
        for (Elem y = 0; y < n.size(); ++y) {
          const auto key = sum.pair(m.plus(x, span.f(l1)), n.plus(y, span.g(l2)));
          for (const Elem other : bucket[key]) rel[sum.pair(x, y)][other] = 1;
        }
    }
  }

  std::vector<Elem> labels(size);
  for (Elem a = 0; a < size; ++a) {
    labels[a] = a;
    for (Elem b = 0; b < a; ++b) {
      if (rel[a][b]) {
        labels[a] = labels[b];
        break;
      }
    }
  }
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      const bool same = labels[a] == labels[b];
      if (same != static_cast<bool>(rel[a][b])) {
        throw std::logic_error("C-pushout relation on " + sum.sum->name +
                               " is not an equivalence at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      }
    }
  }
  if (!is_congruence(*sum.sum, labels)) {
    throw std::logic_error("C-pushout relation on " + sum.sum->name + " is not a congruence");
  }
  Congruence out{sum.sum, {}, 0};
  out.class_of = normalize_partition(labels, &out.class_count);
  return out;
}

PushoutResult c_pushout(const Span& span) {
  check_span(span);
  auto sum = direct_sum(span.f.cod, span.g.cod);
  auto rho = c_pushout_relation(span, sum);
  return assemble(std::move(sum), std::move(rho),
                  "CP(" + span.f.cod->name + "," + span.g.cod->name + ")");
}

UniversalCheck verify_pushout_universal(const Span& span, const Cospan& candidate,
                                        const std::vector<Cospan>& cocones,
                                        std::uint64_t budget) {
  check_span(span);
  UniversalCheck out;
  if (!commutes(span, candidate)) {
    out.reason = "candidate legs do not commute with the span";
    return out;
  }
  const auto& apex = candidate.leg_m.cod;
  for (std::size_t i = 0; i < cocones.size(); ++i) {
    const auto& cocone = cocones[i];
    if (!commutes(span, cocone)) {
      throw StructuralError("cocone " + std::to_string(i) + " does not commute with the span");
    }
    CoconeCheck check;
    std::vector<std::optional<Elem>> fixed(apex->size());
    bool consistent = true;
    auto require = [&](Elem at, Elem value) {
      if (fixed[at] && *fixed[at] != value) consistent = false;
      fixed[at] = value;
    };
    for (Elem x = 0; x < candidate.leg_m.map.size(); ++x) require(candidate.leg_m(x), cocone.leg_m(x));
    for (Elem y = 0; y < candidate.leg_n.map.size(); ++y) require(candidate.leg_n(y), cocone.leg_n(y));
    if (consistent) {
      for_each_linear_extension(
          apex, cocone.leg_m.cod, fixed,
          [&](const LinearMap& phi) {
            if (!check.mediating) check.mediating = phi;
            return ++check.mediating_count < 2;
          },
          budget);
    }
    if (check.mediating_count != 1 && !out.first_failure) {
      out.first_failure = i;
      out.reason = check.mediating_count == 0 ? "no mediating map for cocone " + std::to_string(i)
                                              : "mediating map not unique for cocone " +
                                                    std::to_string(i);
    }
    out.cocones.push_back(std::move(check));
  }
  out.passed = !out.first_failure;
  return out;
}

std::vector<Cospan> cocone_catalog(const Span& span, const PushoutResult& po,
                                   const std::vector<Module>& targets, std::uint64_t budget) {
  std::map<std::pair<const FiniteSemimodule*, const FiniteSemimodule*>, std::vector<LinearMap>> homs;
  CoconeSources sources{
      [budget](const Congruence& rho) { return enumerate_congruences_above(rho, budget); },
      [&homs, budget](const Module& a, const Module& b) -> const std::vector<LinearMap>& {
        auto [it, fresh] = homs.try_emplace({a.get(), b.get()});
        if (fresh) it->second = enumerate_hom(a, b, budget);
        return it->second;
      }};
  return cocone_catalog(span, po, targets, sources);
}

std::vector<Cospan> cocone_catalog(const Span& span, const PushoutResult& po,
                                   const std::vector<Module>& targets, const CoconeSources& sources) {
  std::vector<Cospan> out;
  for (const auto& sigma : sources.congruences_above(po.rho)) {
    auto q = quotient(sigma);
    out.push_back({compose(q.projection, po.sum.inject_left),
                   compose(q.projection, po.sum.inject_right)});
  }
  const auto& m = span.f.cod;
  const auto& n = span.g.cod;
  for (const auto& target : targets) {
    if (!(target->scalars == m->scalars)) continue;
    const auto& from_m = sources.hom(m, target);
    const auto& from_n = sources.hom(n, target);
    std::map<std::vector<Elem>, std::vector<std::size_t>> by_restriction;
    for (std::size_t j = 0; j < from_n.size(); ++j) {
      by_restriction[compose(from_n[j], span.g).map].push_back(j);
    }
    for (const auto& a : from_m) {
      const auto it = by_restriction.find(compose(a, span.f).map);
      if (it == by_restriction.end()) continue;
      for (const auto j : it->second) out.push_back({a, from_n[j]});
    }
  }
  return out;
}

std::optional<RetractWitness> retract_check(const Module& n, const Module& m, std::uint64_t budget) {
  std::optional<RetractWitness> found;
  for_each_linear_extension(
      n, m, std::vector<std::optional<Elem>>(n->size()),
      [&](const LinearMap& psi) {
        std::vector<std::optional<Elem>> fixed(m->size());
        for (Elem x = 0; x < psi.map.size(); ++x) {
          if (fixed[psi(x)]) return true;  // not injective
          fixed[psi(x)] = x;
        }
        for_each_linear_extension(
            m, n, fixed,
            [&](const LinearMap& theta) {
              found = RetractWitness{theta, psi};
              return false;
            },
            budget);
        return !found;
      },
      budget);
  return found;
}

ElementSet comp_elements(const FiniteSemiring& t) {
  ElementSet out;
  const auto n = static_cast<Elem>(t.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (t.plus(a, b) == t.one && t.times(a, b) == t.zero && t.times(b, a) == t.zero) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

EndomorphismSemiring endomorphism_semiring(const Module& m, std::uint64_t budget) {
  auto homs = enumerate_hom(m, m, budget);
  std::map<std::vector<Elem>, std::int64_t> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index[homs[i].map] = static_cast<std::int64_t>(i);
  const auto k = homs.size();
  RawSemiring raw;
  raw.name = "End(" + m->name + ")";
  raw.add.assign(k, std::vector<std::int64_t>(k));
  raw.mul.assign(k, std::vector<std::int64_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      raw.add[i][j] = index.at(add_maps(homs[i], homs[j]).map);
      raw.mul[i][j] = index.at(compose(homs[i], homs[j]).map);
    }
  }
  raw.zero = index.at(zero_map(m, m).map);
  raw.one = index.at(identity_map(m).map);
  return {make_semiring(raw), std::move(homs)};
}

}  // namespace semimod
