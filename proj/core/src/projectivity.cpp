#include "semimod/projectivity.hpp"

#include <set>

#include "semimod/catalog.hpp"

namespace semimod {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::plain: return "plain";
    case Flavor::k: return "k";
    case Flavor::e: return "e";
    case Flavor::normally: return "normally";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(const std::string& s) {
  if (s == "plain") return Flavor::plain;
  if (s == "k") return Flavor::k;
  if (s == "e" || s == "hom_functor") return Flavor::e;
  if (s == "normally") return Flavor::normally;
  return std::nullopt;
}

Elem HomMonoid::index_of(const LinearMap& h) const {
  const auto it = index_.find(h.map);
  if (it == index_.end()) throw StructuralError("map is not in Hom(" + source->name + "," + target->name + ")");
  return it->second;
}

namespace {

HomMonoid build_hom_monoid(const Module& p, const Module& m, std::vector<LinearMap> elements,
                           std::map<std::vector<Elem>, Elem>& index) {
  const auto n = elements.size();
  for (std::size_t i = 0; i < n; ++i) index[elements[i].map] = static_cast<Elem>(i);
  FiniteSemimodule mon;
  mon.name = "Hom(" + p->name + "," + m->name + ")";
  mon.add = Table(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto s = index.at(add_maps(elements[i], elements[j]).map);
      mon.add(i, j) = s;
      mon.add(j, i) = s;
    }
  }
  HomMonoid out;
  out.source = p;
  out.target = m;
  out.elements = std::move(elements);
  out.monoid = std::make_shared<const FiniteSemimodule>(std::move(mon));
  return out;
}

}  // namespace

HomMonoid hom_monoid(const Module& p, const Module& m, std::uint64_t budget) {
  std::map<std::vector<Elem>, Elem> index;
  auto out = build_hom_monoid(p, m, enumerate_hom(p, m, budget), index);
  out.index_ = std::move(index);
  return out;
}

LinearMap induced_hom_map(const HomMonoid& from, const HomMonoid& to, const LinearMap& f) {
  if (f.dom != from.target || f.cod != to.target || from.source != to.source) {
    throw StructuralError("induced map endpoints do not match the hom monoids");
  }
  LinearMap out{from.monoid, to.monoid, std::vector<Elem>(from.elements.size())};
  for (std::size_t i = 0; i < from.elements.size(); ++i) {
    out.map[i] = to.index_of(compose(f, from.elements[i]));
  }
  return out;
}

InducedHomMap induced_hom_map(const Module& p, const LinearMap& f, std::uint64_t budget) {
  auto from = hom_monoid(p, f.dom, budget);
  auto to = hom_monoid(p, f.cod, budget);
  auto map = induced_hom_map(from, to, f);
  return {std::move(from), std::move(to), std::move(map)};
}

namespace {

struct QuotientCase {
  LinearMap pi;
  std::optional<Subsemimodule> kernel;
  std::optional<std::vector<Elem>> congruence;
};

std::vector<QuotientCase> quotient_cases(const Module& m, Flavor flavor, std::uint64_t budget) {
  std::vector<QuotientCase> out;
  if (flavor == Flavor::plain) {
    for (const auto& rho : enumerate_congruences(m, budget)) {
      out.push_back({quotient(rho).projection, std::nullopt, rho.class_of});
    }
  } else {
    for (const auto& entry : enumerate_subsemimodules(m, budget)) {
      if (!entry.subtractive) continue;
      out.push_back({quotient(entry.sub).projection, entry.sub, std::nullopt});
    }
  }
  return out;
}

std::vector<Elem> pointwise(const LinearMap& a, const LinearMap& b) { return add_maps(a, b).map; }

}  // namespace

ProjectivityReport relative_projectivity(const Module& p, const Module& m, Flavor flavor,
                                         bool cross_check, std::uint64_t budget) {
  if (!(p->scalars == m->scalars)) {
    throw StructuralError(p->name + " and " + m->name + " have different scalars");
  }
  ProjectivityReport report;
  report.subject = p->name;
  report.target = m->name;
  report.flavor = flavor;

  std::map<std::vector<Elem>, Elem> index;
  auto hom_pm = build_hom_monoid(p, m, enumerate_hom(p, m, budget), index);
  const auto& homs = hom_pm.elements;

  auto fail = [&](ProjectivityWitness w) {
    report.verdict = false;
    report.witness = std::move(w);
  };

  for (auto& qc : quotient_cases(m, flavor, budget)) {
    ++report.quotients_checked;
    auto base = [&qc](std::string reason) {
      ProjectivityWitness w{std::move(reason), qc.pi, std::nullopt, qc.congruence, {}, {}, {}, {}};
      if (qc.kernel) w.kernel = qc.kernel->elements;
      return w;
    };

    if (flavor == Flavor::e) {
      auto [kmod, inclusion] = as_module(*qc.kernel);
      std::map<std::vector<Elem>, Elem> ki, ni;
      auto hom_pl = build_hom_monoid(p, kmod, enumerate_hom(p, kmod, budget), ki);
      auto hom_pn = build_hom_monoid(p, qc.pi.cod, enumerate_hom(p, qc.pi.cod, budget), ni);
      auto lookup = [](const std::map<std::vector<Elem>, Elem>& idx, const LinearMap& h) {
        return idx.at(h.map);
      };
      LinearMap first{hom_pl.monoid, hom_pm.monoid, std::vector<Elem>(hom_pl.elements.size())};
      for (std::size_t i = 0; i < hom_pl.elements.size(); ++i) {
        first.map[i] = lookup(index, compose(inclusion, hom_pl.elements[i]));
      }
      LinearMap second{hom_pm.monoid, hom_pn.monoid, std::vector<Elem>(homs.size())};
      for (std::size_t i = 0; i < homs.size(); ++i) second.map[i] = lookup(ni, compose(qc.pi, homs[i]));
      report.maps_checked += hom_pn.elements.size();
      auto induced = classify_exactness(Sequence{{first, second}, true, true});
      if (!induced.exact) {
        auto w = base("induced Hom sequence is not exact");
        const auto& mid = induced.positions[1];
        const auto& right = induced.positions[2];
        if (right.kernel_outside_image) {
          w.map = hom_pn.elements[*right.kernel_outside_image];
        } else if (mid.k_normal_witness) {
          w.lift = homs[mid.k_normal_witness->first];
          w.other_lift = homs[mid.k_normal_witness->second];
          w.map = compose(qc.pi, *w.lift);
        }
        w.induced = std::move(induced);
        fail(std::move(w));
        break;
      }
      continue;
    }

    std::map<std::vector<Elem>, std::vector<std::size_t>> lifts;
    for (std::size_t i = 0; i < homs.size(); ++i) lifts[compose(qc.pi, homs[i]).map].push_back(i);
    const std::vector<Elem> zero(p->size(), 0);
    const auto& kernel_maps = lifts[zero];

    bool failed = false;
    for_each_linear_extension(
        p, qc.pi.cod, std::vector<std::optional<Elem>>(p->size()),
        [&](const LinearMap& g) {
          ++report.maps_checked;
          const auto it = lifts.find(g.map);
          if (it == lifts.end()) {
            auto w = base("no lift");
            w.map = g;
            fail(std::move(w));
            failed = true;
            return false;
          }
          if (flavor != Flavor::normally) return true;
          const auto& h = homs[it->second.front()];
          std::set<std::vector<Elem>> reachable;
          for (const auto k : kernel_maps) reachable.insert(pointwise(h, homs[k]));
          for (const auto j : it->second) {
            bool certified = false;
            for (const auto k : kernel_maps) {
              if (reachable.count(pointwise(homs[j], homs[k]))) {
                certified = true;
                break;
              }
            }
            if (!certified) {
              auto w = base("no certificate h + h1 = h' + h2");
              w.map = g;
              w.lift = h;
              w.other_lift = homs[j];
              fail(std::move(w));
              failed = true;
              return false;
            }
          }
          return true;
        },
        budget);
    if (failed) break;
  }

  if (cross_check && (flavor == Flavor::e || flavor == Flavor::normally)) {
    report.cross_check = is_relatively_projective(
        p, m, flavor == Flavor::e ? Flavor::normally : Flavor::e, budget);
  }
  return report;
}

bool is_relatively_projective(const Module& p, const Module& m, Flavor flavor,
                              std::uint64_t budget) {
  return relative_projectivity(p, m, flavor, false, budget).verdict;
}

GlobalReport bounded_global_projectivity(const Module& p, const std::vector<Module>& universe,
                                         std::size_t n_max, Flavor flavor,
                                         std::uint64_t budget) {
  GlobalReport out;
  out.subject = p->name;
  out.flavor = flavor;
  if (!p->scalars.is_naturals()) {
    out.retract_of_free = false;
    for (std::size_t n = 0; n <= n_max; ++n) {
      auto free = free_module(p->scalars.ring_ptr(), n);
      if (auto w = retract_check(p, free, budget)) {
        out.retract_of_free = true;
        out.free_rank = n;
        out.retract = std::move(w);
        break;
      }
    }
  }
  for (const auto& m : universe) {
    if (!(m->scalars == p->scalars)) {
      ++out.skipped_targets;
      continue;
    }
    auto r = relative_projectivity(p, m, flavor, true, budget);
    out.universe_verdict = out.universe_verdict && r.verdict;
    out.per_target.push_back(std::move(r));
  }
  return out;
}

}  // namespace semimod
