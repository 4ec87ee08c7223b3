#include "semimod/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "semimod/catalog.hpp"
#include "semimod/model_io.hpp"
#include "semimod/projectivity.hpp"
#include "semimod/report.hpp"
#include "semimod/universe.hpp"

namespace semimod {

using json = nlohmann::json;

namespace {

bool same_scalars(const Module& a, const Module& b) { return a->scalars == b->scalars; }

// Naturals and Boolean-scalar semimodules of size <= 4, with every hom-set
// between members and a cache of projectivity verdicts.
struct Universe {
  std::vector<Module> members;
  std::map<std::pair<const FiniteSemimodule*, const FiniteSemimodule*>, std::vector<LinearMap>> homs;
  std::vector<LinearMap> maps;
  std::vector<NormalityReport> normality;  // parallel to maps
  std::map<const FiniteSemimodule*, std::vector<std::size_t>> by_dom;
  std::map<const FiniteSemimodule*, std::vector<std::size_t>> by_cod;
  std::map<std::tuple<int, const FiniteSemimodule*, const FiniteSemimodule*>, bool> verdicts;

  const std::vector<LinearMap>& hom(const Module& a, const Module& b) const {
    return homs.at({a.get(), b.get()});
  }

  bool verdict(Flavor flavor, const Module& p, const Module& m) {
    const auto key = std::make_tuple(static_cast<int>(flavor), p.get(), m.get());
    if (auto it = verdicts.find(key); it != verdicts.end()) return it->second;
    const bool v = is_relatively_projective(p, m, flavor);
    verdicts.emplace(key, v);
    return v;
  }
};

Universe& universe() {
  static Universe u = [] {
    Universe out;
    out.members = commutative_monoids(4);
    for (auto& m : boolean_semimodules(4)) out.members.push_back(m);
    for (const auto& a : out.members) {
      for (const auto& b : out.members) {
        if (!same_scalars(a, b)) continue;
        auto homs = enumerate_hom(a, b);
        for (const auto& h : homs) {
          out.by_dom[a.get()].push_back(out.maps.size());
          out.by_cod[b.get()].push_back(out.maps.size());
          out.maps.push_back(h);
          out.normality.push_back(classify_normality(h));
        }
        out.homs.emplace(std::make_pair(a.get(), b.get()), std::move(homs));
      }
    }
    return out;
  }();
  return u;
}

std::vector<Module> same_scalar_members(const Module& m) {
  std::vector<Module> out;
  for (const auto& x : universe().members)
    if (same_scalars(x, m)) out.push_back(x);
  return out;
}

// A loadable model file holding the instances of a counterexample.
class Bundle {
 public:
  Bundle& module(const Module& m) {
    modules_[m->name] = semimodule_json(*m);
    return *this;
  }
  Bundle& map(const std::string& name, const LinearMap& f) {
    module(f.dom);
    module(f.cod);
    morphisms_[name] = to_json(f);
    return *this;
  }
  json done() const {
    json out{{"format", kFormatVersion}};
    if (!modules_.empty()) out["semimodules"] = modules_;
    if (!morphisms_.empty()) out["morphisms"] = morphisms_;
    return out;
  }

 private:
  json modules_ = json::object();
  json morphisms_ = json::object();
};

class Runner {
 public:
  Runner(std::string suite, const LawOptions& options, std::size_t default_samples)
      : options_(options), rng_(options.seed) {
    result.suite = std::move(suite);
    result.seed = options.seed;
    result.samples = options.samples ? options.samples : default_samples;
  }

  LawResult result;

  Rng& rng() { return rng_; }
  std::size_t samples() const { return result.samples; }
  std::uint64_t budget() const { return options_.budget; }
  bool failed() const { return !result.passed; }

  /// Indices of the exhaustive cases to run.
  std::vector<std::size_t> select(std::size_t total) {
    std::vector<std::size_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    if (options_.samples == 0 || options_.samples >= total) return idx;
    for (std::size_t i = 0; i < options_.samples; ++i) {
      std::swap(idx[i], idx[i + rng_.below(total - i)]);
    }
    idx.resize(options_.samples);
    std::sort(idx.begin(), idx.end());
    return idx;
  }

  void hit(const std::string& key, std::size_t by = 1) {
    result.stats[key] = result.stats.value(key, std::size_t{0}) + by;
  }

  /// Records the first counterexample; returns `ok`.
  bool check(bool ok, const std::string& statement, const std::function<json()>& details,
             const std::function<json()>& model) {
    if (ok || failed()) return ok;
    result.passed = false;
    result.counterexample = {{"case", result.cases},
                             {"statement", statement},
                             {"details", details()},
                             {"model", model()}};
    return false;
  }

 private:
  const LawOptions& options_;
  Rng rng_;
};

std::size_t pick_index(Runner& r, const std::vector<std::size_t>& pool) { return pool[r.rng().below(pool.size())]; }

// ---------------------------------------------------------------- morphisms

void suite_i_normal(Runner& r) {
  auto& u = universe();
  std::vector<std::size_t> injective, injective_i, surjective, surjective_k;
  for (std::size_t i = 0; i < u.maps.size(); ++i) {
    const auto& n = u.normality[i];
    if (n.injective) injective.push_back(i);
    if (n.injective && n.i_normal) injective_i.push_back(i);
    if (n.surjective) surjective.push_back(i);
    if (n.surjective && n.k_normal) surjective_k.push_back(i);
  }
  for (std::size_t s = 0; s < r.samples() && !r.failed(); ++s) {
    std::size_t fi = 0, gi = 0;
    switch (s % 4) {
      case 0: gi = pick_index(r, injective); break;
      case 1: gi = pick_index(r, injective_i); break;
      case 2: fi = pick_index(r, surjective); break;
      default: fi = pick_index(r, surjective_k); break;
    }
    if (s % 4 < 2) fi = pick_index(r, u.by_cod.at(u.maps[gi].dom.get()));
    else gi = pick_index(r, u.by_dom.at(u.maps[fi].cod.get()));
    const auto& f = u.maps[fi];
    const auto& g = u.maps[gi];
    const auto& nf = u.normality[fi];
    const auto& ng = u.normality[gi];
    const auto gf = compose(g, f);
    const auto ngf = classify_normality(gf);
    auto details = [&] {
      return json{{"f", to_json(nf)}, {"g", to_json(ng)}, {"g_after_f", to_json(ngf)}};
    };
    auto model = [&] { return Bundle().map("f", f).map("g", g).done(); };
    auto check = [&](bool ok, const char* statement) { r.check(ok, statement, details, model); };

    if (ng.injective) {
      r.hit("g injective");
      check(nf.k_normal == ngf.k_normal, "g injective => (f k-normal <=> g.f k-normal)");
      check(!ngf.i_normal || nf.i_normal, "g injective, g.f i-normal => f i-normal");
      check(!ngf.normal || nf.normal, "g injective, g.f normal => f normal");
      if (ng.i_normal) {
        r.hit("g injective and i-normal");
        check(nf.i_normal == ngf.i_normal, "g injective i-normal => (f i-normal <=> g.f i-normal)");
        check(nf.normal == ngf.normal, "g injective i-normal => (f normal <=> g.f normal)");
      }
    }
    if (nf.surjective) {
      r.hit("f surjective");
      check(ng.i_normal == ngf.i_normal, "f surjective => (g i-normal <=> g.f i-normal)");
      check(!ngf.k_normal || ng.k_normal, "f surjective, g.f k-normal => g k-normal");
      check(!ngf.normal || ng.normal, "f surjective, g.f normal => g normal");
      if (nf.k_normal) {
        r.hit("f surjective and k-normal");
        check(ng.k_normal == ngf.k_normal, "f surjective k-normal => (g k-normal <=> g.f k-normal)");
        check(ng.normal == ngf.normal, "f surjective k-normal => (g normal <=> g.f normal)");
      }
    }
    ++r.result.cases;
  }
}

void suite_morphisms(Runner& r) {
  auto& u = universe();
  for (std::size_t s = 0; s < r.samples() && !r.failed(); ++s) {
    const auto fi = r.rng().below(u.maps.size());
    const auto& f = u.maps[fi];
    const auto& nf = u.normality[fi];
    const auto gi = pick_index(r, u.by_dom.at(f.cod.get()));
    const auto hi = pick_index(r, u.by_dom.at(u.maps[gi].cod.get()));
    const auto& g = u.maps[gi];
    const auto& h = u.maps[hi];
    auto model = [&] { return Bundle().map("f", f).map("g", g).map("h", h).done(); };
    auto none = [] { return json(nullptr); };
    r.check(!nf.surjective || nf.i_normal, "surjective => i-normal", [&] { return to_json(nf); }, model);
    r.check(!nf.injective || nf.k_normal, "injective => k-normal", [&] { return to_json(nf); }, model);
    r.check(compose(h, compose(g, f)).map == compose(compose(h, g), f).map,
            "composition is associative", none, model);
    const auto& homs = u.hom(f.dom, f.cod);
    r.check(!homs.empty() && is_zero(homs.front()), "Hom(P,M) starts with the zero map", none, model);
    const auto other = homs[r.rng().below(homs.size())];
    const auto sum = add_maps(f, other);
    r.check(std::any_of(homs.begin(), homs.end(), [&](const LinearMap& x) { return x.map == sum.map; }),
            "Hom(P,M) is closed under addition", [&] { return json{{"other", to_json(other)}}; },
            model);
    ++r.result.cases;
  }
}

// ---------------------------------------------------------------- subquotients

void suite_subquot(Runner& r) {
  auto& u = universe();
  for (std::size_t s = 0; s < r.samples() && !r.failed(); ++s) {
    const auto& m = u.members[r.rng().below(u.members.size())];
    const auto n = m->size();
    auto model = [&] { return Bundle().module(m).done(); };
    std::vector<std::pair<Elem, Elem>> a, b;
    for (int i = 0; i < 2; ++i) {
      a.emplace_back(static_cast<Elem>(r.rng().below(n)), static_cast<Elem>(r.rng().below(n)));
      b.emplace_back(static_cast<Elem>(r.rng().below(n)), static_cast<Elem>(r.rng().below(n)));
    }
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const auto ga = generated_congruence(m, a);
    const auto gab = generated_congruence(m, ab);
    auto pairs_json = [&] { return json{{"a", a}, {"b", b}}; };
    r.check(ga.refines(gab), "generated congruence is monotone in its pairs", pairs_json, model);
    r.check(generated_congruence(ga, {}) == ga, "closing a congruence again changes nothing", pairs_json, model);
    r.check(is_congruence(*m, ga.class_of), "generated relation is a congruence", pairs_json, model);
    for (const auto& rho : enumerate_congruences(m, r.budget())) {
      std::vector<std::pair<Elem, Elem>> transversal;
      for (const auto& cl : rho.classes())
        for (const Elem x : cl) transversal.emplace_back(cl.front(), x);
      r.check(generated_congruence(m, transversal) == rho,
              "each enumerated congruence is generated by its pairs",
              [&] { return to_json(rho); }, model);
    }
    for (const auto& entry : enumerate_subsemimodules(m, r.budget())) {
      const auto c = subtractive_closure(*m, entry.sub.elements);
      const auto cc = subtractive_closure(*m, c.closure);
      const bool extensive = std::includes(c.closure.begin(), c.closure.end(),
                                           entry.sub.elements.begin(), entry.sub.elements.end());
      r.check(extensive && cc.closure == c.closure && cc.is_subtractive,
              "subtractive closure is extensive and idempotent",
              [&] { return json{{"L", entry.sub.elements}, {"closure", c.closure}}; }, model);
      r.check(c.is_subtractive == entry.subtractive, "enumeration flags subtractive subsemimodules",
              [&] { return json{{"L", entry.sub.elements}}; }, model);
    }
    ++r.result.cases;
  }
}

void suite_reduction(Runner& r) {
  auto& u = universe();
  const auto idx = r.select(u.members.size());
  for (const auto i : idx) {
    if (r.failed()) break;
    const auto& m = u.members[i];
    auto model = [&] { return Bundle().module(m).done(); };
    for (const auto& entry : enumerate_subsemimodules(m, r.budget())) {
      const auto q = quotient(entry.sub);
      const auto nr = classify_normality(q.projection);
      const auto closure = subtractive_closure(*m, entry.sub.elements).closure;
      r.check(nr.surjective && nr.k_normal && kernel_image(q.projection).kernel == closure,
              "Bourne projection is a normal epimorphism with kernel the closure",
              [&] { return json{{"L", entry.sub.elements}, {"projection", to_json(nr)}}; }, model);
      r.hit("Bourne projections");
    }
    for (const auto fi : u.by_dom.at(m.get())) {
      const auto& f = u.maps[fi];
      if (!u.normality[fi].surjective) continue;
      auto fmodel = [&] { return Bundle().map("f", f).done(); };
      std::size_t count = 0;
      Congruence rho{m, normalize_partition(f.map, &count), 0};
      rho.class_count = count;
      const auto q = quotient(rho);
      std::vector<Elem> induced(q.apex->size());
      for (Elem x = 0; x < m->size(); ++x) induced[q.projection(x)] = f(x);
      auto phi = make_linear_map(q.apex, f.cod, induced);
      bool iso = phi.ok() && is_injective(*phi.value) && is_surjective(*phi.value);
      if (iso) {
        std::vector<Elem> inverse(f.cod->size());
        for (Elem c = 0; c < induced.size(); ++c) inverse[induced[c]] = c;
        iso = make_linear_map(f.cod, q.apex, inverse).ok();
      }
      r.check(iso, "a surjection is isomorphic under M to the quotient by its kernel congruence",
              [&] { return json{{"kernel_congruence", rho.class_of}}; }, fmodel);
      r.hit("surjections");
      if (u.normality[fi].k_normal) {
        const auto bourne = bourne_congruence(m, kernel_image(f).kernel);
        r.check(bourne == rho, "a normal epimorphism identifies exactly the Bourne classes of its kernel",
                [&] { return json{{"kernel_congruence", rho.class_of}, {"bourne", bourne.class_of}}; },
                fmodel);
        r.hit("normal epimorphisms");
      }
    }
    ++r.result.cases;
  }
}

// ---------------------------------------------------------------- category

void suite_transfers(Runner& r) {
  auto& u = universe();
  std::vector<std::size_t> surjective, i_normal, normal_epi, injective;
  std::map<const FiniteSemimodule*, std::vector<std::size_t>> normal_epi_by_dom;
  for (std::size_t i = 0; i < u.maps.size(); ++i) {
    const auto& n = u.normality[i];
    if (n.surjective) surjective.push_back(i);
    if (n.i_normal) i_normal.push_back(i);
    if (n.surjective && n.k_normal) {
      normal_epi.push_back(i);
      normal_epi_by_dom[u.maps[i].dom.get()].push_back(i);
    }
    if (n.injective) injective.push_back(i);
  }
  const char* statements[] = {
      "f surjective => f' surjective", "f i-normal => f' i-normal",
      "f normal epimorphism => f' normal epimorphism",
      "f injective and g normal epimorphism => f' injective"};
  for (int part = 0; part < 4 && !r.failed(); ++part) {
    for (std::size_t s = 0; s < r.samples() && !r.failed(); ++s) {
      std::size_t fi = 0, gi = 0;
      switch (part) {
        case 0: fi = pick_index(r, surjective); break;
        case 1: fi = pick_index(r, i_normal); break;
        case 2: fi = pick_index(r, normal_epi); break;
        default: fi = pick_index(r, injective); break;
      }
      const auto* l = u.maps[fi].dom.get();
      gi = part == 3 ? pick_index(r, normal_epi_by_dom.at(l)) : pick_index(r, u.by_dom.at(l));
      const Span span{u.maps[fi], u.maps[gi]};
      const auto po = pushout(span);
      const auto nr = classify_normality(po.legs.leg_n);
      bool ok = false;
      switch (part) {
        case 0: ok = nr.surjective; break;
        case 1: ok = nr.i_normal; break;
        case 2: ok = nr.surjective && nr.k_normal; break;
        default: ok = nr.injective; break;
      }
      auto model = [&] { return Bundle().map("f", span.f).map("g", span.g).done(); };
      r.check(commutes(span, po.legs), "pushout square commutes", [] { return json(nullptr); }, model);
      r.check(ok, statements[part],
              [&] { return json{{"pushout", to_json(po)}, {"f_prime", to_json(nr)}}; }, model);
      r.hit(statements[part]);
      ++r.result.cases;
    }
  }
}

void suite_pushout_universal(Runner& r) {
  auto& u = universe();
  std::vector<Span> spans;
  // Every span over the size <= 4 universe.
  for (const auto& l : u.members)
    for (const auto& m : u.members) {
      if (!same_scalars(l, m)) continue;
      for (const auto& f : u.hom(l, m))
        for (const auto& n : u.members) {
          if (!same_scalars(l, n)) continue;
          for (const auto& g : u.hom(l, n)) spans.push_back({f, g});
        }
    }
  r.result.stats["spans_total"] = spans.size();

  // Congruences above the pushout congruence depend only on (M, N, rho).
  std::map<std::tuple<const FiniteSemimodule*, const FiniteSemimodule*, std::vector<Elem>>,
           std::vector<std::vector<Elem>>>
      above;
  const Span* current = nullptr;
  CoconeSources sources{
      [&](const Congruence& rho) {
        auto [it, fresh] = above.try_emplace({current->f.cod.get(), current->g.cod.get(), rho.class_of});
        if (fresh) {
          for (const auto& c : enumerate_congruences_above(rho, r.budget())) it->second.push_back(c.class_of);
        }
        std::vector<Congruence> out;
        out.reserve(it->second.size());
        for (const auto& labels : it->second) {
          Congruence c{rho.parent, labels, 0};
          c.class_count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
          out.push_back(std::move(c));
        }
        return out;
      },
      [&u](const Module& a, const Module& b) -> const std::vector<LinearMap>& { return u.hom(a, b); }};
  for (const auto i : r.select(spans.size())) {
    if (r.failed()) break;
    const auto& span = spans[i];
    const auto po = pushout(span);
    current = &span;
    const auto cocones = cocone_catalog(span, po, same_scalar_members(span.f.dom), sources);
    const auto check = verify_pushout_universal(span, po.legs, cocones, r.budget());
    r.hit("cocones", cocones.size());
    r.check(check.passed, "pushout has a unique mediating map to every catalog cocone",
            [&] {
              json d{{"reason", check.reason}, {"pushout", to_json(po)}};
              if (check.first_failure) {
                d["cocone_leg_m"] = to_json(cocones[*check.first_failure].leg_m);
                d["cocone_leg_n"] = to_json(cocones[*check.first_failure].leg_n);
              }
              return d;
            },
            [&] { return Bundle().map("f", span.f).map("g", span.g).done(); });
    ++r.result.cases;
  }
}

void suite_c_pushout(Runner& r) {
  auto& u = universe();
  std::vector<Module> groups;
  for (const auto& m : u.members)
    if (cancellative_elements(*m).cancellative) groups.push_back(m);
  for (std::size_t s = 0; s < r.samples() && !r.failed(); ++s) {
    Module m, n, l;
    if (s % 2 == 0) {
      m = r.rng().pick(groups);
      std::vector<Module> peers;
      for (const auto& x : groups)
        if (same_scalars(x, m)) peers.push_back(x);
      n = r.rng().pick(peers);
    } else {
      m = r.rng().pick(u.members);
      n = r.rng().pick(same_scalar_members(m));
    }
    l = r.rng().pick(same_scalar_members(m));
    const auto& fs = u.hom(l, m);
    const auto& gs = u.hom(l, n);
    const Span span{r.rng().pick(fs), r.rng().pick(gs)};
    auto model = [&] { return Bundle().map("f", span.f).map("g", span.g).done(); };
    const auto po = pushout(span);
    std::optional<Congruence> c;
    std::string error;
    try {
      c = c_pushout_relation(span, po.sum);
    } catch (const std::logic_error& e) {
      error = e.what();
    }
    r.check(c.has_value(), "C-pushout relation is a congruence", [&] { return json(error); }, model);
    if (!c) break;
    r.check(po.rho.refines(*c), "pushout congruence is contained in the C-pushout congruence",
            [&] { return json{{"pushout", po.rho.class_of}, {"c_pushout", c->class_of}}; }, model);
    const bool cancellative = cancellative_elements(*m).cancellative && cancellative_elements(*n).cancellative;
    if (cancellative) {
      r.hit("cancellative spans");
      r.check(po.rho == *c, "for cancellative M and N both congruences coincide",
              [&] { return json{{"pushout", po.rho.class_of}, {"c_pushout", c->class_of}}; }, model);
    }
    ++r.result.cases;
  }
}

void suite_d_iso(Runner& r) {
  auto& u = universe();
  for (const auto i : r.select(u.members.size())) {
    if (r.failed()) break;
    const auto& m = u.members[i];
    auto model = [&] { return Bundle().module(m).done(); };
    const auto subs = enumerate_subsemimodules(m, r.budget());
    for (const auto& k : subs) {
      for (const auto& l : subs) {
        const auto ds = is_direct_sum(*m, k.sub.elements, l.sub.elements);
        ElementSet meet;
        std::set_intersection(k.sub.elements.begin(), k.sub.elements.end(), l.sub.elements.begin(),
                              l.sub.elements.end(), std::back_inserter(meet));
        auto details = [&] { return json{{"K", k.sub.elements}, {"L", l.sub.elements}}; };
        if (!ds.direct) {
          if (meet.size() == 1) r.hit("trivial intersection, not direct");
          continue;
        }
        r.hit("direct pairs");
        r.check(meet == ElementSet{0}, "M = K (+) L => K meet L = 0", details, model);
        const auto q = quotient(k.sub);
        r.check(are_isomorphic(q.apex, as_module(l.sub).first, r.budget()),
                "M = K (+) L => M/K isomorphic to L", details, model);
      }
    }
    ++r.result.cases;
  }
}

// ---------------------------------------------------------------- exactness

// Exactness of the pieces of 0 -> L -> M -> N -> 0 against the kernel and
// quotient forms, plus the short exact characterization.
void check_exactness_equivalences(Runner& r, const LinearMap& f, const LinearMap& g,
                           const std::function<json()>& model) {
  const auto nf = classify_normality(f);
  const auto ng = classify_normality(g);
  const bool kernel_iso = corestricts_to_kernel(f, g);
  const bool quotient_iso = induces_quotient_iso(f, g);
  const auto left = classify_exactness({{f}, true, false});
  const auto right = classify_exactness({{g}, false, true});
  const auto lm = classify_exactness({{f, g}, true, false});
  const auto mn = classify_exactness({{f, g}, false, true});
  const auto full = is_short_exact(f, g, false);
  auto details = [&] {
    return json{{"f", to_json(nf)},
                {"g", to_json(ng)},
                {"kernel_iso_canonical", kernel_iso},
                {"quotient_iso_canonical", quotient_iso},
                {"sequence", to_json(full.exactness)}};
  };
  r.check(left.exact == nf.injective, "0 -> L -> M exact <=> f injective", details, model);
  r.check(right.exact == ng.surjective, "M -> N -> 0 exact <=> g surjective", details, model);
  r.check((lm.semi_exact && nf.normal) == kernel_iso,
          "0 -> L -> M -> N semi-exact and f normal <=> L = Ker(g) via f", details, model);
  r.check(lm.exact == (kernel_iso && ng.k_normal),
          "0 -> L -> M -> N exact <=> L = Ker(g) via f and g k-normal", details, model);
  r.check((mn.semi_exact && ng.normal) == quotient_iso,
          "L -> M -> N -> 0 semi-exact and g normal <=> N = M/f(L) via g", details, model);
  r.check(mn.exact == (quotient_iso && nf.i_normal),
          "L -> M -> N -> 0 exact <=> N = M/f(L) via g and f i-normal", details, model);
  r.check(full.exactness.exact == (kernel_iso && quotient_iso),
          "0 -> L -> M -> N -> 0 exact <=> L = Ker(g) and N = M/f(L)", details, model);
  r.check(full.exactness.exact == full.short_exact,
          "short exact <=> f injective, f(L) = Ker(g), g surjective and k-normal", details, model);
  if (full.exactness.exact) {
    r.hit("short exact");
    r.check(nf.normal && ng.normal, "short exact => f and g normal", details, model);
    const auto ker = as_module(Subsemimodule{g.dom, kernel_image(g).kernel}).first;
    const auto q = quotient(Subsemimodule{f.cod, kernel_image(f).image});
    r.check(are_isomorphic(f.dom, ker, r.budget()) && are_isomorphic(g.cod, q.apex, r.budget()),
            "short exact => L isomorphic to Ker(g) and N isomorphic to M/f(L)", details, model);
  }
  if (lm.exact) r.hit("exact");
  if (mn.exact) r.hit("exact");
}

void suite_exact(Runner& r) {
  std::vector<Module> members = commutative_monoids(5);
  for (auto& m : boolean_semimodules(5)) members.push_back(m);
  for (const auto i : r.select(members.size())) {
    if (r.failed()) break;
    const auto& m = members[i];
    const auto subs = enumerate_subsemimodules(m, r.budget());
    std::vector<std::pair<Module, LinearMap>> inclusions;
    std::vector<Quotient> quotients;
    for (const auto& entry : subs) {
      inclusions.push_back(as_module(entry.sub));
      quotients.push_back(quotient(entry.sub));
    }
    for (std::size_t a = 0; a < subs.size() && !r.failed(); ++a) {
      const auto& l = subs[a].sub;
      const auto& iota = inclusions[a].second;
      const auto& pi = quotients[a].projection;
      auto model = [&] { return Bundle().map("iota", iota).map("pi", pi).done(); };
      auto details = [&] { return json{{"L", l.elements}}; };
      const auto closure = subtractive_closure(*m, l.elements).closure;
      const auto closure_sub = as_module(Subsemimodule{m, closure});
      const auto seq = classify_exactness({{iota, pi}, true, true});
      const auto seq_closure = classify_exactness({{closure_sub.second, pi}, true, true});
      std::vector<Elem> into_closure;
      for (const Elem x : l.elements) {
        into_closure.push_back(static_cast<Elem>(
            std::lower_bound(closure.begin(), closure.end(), x) - closure.begin()));
      }
      const LinearMap l_to_closure{inclusions[a].first, closure_sub.first, into_closure};
      const bool short_l_closure = classify_exactness({{l_to_closure}, true, true}).exact;
      const bool kernel_is_l = kernel_image(pi).kernel == l.elements;

      r.check(seq.semi_exact, "0 -> L -> M -> M/L -> 0 is semi-exact", details, model);
      r.check(seq_closure.exact, "0 -> closure(L) -> M -> M/L -> 0 is exact", details, model);
      r.check(seq.exact == kernel_is_l && kernel_is_l == short_l_closure &&
                  short_l_closure == subs[a].subtractive,
              "exact <=> L = Ker(pi) <=> 0 -> L -> closure(L) -> 0 exact <=> L subtractive",
              [&] {
                return json{{"L", l.elements}, {"exact", seq.exact}, {"kernel_is_L", kernel_is_l},
                            {"L_to_closure_exact", short_l_closure},
                            {"subtractive", subs[a].subtractive}};
              },
              model);
      if (!subs[a].subtractive) {
        r.hit("non-subtractive L");
        r.check(!seq.proper_exact, "non-subtractive L => not proper-exact", details, model);
      }
      r.hit("subsemimodules");
      for (std::size_t b = 0; b < subs.size() && !r.failed(); ++b) {
        const auto& g = quotients[b].projection;
        check_exactness_equivalences(r, iota, g, [&] { return Bundle().map("f", iota).map("g", g).done(); });
        r.hit("sequence pairs");
      }
    }
    ++r.result.cases;
  }
  // Random composable pairs reach non-injective f and non-surjective g.
  auto& u = universe();
  Rng rng(r.result.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t extra = r.samples();
  for (std::size_t s = 0; s < extra && !r.failed(); ++s) {
    const auto fi = rng.below(u.maps.size());
    const auto& pool = u.by_dom.at(u.maps[fi].cod.get());
    const auto& f = u.maps[fi];
    const auto& g = u.maps[pool[rng.below(pool.size())]];
    check_exactness_equivalences(r, f, g, [&] { return Bundle().map("f", f).map("g", g).done(); });
    r.hit("random pairs");
  }
}

void suite_ker_coker(Runner& r) {
  auto& u = universe();
  for (std::size_t s = 0; s < r.samples() && !r.failed(); ++s) {
    const auto& gamma = u.maps[r.rng().below(u.maps.size())];
    auto model = [&] { return Bundle().map("gamma", gamma).done(); };
    const auto kc = ker_coker_sequence(gamma);
    auto details = [&] { return json{{"sequence", to_json(kc.report)}, {"gamma_normal", kc.gamma_normal}}; };
    r.check(kc.report.semi_exact, "0 -> Ker -> X -> Y -> Coker -> 0 is semi-exact", details, model);
    r.check(kc.report.exact == kc.gamma_normal, "kernel-cokernel sequence exact <=> gamma normal",
            details, model);
    const auto ki = kernel_image(gamma);
    const auto closure = subtractive_closure(*gamma.cod, ki.image).closure;
    const auto cq = quotient(Subsemimodule{gamma.cod, ki.image});
    const auto ci = as_module(Subsemimodule{gamma.cod, closure});
    r.check(classify_exactness({{ci.second, cq.projection}, true, true}).exact,
            "0 -> closure(gamma(X)) -> Y -> Y/gamma(X) -> 0 is exact", details, model);
    const auto kq = quotient(Subsemimodule{gamma.dom, ki.kernel});
    const auto kin = as_module(Subsemimodule{gamma.dom, ki.kernel});
    r.check(classify_exactness({{kin.second, kq.projection}, true, true}).exact,
            "0 -> Ker(gamma) -> X -> X/Ker(gamma) -> 0 is exact", details, model);
    if (kc.gamma_normal) r.hit("normal gamma");
    ++r.result.cases;
  }
}

void suite_s_char(Runner& r) {
  auto& u = universe();
  for (const auto i : r.select(u.members.size())) {
    if (r.failed()) break;
    const auto& m = u.members[i];
    if (m->size() < 2) continue;
    const auto simple = is_ideal_simple(m);
    std::optional<LinearMap> non_surjective;
    for (const auto& p : same_scalar_members(m)) {
      for (const auto& f : u.hom(p, m)) {
        if (!is_zero(f) && !is_surjective(f)) {
          non_surjective = f;
          break;
        }
      }
      if (non_surjective) break;
    }
    r.check(simple.ideal_simple == !non_surjective,
            "ideal-simple <=> every nonzero map into M is surjective",
            [&] {
              return json{{"ideal_simple", simple.ideal_simple},
                          {"witness", simple.witness ? json(*simple.witness) : json(nullptr)},
                          {"non_surjective", non_surjective ? to_json(*non_surjective) : json(nullptr)}};
            },
            [&] { return Bundle().module(m).done(); });
    if (simple.ideal_simple) r.hit("ideal-simple");
    ++r.result.cases;
  }
}

// ---------------------------------------------------------------- projectivity

struct Ses {
  Module middle;
  Subsemimodule kernel;
  std::pair<Module, LinearMap> inclusion;
  Quotient q;
};

std::vector<Ses> universe_ses(const Module& m, std::uint64_t budget) {
  std::vector<Ses> out;
  for (const auto& entry : enumerate_subsemimodules(m, budget)) {
    if (!entry.subtractive) continue;
    out.push_back({m, entry.sub, as_module(entry.sub), quotient(entry.sub)});
  }
  return out;
}

void suite_lr_exact(Runner& r) {
  auto& u = universe();
  std::vector<std::pair<Ses, Module>> cases;
  for (const auto& m : u.members)
    for (auto& ses : universe_ses(m, r.budget()))
      for (const auto& p : same_scalar_members(m)) cases.emplace_back(ses, p);
  r.result.stats["cases_total"] = cases.size();
  for (const auto i : r.select(cases.size())) {
    if (r.failed()) break;
    const auto& [ses, p] = cases[i];
    const auto hl = hom_monoid(p, ses.inclusion.first, r.budget());
    const auto hm = hom_monoid(p, ses.middle, r.budget());
    const auto hn = hom_monoid(p, ses.q.apex, r.budget());
    const auto pf = induced_hom_map(hl, hm, ses.inclusion.second);
    const auto pg = induced_hom_map(hm, hn, ses.q.projection);
    const auto nf = classify_normality(pf);
    const auto report = classify_exactness({{pf, pg}, true, false});
    auto model = [&] {
      return Bundle().module(p).map("f", ses.inclusion.second).map("g", ses.q.projection).done();
    };
    auto details = [&] { return json{{"(P,f)", to_json(nf)}, {"induced", to_json(report)}}; };
    r.check(nf.injective && nf.normal, "(P,f) is injective and normal", details, model);
    r.check(kernel_image(pf).image == kernel_image(pg).kernel, "Im (P,f) = Ker (P,g)", details, model);
    r.check(report.proper_exact, "0 -> Hom(P,L) -> Hom(P,M) -> Hom(P,N) is proper exact", details,
            model);
    ++r.result.cases;
  }
}

std::vector<std::pair<Module, Module>> universe_pairs() {
  std::vector<std::pair<Module, Module>> out;
  for (const auto& p : universe().members)
    for (const auto& m : same_scalar_members(p)) out.emplace_back(p, m);
  return out;
}

void suite_e_n(Runner& r) {
  auto& u = universe();
  const auto pairs = universe_pairs();
  r.result.stats["pairs_total"] = pairs.size();
  for (const auto i : r.select(pairs.size())) {
    if (r.failed()) break;
    const auto& [p, m] = pairs[i];
    const bool e = u.verdict(Flavor::e, p, m);
    const bool n = u.verdict(Flavor::normally, p, m);
    r.check(e == n, "M-e-projective <=> normally M-projective",
            [&] {
              return json{{"e", to_json(relative_projectivity(p, m, Flavor::e, false))},
                          {"normally", to_json(relative_projectivity(p, m, Flavor::normally, false))}};
            },
            [&] { return Bundle().module(p).module(m).done(); });
    if (e) r.hit("e-projective pairs");
    if (p->scalars.is_naturals()) r.hit("naturals pairs");
    else r.hit("boolean pairs");
    ++r.result.cases;
  }
}

void suite_monotonicity(Runner& r) {
  auto& u = universe();
  const auto pairs = universe_pairs();
  for (const auto i : r.select(pairs.size())) {
    if (r.failed()) break;
    const auto& [p, m] = pairs[i];
    const bool k = u.verdict(Flavor::k, p, m);
    auto model = [&] { return Bundle().module(p).module(m).done(); };
    auto none = [] { return json(nullptr); };
    r.check(!u.verdict(Flavor::e, p, m) || k, "M-e-projective => M-k-projective", none, model);
    r.check(!u.verdict(Flavor::plain, p, m) || k, "M-projective => M-k-projective", none, model);
    if (u.verdict(Flavor::plain, p, m)) r.hit("plain pairs");
    if (k) r.hit("k pairs");
    ++r.result.cases;
  }
}

void suite_char_k_proj(Runner& r) {
  auto& u = universe();
  std::size_t universe_only_disagreements = 0;
  for (const auto i : r.select(u.members.size())) {
    if (r.failed()) break;
    const auto& p = u.members[i];
    const auto peers = same_scalar_members(p);
    auto model = [&] { return Bundle().module(p).done(); };

    std::optional<Module> lhs_failure;
    for (const auto& m : peers) {
      if (!u.verdict(Flavor::k, p, m)) {
        lhs_failure = m;
        break;
      }
    }
    const bool lhs = !lhs_failure;

    // Short exact sequences 0 -> Ker(g) -> B -> P -> 0 with B in the universe.
    std::optional<LinearMap> unsplit;
    std::size_t sequences = 0;
    for (const auto& b : peers) {
      for (const auto& g : u.hom(b, p)) {
        const auto ng = classify_normality(g);
        if (!ng.surjective || !ng.k_normal) continue;
        ++sequences;
        if (!find_section(g, r.budget())) {
          unsplit = g;
          break;
        }
      }
      if (unsplit) break;
    }
    const bool rhs_universe = !unsplit;

    // Sequences through the pullbacks P x_N M of normal epimorphisms out of
    // universe members.
    for (const auto& m : peers) {
      if (unsplit) break;
      for (const auto& ses : universe_ses(m, r.budget())) {
        if (unsplit) break;
        for (const auto& h : enumerate_hom(p, ses.q.apex, r.budget())) {
          const auto pb = pullback(h, ses.q.projection);
          const auto npb = classify_normality(pb.to_a);
          ++sequences;
          r.check(npb.surjective && npb.k_normal,
                  "pullback of a normal epimorphism along P -> N is a normal epimorphism onto P",
                  [&] { return json{{"h", to_json(h)}, {"pullback", to_json(pb)}}; },
                  [&] { return Bundle().module(p).map("h", h).map("g", ses.q.projection).done(); });
          if (!find_section(pb.to_a, r.budget())) {
            unsplit = pb.to_a;
            break;
          }
        }
      }
    }
    const bool rhs = !unsplit;
    r.hit("sequences", sequences);
    if (lhs) r.hit("k-projective");
    if (lhs != rhs_universe) ++universe_only_disagreements;
    r.check(lhs == rhs, "k-projective <=> every short exact sequence ending in P right-splits",
            [&] {
              return json{{"k_projective", lhs},
                          {"failing_target", lhs_failure ? json((*lhs_failure)->name) : json(nullptr)},
                          {"unsplit", unsplit ? to_json(*unsplit) : json(nullptr)}};
            },
            model);
    ++r.result.cases;
  }
  r.result.stats["universe-only splitting disagreements"] = universe_only_disagreements;
}

void suite_proj_implies_e(Runner& r) {
  auto& u = universe();
  for (const auto i : r.select(u.members.size())) {
    if (r.failed()) break;
    const auto& p = u.members[i];
    const auto peers = same_scalar_members(p);
    auto model = [&] { return Bundle().module(p).done(); };
    // Projective = retract of a free semimodule (finite scalars only).
    if (!p->scalars.is_naturals()) {
      std::optional<std::size_t> rank;
      for (std::size_t n = 0; n <= 3 && !rank; ++n) {
        if (retract_check(p, free_module(p->scalars.ring_ptr(), n), r.budget())) rank = n;
      }
      if (rank) {
        r.hit("retracts of free");
        for (const auto& m : peers) {
          r.check(u.verdict(Flavor::e, p, m), "retract of a free semimodule => M-e-projective",
                  [&] { return json{{"free_rank", *rank}, {"M", m->name}}; }, model);
        }
      }
    }
    // Lifting along every surjection inside the universe is weaker than
    // projectivity; tally how often it still falls short of e-projectivity.
    bool plain = true;
    for (const auto& m : peers) plain = plain && u.verdict(Flavor::plain, p, m);
    if (plain) {
      r.hit("projective on the universe");
      for (const auto& m : peers) {
        if (u.verdict(Flavor::e, p, m)) continue;
        r.hit("projective on the universe but not e-projective");
        if (!r.result.stats.contains("first bounded gap")) {
          r.result.stats["first bounded gap"] = {{"P", p->name}, {"M", m->name}};
        }
        break;
      }
    }
    ++r.result.cases;
  }
}

void suite_retract_closure(Runner& r) {
  auto& u = universe();
  std::vector<std::tuple<Module, Module>> retracts;  // (K, P)
  for (const auto& [k, p] : universe_pairs()) {
    if (retract_check(k, p, r.budget())) retracts.emplace_back(k, p);
  }
  r.result.stats["retract pairs"] = retracts.size();
  for (const auto i : r.select(retracts.size())) {
    if (r.failed()) break;
    const auto& [k, p] = retracts[i];
    for (const auto& m : same_scalar_members(p)) {
      if (!u.verdict(Flavor::e, p, m)) continue;
      r.hit("triples");
      r.check(u.verdict(Flavor::e, k, m), "retract of an M-e-projective semimodule is M-e-projective",
              [&] { return json{{"K", k->name}, {"P", p->name}, {"M", m->name}}; },
              [&] { return Bundle().module(k).module(p).module(m).done(); });
    }
    ++r.result.cases;
  }
}

void suite_dsum(Runner& r) {
  auto& u = universe();
  std::vector<std::pair<Module, Module>> pairs;
  for (std::size_t a = 0; a < u.members.size(); ++a)
    for (std::size_t b = a; b < u.members.size(); ++b) {
      const auto& p1 = u.members[a];
      const auto& p2 = u.members[b];
      if (same_scalars(p1, p2) && p1->size() * p2->size() <= 8) pairs.emplace_back(p1, p2);
    }
  r.result.stats["pairs_total"] = pairs.size();
  for (const auto i : r.select(pairs.size())) {
    if (r.failed()) break;
    const auto& [p1, p2] = pairs[i];
    const auto sum = direct_sum(p1, p2).sum;
    for (const auto& m : same_scalar_members(p1)) {
      const bool whole = is_relatively_projective(sum, m, Flavor::e, r.budget());
      const bool parts = u.verdict(Flavor::e, p1, m) && u.verdict(Flavor::e, p2, m);
      r.check(whole == parts, "P1 (+) P2 M-e-projective <=> P1 and P2 M-e-projective",
              [&] { return json{{"sum", whole}, {"P1", u.verdict(Flavor::e, p1, m)},
                                {"P2", u.verdict(Flavor::e, p2, m)}, {"M", m->name}}; },
              [&] { return Bundle().module(p1).module(p2).module(m).done(); });
      r.hit("triples");
      if (!whole) r.hit("non-e-projective sums");
    }
    ++r.result.cases;
  }
}

void suite_ses_restriction(Runner& r) {
  auto& u = universe();
  std::vector<Ses> all;
  for (const auto& l : u.members)
    for (auto& ses : universe_ses(l, r.budget())) all.push_back(std::move(ses));
  r.result.stats["sequences_total"] = all.size();
  for (const auto i : r.select(all.size())) {
    if (r.failed()) break;
    const auto& ses = all[i];
    for (const auto& p : same_scalar_members(ses.middle)) {
      if (!u.verdict(Flavor::e, p, ses.middle)) continue;
      r.hit("L-e-projective cases");
      const bool k = is_relatively_projective(p, ses.inclusion.first, Flavor::e, r.budget());
      const bool m = is_relatively_projective(p, ses.q.apex, Flavor::e, r.budget());
      r.check(k && m, "P L-e-projective => P K-e-projective and M-e-projective",
              [&] { return json{{"K", k}, {"M", m}, {"kernel", ses.kernel.elements}}; },
              [&] {
                return Bundle().module(p).map("iota", ses.inclusion.second).map("pi", ses.q.projection).done();
              });
    }
    ++r.result.cases;
  }
}

void suite_sumproj(Runner& r) {
  auto& u = universe();
  for (const auto i : r.select(u.members.size())) {
    if (r.failed()) break;
    const auto& m = u.members[i];
    bool all_summands = true;
    for (const auto& entry : enumerate_subsemimodules(m, r.budget())) {
      if (entry.subtractive && !direct_complement(m, entry.sub.elements, r.budget())) {
        all_summands = false;
        break;
      }
    }
    ++r.result.cases;
    if (!all_summands) continue;
    r.hit("M with all subtractive subsemimodules summands");
    for (const auto& p : same_scalar_members(m)) {
      r.check(u.verdict(Flavor::e, p, m),
              "every subtractive subsemimodule a direct summand => every P is M-e-projective",
              [&] { return json{{"P", p->name}}; },
              [&] { return Bundle().module(p).module(m).done(); });
    }
  }
}

struct SuiteDef {
  const char* name;
  void (*run)(Runner&);
  std::size_t default_samples;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"i-normal", suite_i_normal, 1200},
      {"morphisms", suite_morphisms, 500},
      {"subquot", suite_subquot, 200},
      {"reduction", suite_reduction, 0},
      {"transfers", suite_transfers, 500},
      {"pushout-universal", suite_pushout_universal, 0},
      {"cpushout", suite_c_pushout, 500},
      {"d-iso", suite_d_iso, 0},
      {"exact", suite_exact, 2000},
      {"ker-coker", suite_ker_coker, 1000},
      {"s-char", suite_s_char, 0},
      {"lr-exact", suite_lr_exact, 0},
      {"e=n", suite_e_n, 0},
      {"monotonicity", suite_monotonicity, 0},
      {"char-k-proj", suite_char_k_proj, 0},
      {"proj-implies-e", suite_proj_implies_e, 0},
      {"retract-closure", suite_retract_closure, 0},
      {"dsum", suite_dsum, 0},
      {"ses-restriction", suite_ses_restriction, 0},
      {"sumproj", suite_sumproj, 0},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

LawResult run_law_suite(const std::string& name, const LawOptions& options) {
  for (const auto& s : suites()) {
    if (name != s.name) continue;
    Runner r(name, options, s.default_samples);
    s.run(r);
    return std::move(r.result);
  }
  throw StructuralError("unknown law suite '" + name + "'");
}

json to_json(const LawResult& r) {
  return {{"suite", r.suite},  {"passed", r.passed}, {"cases", r.cases},
          {"seed", r.seed},    {"samples", r.samples}, {"stats", r.stats},
          {"counterexample", r.counterexample}};
}

}  // namespace semimod
