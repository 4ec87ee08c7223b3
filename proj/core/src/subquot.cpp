#include "semimod/subquot.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <stdexcept>

namespace semimod {

namespace {

std::string set_label(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Elem{0}); }

  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Elem> parent_;
};

Congruence saturate(const Module& m, UnionFind uf, std::vector<std::pair<Elem, Elem>> work) {
  const auto n = static_cast<Elem>(m->size());
  const auto ns = static_cast<Elem>(m->scalars.scalar_count());
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (Elem c = 0; c < n; ++c) work.emplace_back(m->plus(a, c), m->plus(b, c));
    for (Elem s = 0; s < ns; ++s) work.emplace_back(m->act(s, a), m->act(s, b));
  }
  std::vector<Elem> labels(n);
  for (Elem x = 0; x < n; ++x) labels[x] = uf.find(x);
  Congruence out{m, {}, 0};
  out.class_of = normalize_partition(labels, &out.class_count);
  return out;
}

bool congruence_order(const Congruence& a, const Congruence& b) {
  if (a.class_count != b.class_count) return a.class_count > b.class_count;
  return a.class_of < b.class_of;
}

}  // namespace

SubtractiveClosure subtractive_closure(const FiniteSemimodule& m, const ElementSet& subset) {
  SubtractiveClosure out;
  for (Elem x = 0; x < m.size(); ++x) {
    const bool in = std::any_of(subset.begin(), subset.end(),
                                [&](Elem l) { return contains(subset, m.plus(x, l)); });
    if (in) out.closure.push_back(x);
  }
  out.is_subtractive = out.closure == subset;
  return out;
}

bool is_subsemimodule(const FiniteSemimodule& m, const ElementSet& subset) {
  if (!contains(subset, m.zero)) return false;
  for (const Elem a : subset) {
    for (const Elem b : subset) {
      if (!contains(subset, m.plus(a, b))) return false;
    }
    for (Elem s = 0; s < m.scalars.scalar_count(); ++s) {
      if (!contains(subset, m.act(s, a))) return false;
    }
  }
  return true;
}

Subsemimodule generated_subsemimodule(const Module& m, const ElementSet& seed) {
  std::vector<char> in(m->size());
  std::vector<Elem> members;
  std::vector<Elem> work{m->zero};
  work.insert(work.end(), seed.begin(), seed.end());
  const auto ns = static_cast<Elem>(m->scalars.scalar_count());
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    if (in[x]) continue;
    in[x] = 1;
    members.push_back(x);
    for (const Elem y : members) work.push_back(m->plus(x, y));
    for (Elem s = 0; s < ns; ++s) work.push_back(m->act(s, x));
  }
  std::sort(members.begin(), members.end());
  return {m, std::move(members)};
}

std::vector<SubsemimoduleEntry> enumerate_subsemimodules(const Module& m, std::uint64_t budget) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> queue{generated_subsemimodule(m, {}).elements};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto current = queue[i];
    for (Elem x = 0; x < m->size(); ++x) {
      if (contains(current, x)) continue;
      auto next = generated_subsemimodule(m, set_union(current, {x})).elements;
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          throw ResourceError("subsemimodule enumeration of " + m->name + " exceeds budget " +
                              std::to_string(budget));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<SubsemimoduleEntry> out;
  out.reserve(seen.size());
  for (auto& s : queue) {
    const bool subtractive = subtractive_closure(*m, s).is_subtractive;
    out.push_back({Subsemimodule{m, std::move(s)}, subtractive});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.sub.size() != b.sub.size()) return a.sub.size() < b.sub.size();
    return a.sub.elements < b.sub.elements;
  });
  return out;
}

std::pair<Module, LinearMap> as_module(const Subsemimodule& sub, std::string name) {
  const auto& parent = *sub.parent;
  const auto k = sub.elements.size();
  std::vector<Elem> index(parent.size(), 0);
  for (Elem i = 0; i < k; ++i) index[sub.elements[i]] = i;

  FiniteSemimodule out;
  out.name = name.empty() ? parent.name + set_label(sub.elements) : std::move(name);
  out.scalars = parent.scalars;
  out.add = Table(k, k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) out.add(i, j) = index[parent.plus(sub.elements[i], sub.elements[j])];
  const auto ns = parent.scalars.scalar_count();
  if (ns > 0) {
    out.action = Table(ns, k);
    for (Elem s = 0; s < ns; ++s)
      for (Elem i = 0; i < k; ++i) out.action(s, i) = index[parent.act(s, sub.elements[i])];
  }
  auto module = std::make_shared<const FiniteSemimodule>(std::move(out));
  LinearMap inclusion{module, sub.parent, sub.elements};
  return {module, inclusion};
}

std::vector<ElementSet> Congruence::classes() const {
  std::vector<ElementSet> out(class_count);
  for (Elem x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(x);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  std::vector<Elem> rep(class_count, 0);
  std::vector<char> seen(class_count, 0);
  for (Elem x = 0; x < class_of.size(); ++x) {
    const auto c = class_of[x];
    if (!seen[c]) {
      seen[c] = 1;
      rep[c] = x;
    } else if (!other.related(rep[c], x)) {
      return false;
    }
  }
  return true;
}

std::vector<Elem> normalize_partition(const std::vector<Elem>& labels, std::size_t* count) {
  std::vector<Elem> out(labels.size());
  std::vector<std::pair<Elem, Elem>> seen;  // (label, new id)
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<Elem>(seen.size()));
      out[i] = seen.back().second;
    } else {
      out[i] = it->second;
    }
  }
  if (count) *count = seen.size();
  return out;
}

bool is_congruence(const FiniteSemimodule& m, const std::vector<Elem>& labels) {
  const auto n = static_cast<Elem>(m.size());
  const auto ns = static_cast<Elem>(m.scalars.scalar_count());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (labels[a] != labels[b]) continue;
      for (Elem c = 0; c < n; ++c) {
        if (labels[m.plus(a, c)] != labels[m.plus(b, c)]) return false;
      }
      for (Elem s = 0; s < ns; ++s) {
        if (labels[m.act(s, a)] != labels[m.act(s, b)]) return false;
      }
    }
  }
  return true;
}

Congruence diagonal_congruence(const Module& m) {
  return {m, full_set(m->size()), m->size()};
}

Congruence full_congruence(const Module& m) {
  return {m, std::vector<Elem>(m->size(), 0), 1};
}

Congruence generated_congruence(const Module& m, const std::vector<std::pair<Elem, Elem>>& pairs) {
  return generated_congruence(diagonal_congruence(m), pairs);
}

Congruence generated_congruence(const Congruence& base,
                                const std::vector<std::pair<Elem, Elem>>& pairs) {
  const auto n = base.class_of.size();
  UnionFind uf(n);
  std::vector<Elem> first(base.class_count, static_cast<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    auto& f = first[base.class_of[x]];
    if (f == n) {
      f = x;
    } else {
      uf.unite(f, x);
    }
  }
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw StructuralError("congruence pair out of range");
  }
  return saturate(base.parent, std::move(uf), pairs);
}

namespace {

struct LabelHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (const Elem x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

// Least member of each element's class, for least-member-ordered labels.
std::vector<Elem> class_minima(const std::vector<Elem>& labels) {
  std::vector<Elem> first(labels.size(), static_cast<Elem>(labels.size()));
  std::vector<Elem> out(labels.size());
  for (Elem x = 0; x < labels.size(); ++x) {
    if (first[labels[x]] == labels.size()) first[labels[x]] = x;
    out[x] = first[labels[x]];
  }
  return out;
}

// Every congruence above base is a join of principal ones, and the join of
// two congruences is the join of their partitions.
std::vector<Congruence> congruences_from(const Congruence& base, std::uint64_t budget) {
  const auto n = base.class_of.size();
  std::vector<Elem> reps;
  for (const auto& cls : base.classes()) reps.push_back(cls.front());
  // Distinct principal congruences, each with one generating pair.
  std::vector<std::pair<std::vector<Elem>, std::pair<Elem, Elem>>> principals;
  {
    std::map<std::vector<Elem>, std::pair<Elem, Elem>> distinct;
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        distinct.emplace(class_minima(generated_congruence(base, {{reps[a], reps[b]}}).class_of),
                         std::pair{reps[a], reps[b]});
    principals.assign(distinct.begin(), distinct.end());
  }

  std::unordered_set<std::vector<Elem>, LabelHash> seen{base.class_of};
  std::vector<Congruence> queue{base};
  std::vector<Elem> parent(n), id(n), labels(n);
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto cur_min = class_minima(queue[i].class_of);
    for (const auto& [p, pair] : principals) {
      if (cur_min[pair.first] == cur_min[pair.second]) continue;
      parent = cur_min;
      bool grows = false;
      for (Elem x = 0; x < n; ++x) {
        Elem a = find(x), b = find(p[x]);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        grows = true;
      }
      if (!grows) continue;
      Elem next_id = 0;
      for (Elem x = 0; x < n; ++x) {
        const Elem r = find(x);
        if (r == x) id[x] = next_id++;
        labels[x] = id[r];
      }
      if (seen.count(labels)) continue;
      seen.insert(labels);
      if (seen.size() > budget) {
        throw ResourceError("congruence enumeration of " + base.parent->name + " exceeds budget " +
                            std::to_string(budget));
      }
      queue.push_back(Congruence{base.parent, labels, next_id});
    }
  }
  return queue;
}

}  // namespace

std::vector<Congruence> enumerate_congruences(const Module& m, std::uint64_t budget) {
  return enumerate_congruences_above(diagonal_congruence(m), budget);
}

std::vector<Congruence> enumerate_congruences_above(const Congruence& base, std::uint64_t budget) {
  std::vector<Congruence> out;
  if (base.class_count == base.class_of.size()) {
    out = congruences_from(base, budget);
  } else {
    // Congruences above base are the congruences of the quotient, pulled back.
    const auto q = quotient(base);
    for (const auto& sigma : congruences_from(diagonal_congruence(q.apex), budget)) {
      Congruence c{base.parent, std::vector<Elem>(base.class_of.size()), 0};
      for (Elem x = 0; x < c.class_of.size(); ++x) c.class_of[x] = sigma.class_of[base.class_of[x]];
      c.class_of = normalize_partition(c.class_of, &c.class_count);
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), congruence_order);
  return out;
}

Congruence bourne_congruence(const Module& m, const ElementSet& sub) {
  const auto n = static_cast<Elem>(m->size());
  std::vector<std::vector<char>> shifted(n, std::vector<char>(n, 0));
  for (Elem a = 0; a < n; ++a)
    for (const Elem l : sub) shifted[a][m->plus(a, l)] = 1;
  auto related = [&](Elem a, Elem b) {
    for (Elem x = 0; x < n; ++x)
      if (shifted[a][x] && shifted[b][x]) return true;
    return false;
  };

  UnionFind uf(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (related(a, b)) uf.unite(a, b);
  std::vector<Elem> labels(n);
  for (Elem x = 0; x < n; ++x) labels[x] = uf.find(x);

  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (labels[a] == labels[b] && !related(a, b)) {
        throw std::logic_error("Bourne relation of " + set_label(sub) + " in " + m->name +
                               " is not transitive");
      }
  if (!is_congruence(*m, labels)) {
    throw std::logic_error("Bourne relation of " + set_label(sub) + " in " + m->name +
                           " is not a congruence");
  }
  Congruence out{m, {}, 0};
  out.class_of = normalize_partition(labels, &out.class_count);
  return out;
}

Quotient quotient(const Congruence& rho, std::string name) {
  const auto& parent = *rho.parent;
  const auto k = rho.class_count;
  std::vector<Elem> rep(k, 0);
  for (Elem x = static_cast<Elem>(parent.size()); x-- > 0;) rep[rho.class_of[x]] = x;

  FiniteSemimodule out;
  out.name = name.empty() ? parent.name + "/~" : std::move(name);
  out.scalars = parent.scalars;
  out.add = Table(k, k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) out.add(i, j) = rho.class_of[parent.plus(rep[i], rep[j])];
  const auto ns = parent.scalars.scalar_count();
  if (ns > 0) {
    out.action = Table(ns, k);
    for (Elem s = 0; s < ns; ++s)
      for (Elem i = 0; i < k; ++i) out.action(s, i) = rho.class_of[parent.act(s, rep[i])];
  }
  auto apex = std::make_shared<const FiniteSemimodule>(std::move(out));
  return {apex, LinearMap{rho.parent, apex, rho.class_of}, rho};
}

Quotient quotient(const Subsemimodule& sub, std::string name) {
  if (name.empty()) name = sub.parent->name + "/" + set_label(sub.elements);
  return quotient(bourne_congruence(sub.parent, sub.elements), std::move(name));
}

}  // namespace semimod
