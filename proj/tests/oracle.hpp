#pragma once

// Brute-force reference implementations used as test oracles. They read the
// raw tables only and never call the library's algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "semimod/algebra.hpp"
#include "semimod/morphism.hpp"

namespace oracle {

using semimod::Elem;
using semimod::FiniteSemimodule;
using Tables = std::vector<std::vector<std::int64_t>>;

inline semimod::Module monoid(const std::string& name, const Tables& add) {
  return semimod::make_semimodule(semimod::ScalarDomain::naturals(),
                                  semimod::RawSemimodule{name, add, std::nullopt});
}

inline std::size_t n_of(const FiniteSemimodule& m) { return m.size(); }

inline std::size_t scalars(const FiniteSemimodule& m) { return m.scalars.scalar_count(); }

/// Every array cod^dom that is additive and commutes with the stored action.
inline std::vector<std::vector<Elem>> homs(const FiniteSemimodule& p, const FiniteSemimodule& m) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = p.size();
  std::vector<Elem> f(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (f[0] != 0) return;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (f[p.add(a, b)] != m.add(f[a], f[b])) return;
      for (Elem s = 0; s < scalars(p); ++s)
        for (Elem a = 0; a < n; ++a)
          if (f[p.action(s, a)] != m.action(s, f[a])) return;
      out.push_back(f);
      return;
    }
    for (Elem v = 0; v < m.size(); ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline bool closed(const FiniteSemimodule& m, const std::vector<bool>& in) {
  if (!in[0]) return false;
  for (Elem a = 0; a < m.size(); ++a) {
    if (!in[a]) continue;
    for (Elem b = 0; b < m.size(); ++b)
      if (in[b] && !in[m.add(a, b)]) return false;
    for (Elem s = 0; s < scalars(m); ++s)
      if (!in[m.action(s, a)]) return false;
  }
  return true;
}

/// All subsemimodules by subset scan, as sorted element lists.
inline std::set<std::vector<Elem>> subsemimodules(const FiniteSemimodule& m) {
  std::set<std::vector<Elem>> out;
  const std::size_t n = m.size();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<bool> in(n);
    std::vector<Elem> elems;
    for (Elem i = 0; i < n; ++i) {
      in[i] = (mask >> i) & 1U;
      if (in[i]) elems.push_back(i);
    }
    if (closed(m, in)) out.insert(elems);
  }
  return out;
}

/// {x : x + l = l' for some l, l' in L}.
inline std::vector<Elem> closure(const FiniteSemimodule& m, const std::vector<Elem>& l) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x) {
    bool hit = false;
    for (const Elem a : l)
      for (const Elem b : l)
        if (m.add(x, a) == b) hit = true;
    if (hit) out.push_back(x);
  }
  return out;
}

/// Restricted-growth labels of every partition of {0..n-1}.
inline std::vector<std::vector<Elem>> partitions(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur(n, 0);
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t i, Elem max_label) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (Elem v = 0; v <= max_label + 1; ++v) {
      cur[i] = v;
      rec(i + 1, std::max(max_label, v));
    }
  };
  if (n == 0) return {{}};
  cur[0] = 0;
  if (n == 1) return {{0}};
  rec(1, 0);
  return out;
}

inline bool compatible(const FiniteSemimodule& m, const std::vector<Elem>& labels) {
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b) {
      if (labels[a] != labels[b]) continue;
      for (Elem c = 0; c < m.size(); ++c)
        if (labels[m.add(a, c)] != labels[m.add(b, c)]) return false;
      for (Elem s = 0; s < scalars(m); ++s)
        if (labels[m.action(s, a)] != labels[m.action(s, b)]) return false;
    }
  return true;
}

inline std::vector<std::vector<Elem>> congruences(const FiniteSemimodule& m) {
  std::vector<std::vector<Elem>> out;
  for (const auto& p : partitions(m.size()))
    if (compatible(m, p)) out.push_back(p);
  return out;
}

/// Least congruence containing `pairs`: intersect every compatible
/// partition that relates all pairs.
inline std::vector<Elem> least_congruence(const FiniteSemimodule& m,
                                          const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));
  for (const auto& p : congruences(m)) {
    bool ok = true;
    for (const auto& [a, b] : pairs) ok = ok && p[a] == p[b];
    if (!ok) continue;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (p[a] != p[b]) rel[a][b] = false;
  }
  std::vector<Elem> labels(n);
  Elem next = 0;
  std::vector<bool> done(n, false);
  for (Elem a = 0; a < n; ++a) {
    if (done[a]) continue;
    for (Elem b = a; b < n; ++b)
      if (rel[a][b]) {
        labels[b] = next;
        done[b] = true;
      }
    ++next;
  }
  return labels;
}

/// m ~ m' iff m + l = m' + l' for some l, l' in L, as restricted-growth labels.
inline std::vector<Elem> bourne(const FiniteSemimodule& m, const std::vector<Elem>& l) {
  const std::size_t n = m.size();
  std::vector<Elem> labels(n, static_cast<Elem>(-1));
  Elem next = 0;
  for (Elem a = 0; a < n; ++a) {
    if (labels[a] != static_cast<Elem>(-1)) continue;
    for (Elem b = a; b < n; ++b) {
      bool rel = false;
      for (const Elem x : l)
        for (const Elem y : l)
          if (m.add(a, x) == m.add(b, y)) rel = true;
      if (rel) labels[b] = next;
    }
    ++next;
  }
  return labels;
}

inline std::vector<Elem> kernel(const semimod::LinearMap& f) {
  std::vector<Elem> out;
  for (Elem x = 0; x < f.dom->size(); ++x)
    if (f.map[x] == 0) out.push_back(x);
  return out;
}

inline std::vector<Elem> image(const semimod::LinearMap& f) {
  std::set<Elem> s(f.map.begin(), f.map.end());
  return {s.begin(), s.end()};
}

inline bool k_normal(const semimod::LinearMap& f) {
  const auto ker = kernel(f);
  const auto& d = *f.dom;
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b) {
      if (f.map[a] != f.map[b]) continue;
      bool found = false;
      for (const Elem k : ker)
        for (const Elem k2 : ker)
          if (d.add(a, k) == d.add(b, k2)) found = true;
      if (!found) return false;
    }
  return true;
}

inline bool i_normal(const semimod::LinearMap& f) {
  const auto im = image(f);
  return closure(*f.cod, im) == im;
}

/// Some bijection preserving addition and action.
inline bool isomorphic(const FiniteSemimodule& a, const FiniteSemimodule& b) {
  if (a.size() != b.size() || scalars(a) != scalars(b)) return false;
  std::vector<Elem> perm(a.size());
  for (Elem i = 0; i < a.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x) {
      for (Elem y = 0; y < a.size() && ok; ++y) ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]);
      for (Elem s = 0; s < scalars(a) && ok; ++s) ok = perm[a.action(s, x)] == b.action(s, perm[x]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
