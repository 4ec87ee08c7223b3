#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "semimod/algebra.hpp"

namespace semimod {

/// Every commutative monoid with at most `max_size` elements, one per
/// isomorphism class, as semimodules over the naturals. Ordered by size,
/// then by canonical table. Names are "Mon<n>.<k>".
std::vector<Module> commutative_monoids(std::size_t max_size);

/// Every semimodule over the Boolean semiring with at most `max_size`
/// elements up to isomorphism (the idempotent commutative monoids with
/// 1*m = m). Names are "Bmod<n>.<k>".
std::vector<Module> boolean_semimodules(std::size_t max_size);

/// Least table (row-major data) among all relabelings fixing 0; equal for
/// isomorphic commutative monoids.
std::vector<Elem> canonical_monoid_form(const Table& add);

/// Deterministic draws independent of the standard library's distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace semimod
