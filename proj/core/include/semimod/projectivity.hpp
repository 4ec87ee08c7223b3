#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semimod/category.hpp"
#include "semimod/exactness.hpp"

namespace semimod {

enum class Flavor { plain, k, e, normally };

std::string to_string(Flavor f);
/// Accepts plain, k, e, normally and hom_functor (an alias of e).
std::optional<Flavor> parse_flavor(const std::string& s);

/// Hom(P, M) as a commutative monoid under pointwise addition. `monoid`
/// carries it as a semimodule over the naturals whose element i is
/// elements[i]; element 0 is the zero map.
struct HomMonoid {
  Module source;
  Module target;
  std::vector<LinearMap> elements;
  Module monoid;

  Elem index_of(const LinearMap& h) const;

 private:
  friend HomMonoid hom_monoid(const Module&, const Module&, std::uint64_t);
  std::map<std::vector<Elem>, Elem> index_;
};

HomMonoid hom_monoid(const Module& p, const Module& m, std::uint64_t budget = kDefaultBudget);

/// (P, f): Hom(P, M) -> Hom(P, N), h -> f . h.
struct InducedHomMap {
  HomMonoid from;
  HomMonoid to;
  LinearMap map;  // between from.monoid and to.monoid
};

InducedHomMap induced_hom_map(const Module& p, const LinearMap& f,
                              std::uint64_t budget = kDefaultBudget);

/// Same, reusing already built hom monoids.
LinearMap induced_hom_map(const HomMonoid& from, const HomMonoid& to, const LinearMap& f);

struct ProjectivityWitness {
  std::string reason;
  LinearMap epimorphism;  // M -> N (a quotient map of M)
  std::optional<ElementSet> kernel;             // L for Bourne quotients
  std::optional<std::vector<Elem>> congruence;  // class array for plain
  std::optional<LinearMap> map;                 // g: P -> N
  std::optional<LinearMap> lift;                // h with epi . h = g
  std::optional<LinearMap> other_lift;          // h' with no certificate
  std::optional<ExactnessReport> induced;       // e: the Hom sequence
};

struct ProjectivityReport {
  std::string subject;
  std::string target;
  Flavor flavor = Flavor::plain;
  bool verdict = true;
  std::optional<ProjectivityWitness> witness;
  std::size_t quotients_checked = 0;
  std::size_t maps_checked = 0;
  /// For e and normally: the verdict of the other flavor.
  std::optional<bool> cross_check;
};

/// Is P M-projective in the given flavor? plain ranges over all quotients
/// M -> M/rho; k, e and normally over Bourne quotients by the subtractive
/// subsemimodules of M.
ProjectivityReport relative_projectivity(const Module& p, const Module& m, Flavor flavor,
                                         bool cross_check = true,
                                         std::uint64_t budget = kDefaultBudget);

/// Bare verdict without witnesses or cross-check.
bool is_relatively_projective(const Module& p, const Module& m, Flavor flavor,
                              std::uint64_t budget = kDefaultBudget);

struct GlobalReport {
  std::string subject;
  Flavor flavor = Flavor::e;
  std::string scope = "bounded verdict";
  /// Retract-of-free search (finite scalars only; absent over the naturals).
  std::optional<bool> retract_of_free;
  std::optional<std::size_t> free_rank;
  std::optional<RetractWitness> retract;
  std::vector<ProjectivityReport> per_target;
  std::size_t skipped_targets = 0;  // other scalar domain
  bool universe_verdict = true;
};

GlobalReport bounded_global_projectivity(const Module& p, const std::vector<Module>& universe,
                                         std::size_t n_max, Flavor flavor = Flavor::e,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace semimod
