#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semimod/morphism.hpp"

namespace semimod {

struct Subsemimodule {
  Module parent;
  ElementSet elements;

  bool contains(Elem x) const { return semimod::contains(elements, x); }
  std::size_t size() const { return elements.size(); }
};

struct SubtractiveClosure {
  ElementSet closure;
  bool is_subtractive = false;
};

/// {m : m + l = l' for some l, l' in L} for an arbitrary subset L.
SubtractiveClosure subtractive_closure(const FiniteSemimodule& m, const ElementSet& subset);

bool is_subsemimodule(const FiniteSemimodule& m, const ElementSet& subset);

/// Least subsemimodule containing the seed.
Subsemimodule generated_subsemimodule(const Module& m, const ElementSet& seed);

struct SubsemimoduleEntry {
  Subsemimodule sub;
  bool subtractive = false;
};

/// All subsemimodules, ordered by (size, elements). Throws ResourceError
/// when more than `budget` are found.
std::vector<SubsemimoduleEntry> enumerate_subsemimodules(const Module& m,
                                                         std::uint64_t budget = kDefaultBudget);

/// The subsemimodule as a semimodule of its own (elements reindexed in
/// ascending order) together with the inclusion map.
std::pair<Module, LinearMap> as_module(const Subsemimodule& sub, std::string name = {});

/// A partition of the carrier, compatible with addition and the action.
/// Class ids are assigned in order of least member, so class 0 holds 0.
struct Congruence {
  Module parent;
  std::vector<Elem> class_of;
  std::size_t class_count = 0;

  bool related(Elem a, Elem b) const { return class_of[a] == class_of[b]; }
  std::vector<ElementSet> classes() const;
  /// Every pair related here is related in `other` (this refines other).
  bool refines(const Congruence& other) const;

  bool operator==(const Congruence& other) const { return class_of == other.class_of; }
};

/// Renumbers arbitrary class labels into least-member order.
std::vector<Elem> normalize_partition(const std::vector<Elem>& labels, std::size_t* count = nullptr);

/// Compatibility check for an arbitrary partition (class labels per element).
bool is_congruence(const FiniteSemimodule& m, const std::vector<Elem>& labels);

Congruence diagonal_congruence(const Module& m);
Congruence full_congruence(const Module& m);

/// Least congruence containing the pairs: union-find plus a worklist that
/// saturates under translation by every element and every scalar.
Congruence generated_congruence(const Module& m, const std::vector<std::pair<Elem, Elem>>& pairs);

/// Least congruence containing `base` and the pairs.
Congruence generated_congruence(const Congruence& base,
                                const std::vector<std::pair<Elem, Elem>>& pairs);

/// All congruences, ordered by class count (descending) then class array.
std::vector<Congruence> enumerate_congruences(const Module& m,
                                              std::uint64_t budget = kDefaultBudget);

/// All congruences containing `base`, in the same order.
std::vector<Congruence> enumerate_congruences_above(const Congruence& base,
                                                    std::uint64_t budget = kDefaultBudget);

/// m ~ m' iff m + l = m' + l' for some l, l' in L. Throws std::logic_error if
/// the relation is not a congruence (L must be a subsemimodule).
Congruence bourne_congruence(const Module& m, const ElementSet& subsemimodule);

struct Quotient {
  Module apex;
  LinearMap projection;
  Congruence congruence;
};

Quotient quotient(const Congruence& rho, std::string name = {});

/// M/L by the Bourne congruence of L.
Quotient quotient(const Subsemimodule& sub, std::string name = {});

}  // namespace semimod
