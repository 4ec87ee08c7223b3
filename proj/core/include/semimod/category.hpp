#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semimod/morphism.hpp"
#include "semimod/subquot.hpp"

namespace semimod {

/// M (+) N with carrier pairs (a, b) encoded as a * |N| + b.
struct DirectSum {
  Module sum;
  LinearMap inject_left;
  LinearMap inject_right;
  LinearMap project_left;
  LinearMap project_right;

  Elem pair(Elem a, Elem b) const { return a * static_cast<Elem>(inject_right.dom->size()) + b; }
};

DirectSum direct_sum(const Module& m, const Module& n, std::string name = {});

struct DirectSumCheck {
  bool direct = false;
  std::optional<Elem> uncovered;  // not of the form k + l
  /// m = k1 + l1 = k2 + l2 with (k1,l1) != (k2,l2): {m, k1, l1, k2, l2}
  std::optional<std::vector<Elem>> non_unique;
};

/// M = K (+) L internally: K + L = M with unique decompositions.
DirectSumCheck is_direct_sum(const FiniteSemimodule& m, const ElementSet& k, const ElementSet& l);

/// A complement L with M = K (+) L, searched over all subsemimodules.
std::optional<Subsemimodule> direct_complement(const Module& m, const ElementSet& k,
                                               std::uint64_t budget = kDefaultBudget);

/// f: L -> M and g: L -> N.
struct Span {
  LinearMap f;
  LinearMap g;
};

/// leg_m: M -> P and leg_n: N -> P.
struct Cospan {
  LinearMap leg_m;
  LinearMap leg_n;
};

bool commutes(const Span& span, const Cospan& cocone);

struct PullbackResult {
  Module apex;
  LinearMap to_a;  // (a, b) -> a
  LinearMap to_b;  // (a, b) -> b
  ElementSet pairs;  // the apex as a subset of A (+) B
  DirectSum sum;
};

/// {(a, b) : f(a) = g(b)} for f: A -> C, g: B -> C.
PullbackResult pullback(const LinearMap& f, const LinearMap& g);

struct PushoutResult {
  Module apex;
  Cospan legs;  // m -> [(m,0)], n -> [(0,n)]
  Congruence rho;
  DirectSum sum;
};

/// (M (+) N) / rho with rho generated by ((f(l), 0), (0, g(l))).
PushoutResult pushout(const Span& span);

/// Quotient of M (+) N by the explicit relation
///   (m1,n1) ~ (m2,n2)  iff  m1 + f(l1) = m2 + f(l2) and n1 + g(l2) = n2 + g(l1)
/// for some l1, l2. Throws std::logic_error if that relation is not a
/// congruence.
PushoutResult c_pushout(const Span& span);

/// The explicit C-pushout relation as a partition of M (+) N.
Congruence c_pushout_relation(const Span& span, const DirectSum& sum);

struct CoconeCheck {
  std::size_t mediating_count = 0;
  std::optional<LinearMap> mediating;
};

struct UniversalCheck {
  bool passed = false;
  std::string reason;
  std::vector<CoconeCheck> cocones;
  std::optional<std::size_t> first_failure;
};

/// For every cocone, counts maps phi: P -> Q with phi . leg_m = cocone.leg_m
/// and phi . leg_n = cocone.leg_n; passes when the candidate commutes and
/// each count is exactly one.
UniversalCheck verify_pushout_universal(const Span& span, const Cospan& candidate,
                                        const std::vector<Cospan>& cocones,
                                        std::uint64_t budget = kDefaultBudget);

/// Cocones for a span: the legs of every quotient of M (+) N that contains
/// the pushout congruence, and every commuting leg pair into each target.
std::vector<Cospan> cocone_catalog(const Span& span, const PushoutResult& pushout,
                                   const std::vector<Module>& targets,
                                   std::uint64_t budget = kDefaultBudget);

/// Where cocone_catalog gets its congruences and hom-sets; sweeps pass
/// memoized versions.
struct CoconeSources {
  std::function<std::vector<Congruence>(const Congruence&)> congruences_above;
  std::function<const std::vector<LinearMap>&(const Module&, const Module&)> hom;
};

std::vector<Cospan> cocone_catalog(const Span& span, const PushoutResult& pushout,
                                   const std::vector<Module>& targets, const CoconeSources& sources);

struct RetractWitness {
  LinearMap retraction;  // theta: M -> N
  LinearMap section;     // psi: N -> M, theta . psi = id
};

/// Is N a retract of M? Returns the first (theta, psi) found.
std::optional<RetractWitness> retract_check(const Module& n, const Module& m,
                                            std::uint64_t budget = kDefaultBudget);

/// {t : t + u = 1 and tu = 0 = ut for some u}.
ElementSet comp_elements(const FiniteSemiring& t);

/// End(M): the hom-set M -> M under pointwise addition and composition
/// (st = s after t). Requires M nonzero.
struct EndomorphismSemiring {
  Semiring ring;
  std::vector<LinearMap> elements;
};

EndomorphismSemiring endomorphism_semiring(const Module& m, std::uint64_t budget = kDefaultBudget);

}  // namespace semimod
