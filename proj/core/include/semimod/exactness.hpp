#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semimod/morphism.hpp"
#include "semimod/subquot.hpp"

namespace semimod {

/// A composable list of maps, optionally bracketed by zero objects:
/// zero_left prepends 0 -> dom(maps[0]), zero_right appends cod(last) -> 0.
struct Sequence {
  std::vector<LinearMap> maps;
  bool zero_left = false;
  bool zero_right = false;
};

/// The maps of the sequence with the implicit zero maps made explicit.
/// Throws StructuralError if consecutive endpoints differ.
std::vector<LinearMap> materialize(const Sequence& seq);

/// Verdicts at the object between f (incoming) and g (outgoing).
struct PositionReport {
  std::size_t index = 0;  // position in the materialized sequence
  std::string object;
  bool chain = false;         // g . f = 0
  bool proper_exact = false;  // f(L) = Ker g
  bool semi_exact = false;    // closure(f(L)) = Ker g
  bool quasi_exact = false;   // semi-exact and g k-normal
  bool exact = false;         // proper-exact and g k-normal

  std::optional<Elem> image_outside_kernel;    // in f(L), g(x) != 0
  std::optional<Elem> kernel_outside_image;    // g(x) = 0, x not in f(L)
  std::optional<Elem> kernel_outside_closure;  // g(x) = 0, x not in closure
  std::optional<Elem> closure_outside_kernel;  // in closure, g(x) != 0
  std::optional<std::pair<Elem, Elem>> k_normal_witness;  // for g
};

struct ExactnessReport {
  std::vector<PositionReport> positions;
  bool chain = true;
  bool proper_exact = true;
  bool semi_exact = true;
  bool quasi_exact = true;
  bool exact = true;
};

ExactnessReport classify_exactness(const Sequence& seq);

struct ShortExactReport {
  bool short_exact = false;
  bool f_injective = false;
  bool image_is_kernel = false;  // f(L) = Ker g
  bool g_surjective = false;
  bool g_k_normal = false;
  bool f_normal = false;
  bool g_normal = false;
  /// f corestricts to a bijection L -> Ker g.
  bool kernel_iso_canonical = false;
  /// g is onto and identifies exactly the Bourne classes of f(L), i.e. it
  /// induces a bijection M/f(L) -> N.
  bool quotient_iso_canonical = false;
  /// Abstract isomorphism checks (filled when requested).
  std::optional<bool> kernel_isomorphic;
  std::optional<bool> quotient_isomorphic;
  ExactnessReport exactness;  // of 0 -> L -> M -> N -> 0
};

/// 0 -> L -f-> M -g-> N -> 0. Throws StructuralError if cod f != dom g.
ShortExactReport is_short_exact(const LinearMap& f, const LinearMap& g,
                                bool abstract_isos = true,
                                std::uint64_t budget = kDefaultBudget);

/// g induces a bijection from the Bourne quotient M/f(L) onto N.
bool induces_quotient_iso(const LinearMap& f, const LinearMap& g);

/// f is injective with image exactly Ker g.
bool corestricts_to_kernel(const LinearMap& f, const LinearMap& g);

struct Splittings {
  std::optional<LinearMap> left;   // f' with f' . f = id
  std::optional<LinearMap> right;  // g' with g . g' = id
};

/// Lexicographically first left inverse of f and right inverse of g.
Splittings find_splittings(const LinearMap& f, const LinearMap& g,
                           std::uint64_t budget = kDefaultBudget);

/// Right inverse of g only.
std::optional<LinearMap> find_section(const LinearMap& g, std::uint64_t budget = kDefaultBudget);

struct KerCoker {
  Module kernel;
  Module cokernel;  // Y / gamma(X), Bourne quotient
  Sequence sequence;  // 0 -> Ker -> X -> Y -> Coker -> 0
  ExactnessReport report;
  bool gamma_normal = false;
};

KerCoker ker_coker_sequence(const LinearMap& gamma);

}  // namespace semimod
