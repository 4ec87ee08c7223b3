#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "semimod/algebra.hpp"

namespace semimod {

/// A linear map between two semimodules over the same scalar domain,
/// stored as its value array on the domain carrier.
struct LinearMap {
  Module dom;
  Module cod;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }

  /// Equal when the arrays agree and the endpoints are the same objects.
  bool operator==(const LinearMap& other) const {
    return dom == other.dom && cod == other.cod && map == other.map;
  }
};

/// Validates linearity. Throws StructuralError on a scalar-domain mismatch,
/// wrong array length, or out-of-range entries; equation failures come back
/// as violations with the least failing tuple.
Validated<LinearMap> make_linear_map(Module dom, Module cod, std::vector<Elem> map);

/// Violated linearity equations of an arbitrary array (no exceptions).
std::vector<Violation> linearity_violations(const FiniteSemimodule& dom,
                                            const FiniteSemimodule& cod,
                                            const std::vector<Elem>& map);

LinearMap identity_map(const Module& m);
LinearMap zero_map(const Module& dom, const Module& cod);

/// g after f. Throws StructuralError unless cod(f) is dom(g).
LinearMap compose(const LinearMap& g, const LinearMap& f);

/// Pointwise sum of two parallel maps.
LinearMap add_maps(const LinearMap& a, const LinearMap& b);

bool is_zero(const LinearMap& f);

/// Visits every linear map P -> M that agrees with `fixed` (nullopt = free),
/// in lexicographic order of value arrays. Returning false from `visit`
/// stops the search. Generator images are enumerated and extended by
/// linearity; throws ResourceError when |M|^(#free generators) > budget.
void for_each_linear_extension(const Module& p, const Module& m,
                               const std::vector<std::optional<Elem>>& fixed,
                               const std::function<bool(const LinearMap&)>& visit,
                               std::uint64_t budget = kDefaultBudget);

/// The complete hom-set, lexicographically ordered; the zero map is first.
std::vector<LinearMap> enumerate_hom(const Module& p, const Module& m,
                                     std::uint64_t budget = kDefaultBudget);

/// Size of a greedy generating set of `m` (elements added in index order).
std::size_t generator_count(const FiniteSemimodule& m);

struct KernelImage {
  ElementSet kernel;  // in dom
  ElementSet image;   // in cod
};

KernelImage kernel_image(const LinearMap& f);

struct NormalityReport {
  bool injective = false;
  bool surjective = false;
  bool k_normal = false;
  bool i_normal = false;
  bool normal = false;

  std::optional<std::pair<Elem, Elem>> injective_witness;  // a<b, f(a)=f(b)
  std::optional<Elem> surjective_witness;                  // not in the image
  std::optional<std::pair<Elem, Elem>> k_normal_witness;   // f(a)=f(b), no kernel fix
  std::optional<Elem> i_normal_witness;                    // in closure, not in image
};

NormalityReport classify_normality(const LinearMap& f);

bool is_injective(const LinearMap& f);
bool is_surjective(const LinearMap& f);
bool is_k_normal(const LinearMap& f);
bool is_i_normal(const LinearMap& f);

/// A bijective linear map M -> N whose inverse is linear, if one exists.
std::optional<LinearMap> find_isomorphism(const Module& m, const Module& n,
                                          std::uint64_t budget = kDefaultBudget);

inline bool are_isomorphic(const Module& m, const Module& n,
                           std::uint64_t budget = kDefaultBudget) {
  return find_isomorphism(m, n, budget).has_value();
}

}  // namespace semimod
