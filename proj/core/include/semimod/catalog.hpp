#pragma once

#include <string>
#include <variant>
#include <vector>

#include "semimod/algebra.hpp"

namespace semimod {

/// {0,1} with 1+1 = 1.
Semiring boolean_semiring();

/// The three-element semiring B(3,1): 1+1 = 2, 1+2 = 1, 2+2 = 2,
/// 2*2 = 2, with 0 additive and 1 multiplicative identity.
Semiring b31_semiring();

/// The two-element field.
Semiring field_f2();

/// 2x2 matrices over a finite semiring; entry (r,c) of element x is digit
/// 2r+c of x in base |S| (row-major, least significant first).
Semiring matrix_semiring(const Semiring& base);

/// {0} over the given scalars.
Module zero_module(const ScalarDomain& scalars = ScalarDomain::naturals());

/// Monogenic commutative monoid {0, a, ..., (k+n-1)a} with (k+n)a = ka.
Module cyclic_monoid(std::size_t index, std::size_t period);

/// {0,1} with 1+1 = 0 as a commutative monoid.
Module z2_monoid();

/// (S, +) as a semimodule over the naturals.
Module additive_monoid(const Semiring& s);

/// S acting on itself by left multiplication.
Module regular_module(const Semiring& s);

/// S^rank with componentwise action.
Module free_module(const Semiring& s, std::size_t rank);

using Instance = std::variant<Semiring, Module>;

/// Catalog lookup. Names:
///   B, B31, F2, M2(X)      semirings
///   Z2, Zero, C(k,n)       commutative monoids (naturals scalars)
///   reg(X), free(X,n)      X over itself, X^n
///   Zero(X)                zero semimodule over X
///   A+B                    direct sum of two catalog semimodules
/// A semiring name used where a semimodule is expected denotes its additive
/// monoid. Throws StructuralError on unknown names.
Instance builtin_instance(const std::string& name);
Module builtin_module(const std::string& name);
Semiring builtin_semiring(const std::string& name);

}  // namespace semimod
