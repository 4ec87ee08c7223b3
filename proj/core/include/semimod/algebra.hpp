#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semimod/types.hpp"

namespace semimod {

/// A finite semiring on {0, ..., n-1}. Validated instances always have
/// zero == 0.
struct FiniteSemiring {
  std::string name;
  Table add;
  Table mul;
  Elem zero = 0;
  Elem one = 1;

  std::size_t size() const { return add.rows(); }
  Elem plus(Elem a, Elem b) const { return add(a, b); }
  Elem times(Elem a, Elem b) const { return mul(a, b); }
};

using Semiring = std::shared_ptr<const FiniteSemiring>;

/// Scalars acting on a semimodule: a finite semiring, or the naturals.
///
/// In naturals mode the action n*m = m + ... + m is implied by the monoid
/// structure and is never stored, so a semimodule over the naturals is a
/// bare commutative monoid and linear maps are monoid homomorphisms.
class ScalarDomain {
 public:
  ScalarDomain() = default;  // naturals

  static ScalarDomain naturals() { return {}; }
  static ScalarDomain finite(Semiring ring);

  bool is_naturals() const { return ring_ == nullptr; }
  const FiniteSemiring& ring() const;
  const Semiring& ring_ptr() const { return ring_; }

  /// Number of explicitly stored scalars (0 in naturals mode).
  std::size_t scalar_count() const { return ring_ ? ring_->size() : 0; }

  std::string name() const;

  /// Structural equality: naturals == naturals; finite domains compare tables.
  bool operator==(const ScalarDomain& other) const;

 private:
  Semiring ring_;
};

/// A finite left semimodule. `action(s, m)` is s*m; the action table is
/// empty in naturals mode.
struct FiniteSemimodule {
  std::string name;
  ScalarDomain scalars;
  Table add;
  Table action;
  Elem zero = 0;

  std::size_t size() const { return add.rows(); }
  Elem plus(Elem a, Elem b) const { return add(a, b); }
  Elem act(Elem s, Elem m) const { return action(s, m); }
};

using Module = std::shared_ptr<const FiniteSemimodule>;

struct RawSemiring {
  std::string name;
  std::vector<std::vector<std::int64_t>> add;
  std::vector<std::vector<std::int64_t>> mul;
  std::int64_t zero = 0;
  std::int64_t one = 1;
};

struct RawSemimodule {
  std::string name;
  std::vector<std::vector<std::int64_t>> add;
  /// |S| x m action rows; must be absent in naturals mode.
  std::optional<std::vector<std::vector<std::int64_t>>> action;
};

/// Checks every semiring axiom by table scan. Throws StructuralError for
/// ragged or out-of-range tables; axiom failures come back as violations.
Validated<FiniteSemiring> validate_semiring(const RawSemiring& raw);

/// Checks the commutative-monoid and action axioms. The additive identity is
/// detected and moved to index 0.
Validated<FiniteSemimodule> validate_semimodule(const ScalarDomain& scalars,
                                                const RawSemimodule& raw);

/// Convenience: validate or throw StructuralError listing the violations.
Semiring make_semiring(const RawSemiring& raw);
Module make_semimodule(const ScalarDomain& scalars, const RawSemimodule& raw);

/// Full axiom scan of an already constructed instance (used by tests and by
/// builders that assemble tables directly).
std::vector<Violation> semiring_violations(const FiniteSemiring& s);
std::vector<Violation> semimodule_violations(const FiniteSemimodule& m);

struct CancellativeReport {
  ElementSet elements;
  bool cancellative = false;  // every element is cancellative
};

/// Additively cancellative elements: x with x+y = x+z  =>  y = z.
CancellativeReport cancellative_elements(const Table& add);
CancellativeReport cancellative_elements(const FiniteSemiring& s);
CancellativeReport cancellative_elements(const FiniteSemimodule& m);

struct IdealSimpleReport {
  bool ideal_simple = false;
  std::optional<ElementSet> witness;  // proper nonzero subsemimodule
};

/// Throws StructuralError on the one-element semimodule.
IdealSimpleReport is_ideal_simple(const Module& m);

}  // namespace semimod
