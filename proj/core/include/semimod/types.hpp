#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semimod {

/// Dense element index into a finite carrier {0, ..., n-1}. Index 0 is
/// always the additive identity of a validated structure.
using Elem = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Elem>;

/// Upper bound on search-tree leaves for hom-set and lattice enumerations.
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

/// Row-major table of element indices (operation tables and action tables).
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Elem fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Table(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  const std::vector<Elem>& data() const { return data_; }

  std::vector<std::vector<Elem>> to_rows() const;

  bool operator==(const Table&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Malformed input: ragged tables, out-of-range entries, mismatched
/// endpoints, unknown names.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One failed axiom or equation together with the lexicographically least
/// tuple that witnesses the failure.
struct Violation {
  std::string axiom;
  std::vector<Elem> witness;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

/// Outcome of validating raw data: either a value or the complete list of
/// violations. `relabel[old] = new` records the carrier permutation applied
/// to move the additive identity to index 0 (identity when nothing moved).
template <class T>
struct Validated {
  std::optional<T> value;
  std::vector<Violation> violations;
  std::vector<Elem> relabel;

  bool ok() const { return value.has_value(); }
};

bool contains(const ElementSet& s, Elem x);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet full_set(std::size_t n);

}  // namespace semimod
