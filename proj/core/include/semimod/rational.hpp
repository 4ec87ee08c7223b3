#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace semimod {

/// Exact nonnegative rational in lowest terms (den > 0). Overflow throws
/// std::overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT: implicit from integers

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<=(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// [[m00, m01], [m10, m11]] stored row-major.
struct RationalMatrix2 {
  std::array<Rational, 4> e{};

  const Rational& at(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

  friend RationalMatrix2 operator+(const RationalMatrix2& a, const RationalMatrix2& b);
  friend RationalMatrix2 operator*(const RationalMatrix2& a, const RationalMatrix2& b);
  friend bool operator==(const RationalMatrix2& a, const RationalMatrix2& b) = default;

  std::string str() const;
};

RationalMatrix2 matrix2(Rational m00, Rational m01, Rational m10, Rational m11);

/// Left ideal of matrices [[a, 0], [b, 0]].
bool in_e1(const RationalMatrix2& m);
/// Left ideal of matrices [[a, c], [b, d]] with a <= c and b <= d.
bool in_n_geq_1(const RationalMatrix2& m);

/// Two decompositions x = k + l = k' + l' with k, k' in E1 and l, l' in N>=1.
struct Decompositions {
  RationalMatrix2 k, l, k2, l2;
};

struct WitnessCheck {
  bool sums_equal = false;        // k + l == k' + l'
  bool components_differ = false;  // (k, l) != (k', l')
  bool memberships = false;        // k, k' in E1 and l, l' in N>=1
  bool certifies_not_direct = false;
  std::vector<std::string> notes;
};

WitnessCheck rational_witness_check(const Decompositions& d);

/// [1 0;0 0] + [0 1;0 0] = [0 0;0 0] + [1 1;0 0].
Decompositions not_direct_witness();
/// Both decompositions of the zero matrix are 0 + 0.
Decompositions zero_control();
/// The witness with the entry 1 of the second summand replaced by 2.
Decompositions perturbed_witness();

}  // namespace semimod
