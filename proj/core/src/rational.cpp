#include "semimod/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace semimod {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ <= 0) throw std::invalid_argument("rational denominator must be positive");
  if (num_ < 0) throw std::invalid_argument("rational must be nonnegative");
  const auto g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational operator+(const Rational& a, const Rational& b) {
  return {checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
          checked_mul(a.den_, b.den_)};
}

Rational operator*(const Rational& a, const Rational& b) {
  return {checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_)};
}

bool operator<=(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) <= checked_mul(b.num_, a.den_);
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

RationalMatrix2 operator+(const RationalMatrix2& a, const RationalMatrix2& b) {
  RationalMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = a.e[i] + b.e[i];
  return out;
}

RationalMatrix2 operator*(const RationalMatrix2& a, const RationalMatrix2& b) {
  RationalMatrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.e[static_cast<std::size_t>(2 * r + c)] = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
  return out;
}

std::string RationalMatrix2::str() const {
  return "[" + e[0].str() + " " + e[1].str() + ";" + e[2].str() + " " + e[3].str() + "]";
}

RationalMatrix2 matrix2(Rational m00, Rational m01, Rational m10, Rational m11) {
  return {{m00, m01, m10, m11}};
}

bool in_e1(const RationalMatrix2& m) { return m.at(0, 1) == Rational(0) && m.at(1, 1) == Rational(0); }

bool in_n_geq_1(const RationalMatrix2& m) { return m.at(0, 0) <= m.at(0, 1) && m.at(1, 0) <= m.at(1, 1); }

WitnessCheck rational_witness_check(const Decompositions& d) {
  WitnessCheck out;
  const auto left = d.k + d.l;
  const auto right = d.k2 + d.l2;
  out.sums_equal = left == right;
  if (!out.sums_equal) out.notes.push_back("sums differ: " + left.str() + " vs " + right.str());
  out.components_differ = !(d.k == d.k2) || !(d.l == d.l2);
  if (!out.components_differ) out.notes.push_back("decompositions coincide");
  const std::pair<const RationalMatrix2*, bool (*)(const RationalMatrix2&)> members[] = {
      {&d.k, in_e1}, {&d.k2, in_e1}, {&d.l, in_n_geq_1}, {&d.l2, in_n_geq_1}};
  out.memberships = true;
  for (const auto& [m, pred] : members) {
    if (!pred(*m)) {
      out.memberships = false;
      out.notes.push_back(m->str() + " is not in its ideal");
    }
  }
  out.certifies_not_direct = out.sums_equal && out.components_differ && out.memberships;
  return out;
}

Decompositions not_direct_witness() {
  return {matrix2(1, 0, 0, 0), matrix2(0, 1, 0, 0), matrix2(0, 0, 0, 0), matrix2(1, 1, 0, 0)};
}

Decompositions zero_control() {
  const auto z = matrix2(0, 0, 0, 0);
  return {z, z, z, z};
}

Decompositions perturbed_witness() {
  return {matrix2(1, 0, 0, 0), matrix2(0, 2, 0, 0), matrix2(0, 0, 0, 0), matrix2(1, 1, 0, 0)};
}

}  // namespace semimod
