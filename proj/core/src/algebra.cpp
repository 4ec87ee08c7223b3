#include "semimod/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semimod/subquot.hpp"

namespace semimod {

Table::Table(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw StructuralError("table data does not match its shape");
  }
}

std::vector<std::vector<Elem>> Table::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

std::string to_string(const Violation& v) {
  std::ostringstream os;
  os << v.axiom;
  if (!v.witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      os << (i ? "," : "") << v.witness[i];
    }
    os << ")";
  }
  return os.str();
}

bool contains(const ElementSet& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet full_set(std::size_t n) {
  ElementSet out(n);
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

ScalarDomain ScalarDomain::finite(Semiring ring) {
  if (!ring) throw StructuralError("finite scalar domain needs a semiring");
  ScalarDomain d;
  d.ring_ = std::move(ring);
  return d;
}

const FiniteSemiring& ScalarDomain::ring() const {
  if (!ring_) throw StructuralError("naturals scalar domain has no stored semiring");
  return *ring_;
}

std::string ScalarDomain::name() const { return ring_ ? ring_->name : "naturals"; }

bool ScalarDomain::operator==(const ScalarDomain& other) const {
  if (is_naturals() || other.is_naturals()) return is_naturals() == other.is_naturals();
  if (ring_ == other.ring_) return true;
  return ring_->add == other.ring_->add && ring_->mul == other.ring_->mul &&
         ring_->one == other.ring_->one;
}

namespace {

Table to_table(const std::vector<std::vector<std::int64_t>>& rows, std::size_t expect_rows,
               std::size_t expect_cols, std::size_t range, const std::string& what) {
  if (rows.size() != expect_rows) {
    throw StructuralError(what + ": expected " + std::to_string(expect_rows) + " rows, got " +
                          std::to_string(rows.size()));
  }
  Table t(expect_rows, expect_cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != expect_cols) {
      throw StructuralError(what + ": row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " entries, expected " +
                            std::to_string(expect_cols));
    }
    for (std::size_t c = 0; c < expect_cols; ++c) {
      const auto v = rows[r][c];
      if (v < 0 || static_cast<std::size_t>(v) >= range) {
        throw StructuralError(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                              ") = " + std::to_string(v) + " out of range [0," +
                              std::to_string(range) + ")");
      }
      t(r, c) = static_cast<Elem>(v);
    }
  }
  return t;
}

// new(p[a], p[b]) = p[old(a, b)]
Table permute_binary(const Table& t, const std::vector<Elem>& p) {
  Table out(t.rows(), t.cols());
  for (std::size_t a = 0; a < t.rows(); ++a) {
    for (std::size_t b = 0; b < t.cols(); ++b) out(p[a], p[b]) = p[t(a, b)];
  }
  return out;
}

Table permute_action(const Table& t, const std::vector<Elem>& p) {
  Table out(t.rows(), t.cols());
  for (std::size_t s = 0; s < t.rows(); ++s) {
    for (std::size_t m = 0; m < t.cols(); ++m) out(s, p[m]) = p[t(s, m)];
  }
  return out;
}

std::vector<Elem> swap_to_front(std::size_t n, Elem e) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::swap(p[0], p[e]);
  return p;
}

// A missing `zero` reports the identity axiom without a witness.
void check_monoid(const Table& add, std::optional<Elem> zero, std::vector<Violation>& out) {
  const auto n = static_cast<Elem>(add.rows());
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (add(add(a, b), c) != add(a, add(b, c))) {
            out.push_back({"addition associative", {a, b, c}});
            return;
          }
  }();
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (add(a, b) != add(b, a)) {
          out.push_back({"addition commutative", {a, b}});
          return;
        }
  }();
  if (!zero) {
    out.push_back({"zero is additive identity", {}});
    return;
  }
  for (Elem a = 0; a < n; ++a) {
    if (add(*zero, a) != a || add(a, *zero) != a) {
      out.push_back({"zero is additive identity", {a}});
      break;
    }
  }
}

std::optional<Elem> find_identity(const Table& add) {
  const auto n = static_cast<Elem>(add.rows());
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = add(e, x) == x && add(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Violation> semiring_violations(const FiniteSemiring& s) {
  std::vector<Violation> out;
  const auto n = static_cast<Elem>(s.size());
  const auto& add = s.add;
  const auto& mul = s.mul;
  if (s.zero == s.one) out.push_back({"zero≠one", {s.zero}});
  check_monoid(add, s.zero, out);
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            out.push_back({"multiplication associative", {a, b, c}});
            return;
          }
  }();
  for (Elem a = 0; a < n; ++a) {
    if (mul(s.one, a) != a || mul(a, s.one) != a) {
      out.push_back({"one is multiplicative identity", {a}});
      break;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (mul(a, s.zero) != s.zero || mul(s.zero, a) != s.zero) {
      out.push_back({"zero annihilates", {a}});
      break;
    }
  }
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            out.push_back({"a(b+c)=ab+ac", {a, b, c}});
            return;
          }
  }();
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
            out.push_back({"(a+b)c=ac+bc", {a, b, c}});
            return;
          }
  }();
  return out;
}

std::vector<Violation> semimodule_violations(const FiniteSemimodule& m) {
  std::vector<Violation> out;
  check_monoid(m.add, m.zero, out);
  if (m.scalars.is_naturals()) return out;

  const auto& r = m.scalars.ring();
  const auto ns = static_cast<Elem>(r.size());
  const auto n = static_cast<Elem>(m.size());
  [&] {
    for (Elem s = 0; s < ns; ++s)
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (m.act(s, m.plus(a, b)) != m.plus(m.act(s, a), m.act(s, b))) {
            out.push_back({"s(m+m′)=sm+sm′", {s, a, b}});
            return;
          }
  }();
  [&] {
    for (Elem s = 0; s < ns; ++s)
      for (Elem t = 0; t < ns; ++t)
        for (Elem a = 0; a < n; ++a)
          if (m.act(r.plus(s, t), a) != m.plus(m.act(s, a), m.act(t, a))) {
            out.push_back({"(s+s′)m=sm+s′m", {s, t, a}});
            return;
          }
  }();
  [&] {
    for (Elem s = 0; s < ns; ++s)
      for (Elem t = 0; t < ns; ++t)
        for (Elem a = 0; a < n; ++a)
          if (m.act(r.times(s, t), a) != m.act(s, m.act(t, a))) {
            out.push_back({"(ss′)m=s(s′m)", {s, t, a}});
            return;
          }
  }();
  for (Elem a = 0; a < n; ++a) {
    if (m.act(r.one, a) != a) {
      out.push_back({"1·m=m", {a}});
      break;
    }
  }
  for (Elem s = 0; s < ns; ++s) {
    if (m.act(s, m.zero) != m.zero) {
      out.push_back({"s·0=0", {s}});
      break;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (m.act(r.zero, a) != m.zero) {
      out.push_back({"0·m=0", {a}});
      break;
    }
  }
  return out;
}

Validated<FiniteSemiring> validate_semiring(const RawSemiring& raw) {
  const auto n = raw.add.size();
  if (n == 0) throw StructuralError("semiring '" + raw.name + "': empty carrier");
  FiniteSemiring s;
  s.name = raw.name;
  s.add = to_table(raw.add, n, n, n, "semiring '" + raw.name + "' add");
  s.mul = to_table(raw.mul, n, n, n, "semiring '" + raw.name + "' mul");
  if (raw.zero < 0 || static_cast<std::size_t>(raw.zero) >= n || raw.one < 0 ||
      static_cast<std::size_t>(raw.one) >= n) {
    throw StructuralError("semiring '" + raw.name + "': zero/one index out of range");
  }
  s.zero = static_cast<Elem>(raw.zero);
  s.one = static_cast<Elem>(raw.one);

  Validated<FiniteSemiring> result;
  result.violations = semiring_violations(s);
  result.relabel = swap_to_front(n, s.zero);
  if (!result.violations.empty()) return result;

  if (s.zero != 0) {
    const auto& p = result.relabel;
    s.add = permute_binary(s.add, p);
    s.mul = permute_binary(s.mul, p);
    s.one = p[s.one];
    s.zero = 0;
  }
  result.value = std::move(s);
  return result;
}

Validated<FiniteSemimodule> validate_semimodule(const ScalarDomain& scalars,
                                                const RawSemimodule& raw) {
  const auto n = raw.add.size();
  if (n == 0) throw StructuralError("semimodule '" + raw.name + "': empty carrier");
  FiniteSemimodule m;
  m.name = raw.name;
  m.scalars = scalars;
  m.add = to_table(raw.add, n, n, n, "semimodule '" + raw.name + "' add");
  if (scalars.is_naturals()) {
    if (raw.action) {
      throw StructuralError("semimodule '" + raw.name +
                            "': action table given for naturals scalars");
    }
  } else {
    if (!raw.action) {
      throw StructuralError("semimodule '" + raw.name + "': missing action table for scalars " +
                            scalars.name());
    }
    m.action = to_table(*raw.action, scalars.scalar_count(), n, n,
                        "semimodule '" + raw.name + "' action");
  }

  Validated<FiniteSemimodule> result;
  const auto identity = find_identity(m.add);
  if (!identity) {
    check_monoid(m.add, std::nullopt, result.violations);
    return result;
  }
  m.zero = *identity;
  result.violations = semimodule_violations(m);
  result.relabel = swap_to_front(n, m.zero);
  if (!result.violations.empty()) return result;

  if (m.zero != 0) {
    m.add = permute_binary(m.add, result.relabel);
    if (!m.action.empty()) m.action = permute_action(m.action, result.relabel);
    m.zero = 0;
  }
  result.value = std::move(m);
  return result;
}

namespace {
std::string describe(const std::string& what, const std::vector<Violation>& vs) {
  std::string msg = what + " fails validation:";
  for (const auto& v : vs) msg += " [" + to_string(v) + "]";
  return msg;
}
}  // namespace

Semiring make_semiring(const RawSemiring& raw) {
  auto v = validate_semiring(raw);
  if (!v.ok()) throw StructuralError(describe("semiring '" + raw.name + "'", v.violations));
  return std::make_shared<const FiniteSemiring>(std::move(*v.value));
}

Module make_semimodule(const ScalarDomain& scalars, const RawSemimodule& raw) {
  auto v = validate_semimodule(scalars, raw);
  if (!v.ok()) throw StructuralError(describe("semimodule '" + raw.name + "'", v.violations));
  return std::make_shared<const FiniteSemimodule>(std::move(*v.value));
}

CancellativeReport cancellative_elements(const Table& add) {
  CancellativeReport out;
  const auto n = static_cast<Elem>(add.rows());
  std::vector<char> seen(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    bool injective = true;
    for (Elem y = 0; y < n && injective; ++y) {
      auto& hit = seen[add(x, y)];
      injective = !hit;
      hit = 1;
    }
    if (injective) out.elements.push_back(x);
  }
  out.cancellative = out.elements.size() == n;
  return out;
}

CancellativeReport cancellative_elements(const FiniteSemiring& s) {
  return cancellative_elements(s.add);
}

CancellativeReport cancellative_elements(const FiniteSemimodule& m) {
  return cancellative_elements(m.add);
}

IdealSimpleReport is_ideal_simple(const Module& m) {
  if (m->size() < 2) throw StructuralError("degenerate: M={0}");
  IdealSimpleReport out;
  for (Elem x = 1; x < m->size(); ++x) {
    auto sub = generated_subsemimodule(m, {x});
    if (sub.elements.size() < m->size()) {
      out.witness = sub.elements;
      return out;
    }
  }
  out.ideal_simple = true;
  return out;
}

}  // namespace semimod
