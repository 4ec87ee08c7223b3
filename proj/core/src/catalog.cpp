#include "semimod/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "semimod/category.hpp"

namespace semimod {

namespace {

Semiring from_tables(std::string name, std::vector<std::vector<std::int64_t>> add,
                     std::vector<std::vector<std::int64_t>> mul, std::int64_t one) {
  return make_semiring(RawSemiring{std::move(name), std::move(add), std::move(mul), 0, one});
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Position of the last `sep` outside parentheses, or npos.
std::size_t top_level(const std::string& s, char sep) {
  int depth = 0;
  std::size_t found = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) found = i;
  }
  return found;
}

// "head(arg)" -> arg when the name has that exact shape.
std::optional<std::string> call_argument(const std::string& name, const std::string& head) {
  if (name.size() < head.size() + 2 || name.compare(0, head.size() + 1, head + "(") != 0 ||
      name.back() != ')') {
    return std::nullopt;
  }
  return name.substr(head.size() + 1, name.size() - head.size() - 2);
}

std::size_t parse_count(const std::string& s, const std::string& context) {
  const auto t = trim(s);
  if (t.empty() || t.size() > 4 ||
      !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw StructuralError("bad integer '" + s + "' in " + context);
  }
  return static_cast<std::size_t>(std::stoul(t));
}

std::pair<std::string, std::string> split_pair(const std::string& args, const std::string& context) {
  const auto comma = top_level(args, ',');
  if (comma == std::string::npos) throw StructuralError("expected two arguments in " + context);
  return {trim(args.substr(0, comma)), trim(args.substr(comma + 1))};
}

}  // namespace

Semiring boolean_semiring() {
  static const Semiring b = from_tables("B", {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 1);
  return b;
}

Semiring b31_semiring() {
  static const Semiring b31 = from_tables("B31", {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}},
                                          {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}, 1);
  return b31;
}

Semiring field_f2() {
  static const Semiring f2 = from_tables("F2", {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 1);
  return f2;
}

Semiring matrix_semiring(const Semiring& base) {
  const auto s = base->size();
  const auto n = s * s * s * s;
  if (n > 4096) throw ResourceError("M2(" + base->name + ") has more than 4096 elements");
  auto digits = [s](std::size_t x) {
    std::array<Elem, 4> d{};
    for (auto& v : d) {
      v = static_cast<Elem>(x % s);
      x /= s;
    }
    return d;
  };
  auto encode = [s](const std::array<Elem, 4>& d) {
    std::int64_t x = 0;
    for (std::size_t i = 4; i-- > 0;) x = x * static_cast<std::int64_t>(s) + d[i];
    return x;
  };
  std::vector<std::vector<std::int64_t>> add(n, std::vector<std::int64_t>(n));
  std::vector<std::vector<std::int64_t>> mul(n, std::vector<std::int64_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const auto a = digits(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto b = digits(y);
      std::array<Elem, 4> sum{}, prod{};
      for (std::size_t i = 0; i < 4; ++i) sum[i] = base->plus(a[i], b[i]);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
          const Elem left = base->times(a[2 * r], b[c]);
          const Elem right = base->times(a[2 * r + 1], b[2 + c]);
          prod[2 * r + c] = base->plus(left, right);
        }
      }
      add[x][y] = encode(sum);
      mul[x][y] = encode(prod);
    }
  }
  const auto one = encode({base->one, base->zero, base->zero, base->one});
  return from_tables("M2(" + base->name + ")", std::move(add), std::move(mul), one);
}

Module zero_module(const ScalarDomain& scalars) {
  FiniteSemimodule m;
  m.name = scalars.is_naturals() ? "Zero" : "Zero(" + scalars.name() + ")";
  m.scalars = scalars;
  m.add = Table(1, 1);
  if (!scalars.is_naturals()) m.action = Table(scalars.scalar_count(), 1);
  return std::make_shared<const FiniteSemimodule>(std::move(m));
}

Module cyclic_monoid(std::size_t index, std::size_t period) {
  if (period == 0) throw StructuralError("C(k,n) needs period n >= 1");
  const auto n = index + period;
  if (n > 4096) throw ResourceError("C(k,n) larger than 4096 elements");
  FiniteSemimodule m;
  m.name = "C(" + std::to_string(index) + "," + std::to_string(period) + ")";
  m.add = Table(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto s = i + j;
      if (s >= n) s = index + (s - index) % period;
      m.add(i, j) = static_cast<Elem>(s);
    }
  }
  return std::make_shared<const FiniteSemimodule>(std::move(m));
}

Module z2_monoid() {
  FiniteSemimodule m;
  m.name = "Z2";
  m.add = Table(2, 2, {0, 1, 1, 0});
  return std::make_shared<const FiniteSemimodule>(std::move(m));
}

Module additive_monoid(const Semiring& s) {
  FiniteSemimodule m;
  m.name = s->name;
  m.add = s->add;
  return std::make_shared<const FiniteSemimodule>(std::move(m));
}

Module regular_module(const Semiring& s) {
  FiniteSemimodule m;
  m.name = "reg(" + s->name + ")";
  m.scalars = ScalarDomain::finite(s);
  m.add = s->add;
  m.action = s->mul;
  return std::make_shared<const FiniteSemimodule>(std::move(m));
}

Module free_module(const Semiring& s, std::size_t rank) {
  if (rank == 0) return zero_module(ScalarDomain::finite(s));
  Module out = regular_module(s);
  for (std::size_t i = 1; i < rank; ++i) out = direct_sum(out, regular_module(s)).sum;
  auto named = std::make_shared<FiniteSemimodule>(*out);
  named->name = "free(" + s->name + "," + std::to_string(rank) + ")";
  return named;
}

Instance builtin_instance(const std::string& raw_name) {
  const auto name = trim(raw_name);
  if (const auto plus = top_level(name, '+'); plus != std::string::npos) {
    const auto left = builtin_module(name.substr(0, plus));
    const auto right = builtin_module(name.substr(plus + 1));
    return direct_sum(left, right, name).sum;
  }
  if (name == "B") return boolean_semiring();
  if (name == "B31") return b31_semiring();
  if (name == "F2") return field_f2();
  if (name == "Z2") return z2_monoid();
  if (name == "Zero") return zero_module();
  if (auto arg = call_argument(name, "M2")) return matrix_semiring(builtin_semiring(*arg));
  if (auto arg = call_argument(name, "reg")) return regular_module(builtin_semiring(*arg));
  if (auto arg = call_argument(name, "Zero")) {
    return zero_module(ScalarDomain::finite(builtin_semiring(*arg)));
  }
  if (auto arg = call_argument(name, "free")) {
    const auto [ring, rank] = split_pair(*arg, name);
    return free_module(builtin_semiring(ring), parse_count(rank, name));
  }
  if (auto arg = call_argument(name, "C")) {
    const auto [k, n] = split_pair(*arg, name);
    return cyclic_monoid(parse_count(k, name), parse_count(n, name));
  }
  throw StructuralError("unknown builtin instance '" + name + "'");
}

Module builtin_module(const std::string& name) {
  auto inst = builtin_instance(name);
  if (auto* m = std::get_if<Module>(&inst)) return *m;
  return additive_monoid(std::get<Semiring>(inst));
}

Semiring builtin_semiring(const std::string& name) {
  auto inst = builtin_instance(name);
  if (auto* s = std::get_if<Semiring>(&inst)) return *s;
  throw StructuralError("'" + name + "' is a semimodule, not a semiring");
}

}  // namespace semimod
