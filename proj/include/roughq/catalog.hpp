#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughq/group.hpp"

namespace roughq {

namespace catalog {

/// Z_n written additively; labels "0".."n-1".
inline GroupPtr cyclic(int n, std::string name = {}) {
  if (n < 1) throw UnknownName("cyclic order must be positive");
  if (n > kMaxOrder) throw OrderTooLarge("cyclic" + std::to_string(n));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return build_from_cayley_table(t, labels, name.empty() ? "cyclic" + std::to_string(n) : std::move(name));
}

/// Symmetries of the regular n-gon, order 2n. Element r^i s^j sits at
/// index i + n*j.
inline GroupPtr dihedral(int n) {
  if (n < 1) throw UnknownName("dihedral index must be positive");
  if (2 * n > kMaxOrder) throw OrderTooLarge("dihedral" + std::to_string(n));
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    const int i = x % n, j = x / n;
    std::string rot = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    std::string l = rot + (j ? "s" : "");
    labels.push_back(l.empty() ? "e" : l);
    for (int y = 0; y < order; ++y) {
      const int c = y % n, d = y / n;
      const int rot_part = ((j ? i - c : i + c) % n + n) % n;
      t[x][y] = rot_part + n * ((j + d) % 2);
    }
  }
  return build_from_cayley_table(t, labels, "dihedral" + std::to_string(n));
}

inline GroupPtr symmetric(int n) {
  if (n < 1 || n > 5) throw UnknownName("symmetric(n) supports 1 <= n <= 5");
  PermutationSpec spec{n, {}};
  if (n >= 2) {
    std::vector<int> swap(n), cycle(n);
    for (int i = 0; i < n; ++i) {
      swap[i] = i + 1;
      cycle[i] = (i + 1) % n + 1;
    }
    std::swap(swap[0], swap[1]);
    spec.generators = {swap, cycle};
  }
  return build_from_permutations(spec, "symmetric" + std::to_string(n));
}

inline GroupPtr alternating(int n) {
  if (n < 1 || n > 5) throw UnknownName("alternating(n) supports 1 <= n <= 5");
  PermutationSpec spec{n, {}};
  if (n == 4) {
    spec.generators = {{2, 3, 1, 4}, {2, 1, 4, 3}};  // (123), (12)(34)
  } else {
    for (int k = 3; k <= n; ++k) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = i + 1;
      c[0] = 2;
      c[1] = k;
      c[k - 1] = 1;  // (1 2 k)
      spec.generators.push_back(c);
    }
  }
  return build_from_permutations(spec, "alternating" + std::to_string(n));
}

/// {±1, ±i, ±j, ±k} with i² = j² = k² = -1, ij = k, jk = i, ki = j.
/// Index 2u + s for unit u ∈ {1,i,j,k} and sign bit s.
inline GroupPtr quaternion8() {
  // unit product: [u][v] -> {sign, unit}
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  std::vector<std::string> labels;
  for (int x = 0; x < 8; ++x) {
    labels.push_back(std::string(x % 2 ? "-" : "") + names[x / 2]);
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ kSign[u][v];
      t[x][y] = 2 * kUnit[u][v] + sign;
    }
  }
  return build_from_cayley_table(t, labels, "quaternion8");
}

inline GroupPtr klein4() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return build_from_cayley_table(t, {"e", "a", "b", "c"}, "klein4");
}

/// Pairs (a, b) at index a*|B| + b, labelled "(la,lb)".
inline GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  if (na * nb > kMaxOrder) throw OrderTooLarge("direct product of order " + std::to_string(na * nb));
  const int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return build_from_cayley_table(t, labels, "direct_product(" + a.name() + "," + b.name() + ")");
}

namespace detail {

inline std::optional<int> trailing_int(std::string_view s, std::string_view prefix) {
  if (!s.starts_with(prefix)) return std::nullopt;
  s.remove_prefix(prefix.size());
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty() || s.size() > 4) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

}  // namespace catalog

/// Looks up a catalog group. Keys: trivial, cyclicN, dihedralN, symmetricN,
/// alternatingN (N <= 5), quaternion8, klein4, direct_product(A,B); "(N)"
/// suffixes and the short forms ZN, DN, SN, AN, Q8, V4 are accepted too.
inline GroupPtr builtin_group(std::string_view name) {
  using namespace catalog;
  std::string key(name);
  std::erase(key, ' ');
  if (key == "trivial") return cyclic(1, "trivial");
  if (key == "quaternion8" || key == "Q8") return quaternion8();
  if (key == "klein4" || key == "V4") return klein4();
  if (key.starts_with("direct_product(") && key.back() == ')') {
    const std::string_view body = std::string_view(key).substr(15, key.size() - 16);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ',' && depth == 0) {
        auto a = builtin_group(body.substr(0, i));
        auto b = builtin_group(body.substr(i + 1));
        return direct_product(*a, *b);
      }
    }
    throw UnknownName("direct_product needs two comma-separated factors: " + key);
  }
  struct Family {
    std::string_view long_name, short_name;
    GroupPtr (*make)(int);
  };
  static const Family families[] = {
      {"cyclic", "Z", [](int n) { return cyclic(n); }},
      {"dihedral", "D", [](int n) { return dihedral(n); }},
      {"symmetric", "S", [](int n) { return symmetric(n); }},
      {"alternating", "A", [](int n) { return alternating(n); }},
  };
  for (const auto& f : families) {
    if (auto n = detail::trailing_int(key, f.long_name)) return f.make(*n);
  }
  for (const auto& f : families) {
    if (auto n = detail::trailing_int(key, f.short_name)) return f.make(*n);
  }
  throw UnknownName("unknown builtin group '" + std::string(name) + "'");
}

/// Catalog names used by `--all-small`, ascending by order.
inline std::vector<std::string> small_catalog(int max_order) {
  std::vector<std::pair<int, std::string>> entries;
  for (int n = 1; n <= kMaxVerifyOrder; ++n) entries.emplace_back(n, "cyclic" + std::to_string(n));
  for (int n = 2; 2 * n <= kMaxVerifyOrder; ++n) entries.emplace_back(2 * n, "dihedral" + std::to_string(n));
  entries.emplace_back(4, "klein4");
  entries.emplace_back(8, "quaternion8");
  entries.emplace_back(12, "alternating4");
  entries.emplace_back(24, "symmetric4");
  entries.emplace_back(8, "direct_product(cyclic2,cyclic4)");
  entries.emplace_back(8, "direct_product(cyclic2,klein4)");
  entries.emplace_back(9, "direct_product(cyclic3,cyclic3)");
  entries.emplace_back(12, "direct_product(cyclic2,cyclic6)");
  entries.emplace_back(16, "direct_product(cyclic4,cyclic4)");
  entries.emplace_back(16, "direct_product(cyclic2,dihedral4)");
  entries.emplace_back(16, "direct_product(cyclic2,quaternion8)");
  entries.emplace_back(24, "direct_product(cyclic2,alternating4)");
  entries.emplace_back(24, "direct_product(cyclic4,dihedral3)");
  entries.emplace_back(48, "direct_product(cyclic2,symmetric4)");
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (auto& [order, name] : entries)
    if (order <= max_order) out.push_back(name);
  return out;
}

}  // namespace roughq
