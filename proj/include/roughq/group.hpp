#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roughq/error.hpp"

namespace roughq {

using Element = std::int32_t;

inline constexpr Element kIdentity = 0;  // every group stores its identity at index 0
inline constexpr int kMaxOrder = 200;
inline constexpr int kMaxVerifyOrder = 48;

/// Zero-based one-line form: p[i] is the image of point i.
using Permutation = std::vector<int>;

/// Input for `build_from_permutations`: generators are one-based one-line
/// images, e.g. {2,3,4,1} is the 4-cycle (1234).
struct PermutationSpec {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its full multiplication table.
///
/// Always held through `GroupPtr`: element sets and quotients keep raw
/// pointers to the group they were built over, so the object must not move.
/// Immutable after construction.
class FiniteGroup {
 public:
  int order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inverse_[g]); }

  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Exact label match; permutation groups additionally accept any cycle
  /// notation that denotes an element, e.g. "(3412)" for "(1234)".
  std::optional<Element> find(std::string_view label) const;
  Element at(std::string_view label) const;

  bool is_permutation_group() const noexcept { return degree_ > 0; }
  int degree() const noexcept { return degree_; }
  const Permutation& permutation(Element a) const { return perms_.at(a); }

  bool is_abelian() const noexcept;

  /// Row-major copy of the table as nested vectors.
  std::vector<std::vector<Element>> table() const;

  friend GroupPtr build_from_cayley_table(const std::vector<std::vector<int>>& table,
                                          std::vector<std::string> labels, std::string name);
  friend GroupPtr build_from_permutations(const PermutationSpec& spec, std::string name);

 private:
  FiniteGroup() = default;
  void validate_and_index();

  int order_ = 0;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> by_label_;
  int degree_ = 0;
  std::vector<Permutation> perms_;
  std::map<Permutation, Element> by_perm_;
};

// ---------------------------------------------------------------------------
// Cycle notation

namespace cycles {

/// Normalized disjoint-cycle string: cycles ordered by smallest moved point,
/// each rotated to start there; "I" for the identity. Points are one-based and
/// comma-separated inside a cycle once the degree reaches 10.
inline std::string format(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  const bool wide = n >= 10;
  std::vector<bool> seen(n, false);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first && wide) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? std::string("I") : out;
}

/// Parses a product of cycles (not necessarily disjoint, any rotation) on
/// `degree` points. The rightmost cycle acts first. Returns nullopt on any
/// malformed input.
inline std::optional<Permutation> parse(std::string_view text, int degree) {
  Permutation result(degree);
  for (int i = 0; i < degree; ++i) result[i] = i;
  if (text == "I" || text == "e" || text == "()" || text == "1") return result;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') return std::nullopt;
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) return std::nullopt;
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> pts;
    if (body.find(',') != std::string_view::npos) {
      std::size_t b = 0;
      while (b <= body.size()) {
        auto e = body.find(',', b);
        if (e == std::string_view::npos) e = body.size();
        const auto tok = body.substr(b, e - b);
        if (tok.empty()) return std::nullopt;
        int v = 0;
        for (char c : tok) {
          if (c < '0' || c > '9') return std::nullopt;
          v = v * 10 + (c - '0');
          if (v > degree) return std::nullopt;
        }
        pts.push_back(v);
        b = e + 1;
      }
    } else {
      for (char c : body) {
        if (c < '0' || c > '9') return std::nullopt;
        pts.push_back(c - '0');
      }
    }
    std::vector<bool> used(degree + 1, false);
    for (int v : pts) {
      if (v < 1 || v > degree || used[v]) return std::nullopt;
      used[v] = true;
    }
    Permutation cyc(degree);
    for (int i = 0; i < degree; ++i) cyc[i] = i;
    for (std::size_t k = 0; k < pts.size(); ++k) cyc[pts[k] - 1] = pts[(k + 1) % pts.size()] - 1;
    // result := result ∘ cyc
    Permutation next(degree);
    for (int i = 0; i < degree; ++i) next[i] = result[cyc[i]];
    result = std::move(next);
    any = true;
    pos = close + 1;
  }
  if (!any) return std::nullopt;
  return result;
}

/// (f·g)(x) = f(g(x))
inline Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

}  // namespace cycles

// ---------------------------------------------------------------------------
// FiniteGroup implementation

inline std::optional<Element> FiniteGroup::find(std::string_view label) const {
  if (auto it = by_label_.find(std::string(label)); it != by_label_.end()) return it->second;
  if (is_permutation_group()) {
    if (auto p = cycles::parse(label, degree_)) {
      if (auto it = by_perm_.find(*p); it != by_perm_.end()) return it->second;
    }
  }
  return std::nullopt;
}

inline Element FiniteGroup::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw UnknownLabel("'" + std::string(label) + "' is not an element of " + (name_.empty() ? "the group" : name_));
}

inline bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

inline std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  return out;
}

inline void FiniteGroup::validate_and_index() {
  const int n = order_;
  auto at = [&](int a, int b) { return table_[static_cast<std::size_t>(a) * n + b]; };
  auto triple = [](int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) < 0 || at(a, b) >= n)
        throw AxiomViolation("closure: table" + triple(a, b, at(a, b)) + " out of range");
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw AxiomViolation("identity: element 0 is not a two-sided identity at " + triple(0, a, 0));
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (at(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw AxiomViolation("inverse: element " + std::to_string(a) + " has no right inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c))) throw AxiomViolation("associativity fails at " + triple(a, b, c));
    }
  by_label_.clear();
  for (int a = 0; a < n; ++a)
    if (!by_label_.emplace(labels_[a], a).second) throw ShapeError("duplicate label '" + labels_[a] + "'");
}

// ---------------------------------------------------------------------------
// Builders

/// Validates shape and every group axiom, reporting the first offending triple.
inline GroupPtr build_from_cayley_table(const std::vector<std::vector<int>>& table,
                                        std::vector<std::string> labels, std::string name = {}) {
  const auto n = table.size();
  if (n == 0) throw ShapeError("empty table");
  if (n > static_cast<std::size_t>(kMaxOrder))
    throw OrderTooLarge("order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  for (const auto& row : table)
    if (row.size() != n) throw ShapeError("table is not square");
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw ShapeError("label count " + std::to_string(labels.size()) + " != order " + std::to_string(n));

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = static_cast<int>(n);
  g->name_ = std::move(name);
  g->table_.reserve(n * n);
  for (const auto& row : table) g->table_.insert(g->table_.end(), row.begin(), row.end());
  g->labels_ = std::move(labels);
  g->validate_and_index();
  return g;
}

/// Closes the generators under composition, (f·g)(x) = f(g(x)). Elements are
/// numbered in breadth-first order from the identity.
inline GroupPtr build_from_permutations(const PermutationSpec& spec, std::string name = {}) {
  const int d = spec.degree;
  if (d < 1) throw DegreeError("degree must be positive");
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < spec.generators.size(); ++k) {
    const auto& img = spec.generators[k];
    if (static_cast<int>(img.size()) != d)
      throw DegreeError("generator " + std::to_string(k) + " has " + std::to_string(img.size()) + " images, expected " +
                        std::to_string(d));
    Permutation p(d);
    std::vector<bool> hit(d, false);
    for (int i = 0; i < d; ++i) {
      const int v = img[i];
      if (v < 1 || v > d)
        throw DegreeError("generator " + std::to_string(k) + " maps " + std::to_string(i + 1) + " to " +
                          std::to_string(v) + ", outside 1.." + std::to_string(d));
      if (hit[v - 1]) throw DegreeError("generator " + std::to_string(k) + " is not a bijection");
      hit[v - 1] = true;
      p[i] = v - 1;
    }
    gens.push_back(std::move(p));
  }

  Permutation id(d);
  for (int i = 0; i < d; ++i) id[i] = i;
  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      auto y = cycles::compose(elems[head], s);
      if (index.contains(y)) continue;
      if (static_cast<int>(elems.size()) >= kMaxOrder)
        throw OrderTooLarge("permutation group exceeds order cap " + std::to_string(kMaxOrder));
      index.emplace(y, static_cast<Element>(elems.size()));
      elems.push_back(std::move(y));
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(cycles::compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycles::format(p));

  auto base = build_from_cayley_table(table, std::move(labels), std::move(name));
  auto g = std::const_pointer_cast<FiniteGroup>(base);
  g->degree_ = d;
  g->perms_ = std::move(elems);
  g->by_perm_ = std::move(index);
  return g;
}

/// Least n >= 1 with x^n = e.
inline int element_order(const FiniteGroup& g, Element x) {
  int n = 1;
  for (Element y = x; y != kIdentity; y = g.mul(y, x)) ++n;
  return n;
}

}  // namespace roughq
