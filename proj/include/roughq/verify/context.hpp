#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "roughq/approximation.hpp"

namespace roughq::verify {

/// Hypothesis shapes; each statement runs over the instances of one shape.
enum class Shape {
  Normal,             // N
  Subject,            // N, H ⊇ N
  SubjectPair,        // N, H1, H2 ⊇ N
  IntersectionPair,   // SubjectPair plus pairs of arbitrary (unsaturated) subsets ⊇ N
  NormalSubject,      // N ⊆ H, both normal
  SubgroupSubject,    // N ⊆ H, H a subgroup
  SubgroupPair,       // N ⊆ H1, H2, both subgroups
  TwoNormalSubgroup,  // N, M ⊆ H, H a subgroup
  NestedSubject,      // N ⊆ M ⊆ H
  NestedSubgroup,     // N ⊆ M ⊆ H, H a subgroup
  TwoNormalJoin,      // N, M with NM ⊆ H
  TwoNormalUnion,     // N, M with N ∪ M ⊆ H
  Example,            // fixed data from the worked examples
};

inline const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Normal: return "N";
    case Shape::Subject: return "N,H";
    case Shape::SubjectPair: return "N,H1,H2";
    case Shape::IntersectionPair: return "N,H1,H2 (unsaturated)";
    case Shape::NormalSubject: return "N,H normal";
    case Shape::SubgroupSubject: return "N,H subgroup";
    case Shape::SubgroupPair: return "N,H1,H2 subgroups";
    case Shape::TwoNormalSubgroup: return "N,M,H subgroup";
    case Shape::NestedSubject: return "N<=M<=H";
    case Shape::NestedSubgroup: return "N<=M<=H subgroup";
    case Shape::TwoNormalJoin: return "N,M,NM<=H";
    case Shape::TwoNormalUnion: return "N,M,N+M<=H";
    case Shape::Example: return "example";
  }
  return "?";
}

/// Caps on instance enumeration. Subjects H are unions of N-cosets; once
/// more than `exhaustive_free_cosets` cosets are free to choose, H ranges over
/// the subgroups containing N plus `sample_size` seeded random unions.
struct EnumerationOptions {
  std::uint64_t seed = 0;
  int exhaustive_free_cosets = 13;
  int sample_size = 2000;
  /// Ordered pairs are exhaustive up to this many, otherwise all subgroup
  /// pairs plus this many seeded random pairs.
  int pair_cap = 16384;
  /// Unsaturated subsets ⊇ N: exhaustive up to this many free elements,
  /// otherwise `raw_sample` seeded random subsets.
  int raw_free_limit = 8;
  int raw_sample = 256;
};

/// Per-group cache: subgroups, normal subgroups and one approximation space
/// per normal subgroup.
class GroupContext {
 public:
  explicit GroupContext(GroupPtr g) : group_(std::move(g)) {
    if (group_->order() > kMaxVerifyOrder)
      throw OrderTooLarge(group_->name() + " has order " + std::to_string(group_->order()) + " > " +
                          std::to_string(kMaxVerifyOrder));
    subgroups_ = all_subgroups(*group_);
    for (const auto& s : subgroups_)
      if (is_normal(s)) normals_.push_back(s);
    for (int i = 0; i < static_cast<int>(normals_.size()); ++i) normal_index_.emplace(normals_[i], i);
    spaces_.resize(normals_.size());
  }

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const std::string& name() const noexcept { return group_->name(); }
  const std::vector<ElementSet>& subgroups() const noexcept { return subgroups_; }
  const std::vector<ElementSet>& normals() const noexcept { return normals_; }

  /// (G/N, θ) for a normal subgroup N, built on first use.
  const ApproximationSpace& space(const ElementSet& n) const {
    auto it = normal_index_.find(n);
    if (it == normal_index_.end()) throw NotNormal(n.to_string() + " is not a normal subgroup of " + name());
    auto& slot = spaces_[it->second];
    if (!slot) slot = std::make_unique<ApproximationSpace>(build_quotient(group_, n));
    return *slot;
  }

 private:
  GroupPtr group_;
  std::vector<ElementSet> subgroups_;
  std::vector<ElementSet> normals_;
  std::unordered_map<ElementSet, int, ElementSetHash> normal_index_;
  mutable std::vector<std::unique_ptr<ApproximationSpace>> spaces_;
};

/// One assignment of the hypothesis variables of a statement.
struct Instance {
  const GroupContext* context = nullptr;
  Shape shape = Shape::Normal;
  ElementSet n;   // normal subgroup
  ElementSet h1;  // subject (H or H1); equals N for Shape::Normal
  std::optional<ElementSet> h2;
  std::optional<ElementSet> m;
  bool h1_is_subgroup = false;
  bool h2_is_subgroup = false;
  bool h_is_normal = false;
  bool n_subset_m = false;
};

namespace detail {

/// splitmix64, used to derive independent deterministic streams.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, const ElementSet& a, const ElementSet& b, std::uint64_t salt) {
  std::uint64_t h = mix(seed ^ mix(salt));
  for (auto w : a.words()) h = mix(h ^ w);
  for (auto w : b.words()) h = mix(h ^ (w + 0x51ed270b27a1f3c5ull));
  return h;
}

}  // namespace detail

/// Unions of `base`-cosets containing `required` (itself such a union).
inline std::vector<ElementSet> coset_unions(const GroupContext& ctx, const ElementSet& base, const ElementSet& required,
                                            const EnumerationOptions& opt) {
  const QuotientGroup& q = ctx.space(base).quotient();
  const ElementSet req = project_subset(q, required);
  std::vector<Element> free;
  for (Element c = 0; c < q.order(); ++c)
    if (!req.contains(c)) free.push_back(c);

  std::vector<ElementSet> out;
  const int k = static_cast<int>(free.size());
  if (k <= opt.exhaustive_free_cosets) {
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      ElementSet s = req;
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1u) s.insert(free[i]);
      out.push_back(lift_subset(q, s));
    }
    return out;
  }
  std::unordered_map<ElementSet, bool, ElementSetHash> seen;
  for (const auto& h : ctx.subgroups())
    if (required.is_subset_of(h) && seen.emplace(h, true).second) out.push_back(h);
  std::mt19937_64 rng(detail::stream_seed(opt.seed, base, required, 1));
  int added = 0;
  for (int attempt = 0; added < opt.sample_size && attempt < 20 * opt.sample_size; ++attempt) {
    ElementSet s = req;
    std::uint64_t bits = 0;
    for (int i = 0; i < k; ++i) {
      if (i % 64 == 0) bits = rng();
      if ((bits >> (i % 64)) & 1u) s.insert(free[i]);
    }
    ElementSet lifted = lift_subset(q, s);
    if (seen.emplace(lifted, true).second) {
      out.push_back(lifted);
      ++added;
    }
  }
  return out;
}

/// Arbitrary subsets of G containing N (not necessarily unions of cosets).
inline std::vector<ElementSet> raw_supersets(const GroupContext& ctx, const ElementSet& n, const EnumerationOptions& opt) {
  const FiniteGroup& g = ctx.group();
  std::vector<Element> free;
  for (Element x = 0; x < g.order(); ++x)
    if (!n.contains(x)) free.push_back(x);
  const int k = static_cast<int>(free.size());
  std::vector<ElementSet> out;
  if (k <= opt.raw_free_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      ElementSet s = n;
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1u) s.insert(free[i]);
      out.push_back(s);
    }
    return out;
  }
  std::mt19937_64 rng(detail::stream_seed(opt.seed, n, n, 2));
  for (int i = 0; i < opt.raw_sample; ++i) {
    ElementSet s = n;
    std::uint64_t bits = 0;
    for (int j = 0; j < k; ++j) {
      if (j % 64 == 0) bits = rng();
      if ((bits >> (j % 64)) & 1u) s.insert(free[j]);
    }
    out.push_back(s);
  }
  return out;
}

/// Ordered index pairs into a list of `count` subjects; `special` marks the
/// entries (subgroups) whose pairs are always kept when sampling.
inline std::vector<std::pair<int, int>> subject_pairs(int count, const std::vector<bool>& special, std::uint64_t stream,
                                                      const EnumerationOptions& opt) {
  std::vector<std::pair<int, int>> out;
  if (static_cast<std::int64_t>(count) * count <= opt.pair_cap) {
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j) out.emplace_back(i, j);
    return out;
  }
  std::vector<int> marked;
  for (int i = 0; i < count; ++i)
    if (special[i]) marked.push_back(i);
  for (int i : marked)
    for (int j : marked) out.emplace_back(i, j);
  std::mt19937_64 rng(stream);
  for (int t = 0; t < opt.pair_cap; ++t) {
    const auto r = rng();
    out.emplace_back(static_cast<int>((r & 0xffffffffu) % count), static_cast<int>((r >> 32) % count));
  }
  return out;
}

inline Instance make_instance(const GroupContext& ctx, Shape shape, const ElementSet& n, const ElementSet& h1,
                              std::optional<ElementSet> h2 = std::nullopt, std::optional<ElementSet> m = std::nullopt) {
  Instance in{&ctx, shape, n, h1, std::move(h2), std::move(m)};
  in.h1_is_subgroup = is_subgroup(h1);
  in.h2_is_subgroup = in.h2 && is_subgroup(*in.h2);
  in.h_is_normal = in.h1_is_subgroup && is_normal(h1);
  in.n_subset_m = in.m && n.is_subset_of(*in.m);
  return in;
}

/// Calls `f(const Instance&)` for every instance of `shape` over `ctx`, in a
/// deterministic order.
template <typename F>
void for_each_instance(const GroupContext& ctx, Shape shape, const EnumerationOptions& opt, F&& f) {
  const auto& normals = ctx.normals();
  const auto& subs = ctx.subgroups();
  auto emit_pairs = [&](const ElementSet& n, const std::vector<ElementSet>& list, std::uint64_t salt) {
    std::vector<bool> special(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) special[i] = is_subgroup(list[i]);
    for (auto [i, j] : subject_pairs(static_cast<int>(list.size()), special, detail::stream_seed(opt.seed, n, n, salt), opt))
      f(make_instance(ctx, shape, n, list[i], list[j]));
  };

  switch (shape) {
    case Shape::Example:
      return;
    case Shape::Normal:
      for (const auto& n : normals) f(make_instance(ctx, shape, n, n));
      return;
    case Shape::Subject:
      for (const auto& n : normals)
        for (const auto& h : coset_unions(ctx, n, n, opt)) f(make_instance(ctx, shape, n, h));
      return;
    case Shape::SubjectPair:
      for (const auto& n : normals) emit_pairs(n, coset_unions(ctx, n, n, opt), 3);
      return;
    case Shape::IntersectionPair:
      for (const auto& n : normals) {
        emit_pairs(n, coset_unions(ctx, n, n, opt), 3);
        // Pairs of unions of cosets are already covered above.
        const auto raw = raw_supersets(ctx, n, opt);
        const QuotientGroup& q = ctx.space(n).quotient();
        std::vector<bool> saturated(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) saturated[i] = lift_subset(q, project_subset(q, raw[i])) == raw[i];
        for (auto [i, j] : subject_pairs(static_cast<int>(raw.size()), std::vector<bool>(raw.size(), false),
                                         detail::stream_seed(opt.seed, n, n, 4), opt))
          if (!saturated[i] || !saturated[j]) f(make_instance(ctx, shape, n, raw[i], raw[j]));
      }
      return;
    case Shape::NormalSubject:
      for (const auto& n : normals)
        for (const auto& h : normals)
          if (n.is_subset_of(h)) f(make_instance(ctx, shape, n, h));
      return;
    case Shape::SubgroupSubject:
      for (const auto& n : normals)
        for (const auto& h : subs)
          if (n.is_subset_of(h)) f(make_instance(ctx, shape, n, h));
      return;
    case Shape::SubgroupPair:
      for (const auto& n : normals)
        for (const auto& h1 : subs)
          if (n.is_subset_of(h1))
            for (const auto& h2 : subs)
              if (n.is_subset_of(h2)) f(make_instance(ctx, shape, n, h1, h2));
      return;
    case Shape::TwoNormalSubgroup:
      for (const auto& n : normals)
        for (const auto& m : normals)
          for (const auto& h : subs)
            if (n.is_subset_of(h) && m.is_subset_of(h)) f(make_instance(ctx, shape, n, h, std::nullopt, m));
      return;
    case Shape::NestedSubject:
      for (const auto& n : normals)
        for (const auto& m : normals)
          if (n.is_subset_of(m))
            for (const auto& h : coset_unions(ctx, n, m, opt)) f(make_instance(ctx, shape, n, h, std::nullopt, m));
      return;
    case Shape::NestedSubgroup:
      for (const auto& n : normals)
        for (const auto& m : normals)
          if (n.is_subset_of(m))
            for (const auto& h : subs)
              if (m.is_subset_of(h)) f(make_instance(ctx, shape, n, h, std::nullopt, m));
      return;
    case Shape::TwoNormalJoin:
    case Shape::TwoNormalUnion:
      for (const auto& n : normals)
        for (const auto& m : normals) {
          const ElementSet meet = n & m;
          const ElementSet need = shape == Shape::TwoNormalJoin ? set_product(n, m) : (n | m);
          for (const auto& h : coset_unions(ctx, meet, need, opt)) f(make_instance(ctx, shape, n, h, std::nullopt, m));
        }
      return;
  }
}

inline std::vector<Instance> enumerate_instances(const GroupContext& ctx, Shape shape, const EnumerationOptions& opt = {}) {
  std::vector<Instance> out;
  for_each_instance(ctx, shape, opt, [&](const Instance& in) { out.push_back(in); });
  return out;
}

}  // namespace roughq::verify
