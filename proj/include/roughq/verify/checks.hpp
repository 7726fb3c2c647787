#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughq/homomorphism.hpp"
#include "roughq/verify/examples.hpp"
#include "roughq/verify/report.hpp"

namespace roughq::verify {

/// Lazily computed data shared by all statements checked on one instance.
class Evaluation {
 public:
  explicit Evaluation(const Instance& in) : in_(in) {}

  const Instance& instance() const noexcept { return in_; }
  const GroupContext& context() const noexcept { return *in_.context; }
  const ElementSet& n() const noexcept { return in_.n; }
  const ElementSet& h1() const noexcept { return in_.h1; }
  const ElementSet& h2() const { return *in_.h2; }
  const ElementSet& m() const { return *in_.m; }

  const ApproximationSpace& space(const ElementSet& base) const { return context().space(base); }
  ElementSet project(const ElementSet& base, const ElementSet& h) const { return project_subset(space(base).quotient(), h); }
  ElementSet lower(const ElementSet& base, const ElementSet& h) const { return space(base).lower(project(base, h)); }
  ElementSet upper(const ElementSet& base, const ElementSet& h) const { return space(base).upper(project(base, h)); }
  /// Preimages in G, so that levels over different normal subgroups compare.
  ElementSet lift(const ElementSet& base, const ElementSet& s) const { return lift_subset(space(base).quotient(), s); }
  ElementSet lifted_lower(const ElementSet& base, const ElementSet& h) const { return lift(base, lower(base, h)); }
  ElementSet lifted_upper(const ElementSet& base, const ElementSet& h) const { return lift(base, upper(base, h)); }

  ElementSet meet() const { return n() & m(); }
  ElementSet join() const { return set_product(n(), m()); }

  const Theorem8Data& thm8() {
    if (!thm8_) thm8_.emplace(theorem8_data(context().group_ptr(), n(), m(), h1()));
    return *thm8_;
  }
  const CorollaryChain& chain() {
    if (!chain_) chain_.emplace(corollary_chain(context().group_ptr(), n(), m(), h1()));
    return *chain_;
  }

 private:
  const Instance& in_;
  std::optional<Theorem8Data> thm8_;
  std::optional<CorollaryChain> chain_;
};

using Outcome = std::pair<Verdict, json>;

namespace statements {

inline Outcome lemma1(Evaluation& e) {
  Tally t;
  const ApproximationSpace& a = e.space(e.n());
  const FiniteGroup& q = a.group();
  for (Element x = 0; x < q.order(); ++x)
    for (Element y = 0; y < q.order(); ++y) {
      const ElementSet lhs = a.class_set(q.mul(x, y));
      const ElementSet rhs = set_product(a.class_set(x), a.class_set(y));
      t.subset("[x1x2N] ⊆ [x1N][x2N]", lhs, rhs);
      if (!lhs.is_subset_of(rhs)) {
        t.note("x1N", q.label(x));
        t.note("x2N", q.label(y));
        return t.finish();
      }
    }
  return t.finish();
}

inline Outcome lemma10(Evaluation& e) {
  const ElementSet p1 = e.project(e.n(), e.h1()), p2 = e.project(e.n(), e.h2());
  if (!p1.is_subset_of(p2)) return {Verdict::NotApplicable, json::object()};
  Tally t;
  const ApproximationSpace& a = e.space(e.n());
  t.subset("lower", a.lower(p1), a.lower(p2));
  t.subset("upper", a.upper(p1), a.upper(p2));
  return t.finish();
}

inline Outcome prop2_1(Evaluation& e) {
  Tally t;
  const ApproximationSpace& a = e.space(e.n());
  const ElementSet p = e.project(e.n(), e.h1());
  const ElementSet lo = a.lower(p), up = a.upper(p);
  t.holds("lower nonempty", !lo.empty());
  t.holds("N in lower", lo.contains(kIdentity));
  t.subset("lower ⊆ H/N", lo, p);
  t.subset("H/N ⊆ upper", p, up);
  return t.finish();
}

inline Outcome prop2_2(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  t.equal("upper((H1∪H2)/N) = upper(H1/N) ∪ upper(H2/N)", e.upper(n, e.h1() | e.h2()), e.upper(n, e.h1()) | e.upper(n, e.h2()));
  return t.finish();
}

inline Outcome prop2_3(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  t.subset("lower(H1/N) ∪ lower(H2/N) ⊆ lower((H1∪H2)/N)", e.lower(n, e.h1()) | e.lower(n, e.h2()), e.lower(n, e.h1() | e.h2()));
  return t.finish();
}

inline Outcome prop2_4(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  const ApproximationSpace& a = e.space(n);
  const ElementSet joined = e.project(n, e.h1()) | e.project(n, e.h2());
  t.equal("(H1∪H2)/N = H1/N ∪ H2/N", e.project(n, e.h1() | e.h2()), joined);
  t.equal("upper((H1∪H2)/N) = upper(H1/N ∪ H2/N)", e.upper(n, e.h1() | e.h2()), a.upper(joined));
  return t.finish();
}

inline Outcome prop2_5(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  const ApproximationSpace& a = e.space(n);
  const ElementSet joined = e.project(n, e.h1()) | e.project(n, e.h2());
  t.equal("(H1∪H2)/N = H1/N ∪ H2/N", e.project(n, e.h1() | e.h2()), joined);
  t.equal("lower((H1∪H2)/N) = lower(H1/N ∪ H2/N)", e.lower(n, e.h1() | e.h2()), a.lower(joined));
  return t.finish();
}

inline Outcome prop2_6(Evaluation& e) {
  if (!e.h1().is_subset_of(e.h2())) return {Verdict::NotApplicable, json::object()};
  Tally t;
  t.subset("lower(H1/N) ⊆ lower(H2/N)", e.lower(e.n(), e.h1()), e.lower(e.n(), e.h2()));
  return t.finish();
}

inline Outcome prop2_7(Evaluation& e) {
  if (!e.h1().is_subset_of(e.h2())) return {Verdict::NotApplicable, json::object()};
  Tally t;
  t.subset("upper(H1/N) ⊆ upper(H2/N)", e.upper(e.n(), e.h1()), e.upper(e.n(), e.h2()));
  return t.finish();
}

inline Outcome prop5_1(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  const ApproximationSpace& a = e.space(n);
  const ElementSet p1 = e.project(n, e.h1()), p2 = e.project(n, e.h2());
  const ElementSet mid = a.upper(p1 & p2);
  t.subset("upper((H1∩H2)/N) ⊆ upper(H1/N ∩ H2/N)", e.upper(n, e.h1() & e.h2()), mid);
  t.subset("upper(H1/N ∩ H2/N) ⊆ upper(H1/N) ∩ upper(H2/N)", mid, a.upper(p1) & a.upper(p2));
  return t.finish();
}

inline Outcome prop5_2(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  const ApproximationSpace& a = e.space(n);
  const ElementSet p1 = e.project(n, e.h1()), p2 = e.project(n, e.h2());
  const ElementSet mid = a.lower(p1 & p2);
  t.subset("lower((H1∩H2)/N) ⊆ lower(H1/N ∩ H2/N)", e.lower(n, e.h1() & e.h2()), mid);
  t.equal("lower(H1/N ∩ H2/N) = lower(H1/N) ∩ lower(H2/N)", mid, a.lower(p1) & a.lower(p2));
  return t.finish();
}

inline Outcome cor12(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  const ApproximationSpace& a = e.space(n);
  const ElementSet both = e.project(n, e.h1()) & e.project(n, e.h2());
  t.equal("upper((H1∩H2)/N) = upper(H1/N ∩ H2/N)", e.upper(n, e.h1() & e.h2()), a.upper(both));
  t.equal("lower((H1∩H2)/N) = lower(H1/N ∩ H2/N)", e.lower(n, e.h1() & e.h2()), a.lower(both));
  return t.finish();
}

inline Outcome lemma6(Evaluation& e) {
  Tally t;
  const ElementSet p = e.project(e.n(), e.h1());
  t.equal("lower(H/N) = H/N", e.space(e.n()).lower(p), p);
  t.equal("upper(H/N) = H/N", e.space(e.n()).upper(p), p);
  return t.finish();
}

inline Outcome thm3_1(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  t.subset("upper((H1H2)/N) ⊆ upper(H1/N)upper(H2/N)", e.upper(n, set_product(e.h1(), e.h2())),
           set_product(e.upper(n, e.h1()), e.upper(n, e.h2())));
  return t.finish();
}

inline Outcome thm3_2(Evaluation& e) {
  Tally t;
  const ElementSet& n = e.n();
  t.subset("lower(H1/N)lower(H2/N) ⊆ lower((H1H2)/N)", set_product(e.lower(n, e.h1()), e.lower(n, e.h2())),
           e.lower(n, set_product(e.h1(), e.h2())));
  return t.finish();
}

inline Outcome prop4(Evaluation& e) {
  Tally t;
  const ElementSet lo = e.lower(e.n(), e.h1());
  t.holds("lower(H/N) normal in G/N", is_normal(lo), json{{"lower", labels_of(lo)}});
  const ElementSet k = e.lift(e.n(), lo);
  t.holds("K normal in G", is_normal(k), json{{"K", labels_of(k)}});
  t.subset("N ⊆ K", e.n(), k);
  t.subset("K ⊆ H", k, e.h1());
  return t.finish();
}

inline Outcome cor14_1(Evaluation& e) {
  Tally t;
  const ElementSet s = set_product(e.lower(e.n(), e.h1()), e.lower(e.n(), e.h2()));
  t.holds("lower(H1/N)lower(H2/N) normal in G/N", is_normal(s), json{{"set", labels_of(s)}});
  return t.finish();
}

inline Outcome cor14_2(Evaluation& e) {
  Tally t;
  const ElementSet s = e.lower(e.n(), e.h1()) & e.lower(e.n(), e.h2());
  t.holds("lower(H1/N) ∩ lower(H2/N) normal in G/N", is_normal(s), json{{"set", labels_of(s)}});
  return t.finish();
}

inline Outcome cor14_3(Evaluation& e) {
  Tally t;
  const ElementSet s = e.lower(e.n(), e.h1() & e.h2());
  t.holds("lower((H1∩H2)/N) normal in G/N", is_normal(s), json{{"set", labels_of(s)}});
  return t.finish();
}

// The statement names G/N as the ambient group; these objects live in G/NM
// and G/(N∩M), so normality is checked there.
inline Outcome cor14_4(Evaluation& e) {
  Tally t;
  const ElementSet s = e.lower(e.join(), e.h1());
  t.holds("lower(H/NM) normal in G/NM", is_normal(s), json{{"set", labels_of(s)}});
  t.note("ambient", "G/NM");
  return t.finish();
}

inline Outcome cor14_5(Evaluation& e) {
  Tally t;
  const ElementSet s = e.lower(e.meet(), e.h1());
  t.holds("lower(H/(N∩M)) normal in G/(N∩M)", is_normal(s), json{{"set", labels_of(s)}});
  t.note("ambient", "G/(N∩M)");
  return t.finish();
}

inline Outcome thm19(Evaluation& e) {
  Tally t;
  t.subset("xN in lower(H/N) ⇒ xM in lower(H/M)", e.lifted_lower(e.n(), e.h1()), e.lifted_lower(e.m(), e.h1()));
  t.subset("xN in upper(H/N) ⇒ xM in upper(H/M)", e.lifted_upper(e.n(), e.h1()), e.lifted_upper(e.m(), e.h1()));
  return t.finish();
}

inline Outcome prop20(Evaluation& e) {
  Tally t;
  const ElementSet& h = e.h1();
  const ElementSet at_n = e.lifted_lower(e.n(), h);
  t.equal("(1) ⇔ (2)", at_n, e.lifted_lower(e.m(), h));
  t.equal("(1) ⇔ (3)", at_n, e.lifted_lower(e.join(), h));
  t.equal("(1) ⇔ (4)", at_n, e.lifted_lower(e.meet(), h));
  t.note("upper_reading_holds", at_n == e.lifted_upper(e.meet(), h));
  return t.finish();
}

inline Outcome cor17_1(Evaluation& e) {
  Tally t;
  const ElementSet& h = e.h1();
  t.subset("lower at N or M ⇒ lower at NM", e.lifted_lower(e.n(), h) | e.lifted_lower(e.m(), h), e.lifted_lower(e.join(), h));
  return t.finish();
}

inline Outcome cor17_2(Evaluation& e) {
  Tally t;
  const ElementSet& h = e.h1();
  t.subset("upper at N or M ⇒ upper at NM", e.lifted_upper(e.n(), h) | e.lifted_upper(e.m(), h), e.lifted_upper(e.join(), h));
  return t.finish();
}

inline Outcome cor17_3(Evaluation& e) {
  Tally t;
  const ElementSet& h = e.h1();
  t.subset("lower at N∩M ⇒ lower at N and M", e.lifted_lower(e.meet(), h), e.lifted_lower(e.n(), h) & e.lifted_lower(e.m(), h));
  return t.finish();
}

inline Outcome cor17_4(Evaluation& e) {
  Tally t;
  const ElementSet& h = e.h1();
  t.subset("upper at N∩M ⇒ upper at N and M", e.lifted_upper(e.meet(), h), e.lifted_upper(e.n(), h) & e.lifted_upper(e.m(), h));
  return t.finish();
}

template <typename F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const Error& err) {
    return {Verdict::Fail, json{{"error", err.what()}, {"kind", err.kind()}}};
  }
}

inline void iso_holds(Tally& t, std::string_view what, const GroupHom& h) {
  t.holds(what, h.is_isomorphism(),
          json{{"source_order", h.source().order()}, {"target_order", h.target().order()}, {"kernel", labels_of(h.kernel())}});
}

inline Outcome thm8_1(Evaluation& e) {
  return guarded([&] {
    Tally t;
    const Theorem8Data& d = e.thm8();
    iso_holds(t, "psi1 isomorphism", d.psi1);
    t.holds("G/K ≅ G/T", d.g_over_k_iso.has_value());
    return t.finish();
  });
}

inline Outcome thm8_2(Evaluation& e) {
  return guarded([&] {
    Tally t;
    const Theorem8Data& d = e.thm8();
    iso_holds(t, "psi2 isomorphism", d.psi2);
    t.holds("H/K ≅ H/T", d.h_over_k_iso.has_value());
    return t.finish();
  });
}

inline Outcome thm8_3(Evaluation& e) {
  return guarded([&] {
    Tally t;
    const Theorem8Data& d = e.thm8();
    t.holds("phi onto", d.phi.is_surjective(), json{{"image", labels_of(d.phi.image())}});
    t.holds("M/N inside K/N", d.m_over_n.size() * e.n().size() == e.m().size());
    t.equal("ker phi = M/N", d.phi.kernel(), d.m_over_n);
    t.subset("M ⊆ K", e.m(), d.K);
    t.subset("K ⊆ H", d.K, e.h1());
    return t.finish();
  });
}

inline Outcome thm8_4(Evaluation& e) {
  return guarded([&] {
    Tally t;
    const Theorem8Data& d = e.thm8();
    t.holds("K/M ≅ T/M", d.k_over_m_iso && d.k_over_m_iso->is_isomorphism(),
            json{{"K", labels_of(d.K)}, {"T", labels_of(d.T)}});
    return t.finish();
  });
}

inline void onto_with_kernel(Tally& t, std::string_view name, const GroupHom& h, const ElementSet& expected,
                             int expected_size) {
  const std::string s(name);
  t.holds(s + " onto", h.is_surjective(), json{{"image", labels_of(h.image())}});
  t.holds(s + " kernel complete", expected.size() == expected_size);
  t.equal(s + " kernel", h.kernel(), expected);
}

inline Outcome final_cor_1(Evaluation& e) {
  return guarded([&] {
    Tally t;
    const CorollaryChain& c = e.chain();
    onto_with_kernel(t, "alpha", c.alpha, c.alpha_kernel_expected, e.n().size() / e.meet().size());
    return t.finish();
  });
}

inline Outcome final_cor_2(Evaluation& e) {
  return guarded([&] {
    Tally t;
    const CorollaryChain& c = e.chain();
    onto_with_kernel(t, "beta", c.beta, c.beta_kernel_expected, e.join().size() / e.n().size());
    return t.finish();
  });
}

inline Outcome final_cor_3(Evaluation& e) {
  return guarded([&] {
    Tally t;
    const CorollaryChain& c = e.chain();
    onto_with_kernel(t, "gamma", c.gamma, c.gamma_kernel_expected, e.join().size() / e.meet().size());
    t.holds("gamma = beta∘alpha", compose(c.beta, c.alpha).map() == c.gamma.map());
    return t.finish();
  });
}

}  // namespace statements

struct Statement {
  std::string_view id;
  Shape shape;
  Outcome (*run)(Evaluation&) = nullptr;  // instance statements
  Outcome (*golden)() = nullptr;          // example statements
  std::string_view example_group = {};
};

inline const std::vector<Statement>& statement_registry() {
  namespace s = statements;
  static const std::vector<Statement> registry = {
      {"Lemma1", Shape::Normal, s::lemma1},
      {"Lemma10", Shape::SubjectPair, s::lemma10},
      {"Prop2.1", Shape::Subject, s::prop2_1},
      {"Prop2.2", Shape::SubjectPair, s::prop2_2},
      {"Prop2.3", Shape::SubjectPair, s::prop2_3},
      {"Prop2.4", Shape::SubjectPair, s::prop2_4},
      {"Prop2.5", Shape::SubjectPair, s::prop2_5},
      {"Prop2.6", Shape::SubjectPair, s::prop2_6},
      {"Prop2.7", Shape::SubjectPair, s::prop2_7},
      {"Prop5.1", Shape::IntersectionPair, s::prop5_1},
      {"Prop5.2", Shape::IntersectionPair, s::prop5_2},
      {"Cor12", Shape::SubgroupPair, s::cor12},
      {"Lemma6", Shape::NormalSubject, s::lemma6},
      {"Thm3.1", Shape::SubjectPair, s::thm3_1},
      {"Thm3.2", Shape::SubjectPair, s::thm3_2},
      {"Prop4", Shape::SubgroupSubject, s::prop4},
      {"Cor14.1", Shape::SubgroupPair, s::cor14_1},
      {"Cor14.2", Shape::SubgroupPair, s::cor14_2},
      {"Cor14.3", Shape::SubgroupPair, s::cor14_3},
      {"Cor14.4", Shape::TwoNormalSubgroup, s::cor14_4},
      {"Cor14.5", Shape::TwoNormalSubgroup, s::cor14_5},
      {"Thm19", Shape::NestedSubject, s::thm19},
      {"Prop20", Shape::TwoNormalSubgroup, s::prop20},
      {"Cor17.1", Shape::TwoNormalJoin, s::cor17_1},
      {"Cor17.2", Shape::TwoNormalJoin, s::cor17_2},
      {"Cor17.3", Shape::TwoNormalUnion, s::cor17_3},
      {"Cor17.4", Shape::TwoNormalUnion, s::cor17_4},
      {"Thm8.1", Shape::NestedSubgroup, s::thm8_1},
      {"Thm8.2", Shape::NestedSubgroup, s::thm8_2},
      {"Thm8.3", Shape::NestedSubgroup, s::thm8_3},
      {"Thm8.4", Shape::NestedSubgroup, s::thm8_4},
      {"FinalCor.1", Shape::TwoNormalSubgroup, s::final_cor_1},
      {"FinalCor.2", Shape::TwoNormalSubgroup, s::final_cor_2},
      {"FinalCor.3", Shape::TwoNormalSubgroup, s::final_cor_3},
      {"ExampleQ8", Shape::Example, nullptr, golden::example_q8, "quaternion8"},
      {"Example13", Shape::Example, nullptr, golden::example_13, "symmetric4"},
      {"Example22", Shape::Example, nullptr, golden::example_22, "symmetric4"},
      {"ExampleA4", Shape::Example, nullptr, golden::example_a4, "alternating4"},
  };
  return registry;
}

inline const Statement& find_statement(std::string_view id) {
  for (const auto& s : statement_registry())
    if (s.id == id) return s;
  throw UnknownStatement("unknown statement '" + std::string(id) + "'");
}

/// Empty when `in` satisfies the hypotheses of `shape`, else the reason.
inline std::optional<std::string> hypothesis_gap(Shape shape, const Instance& in) {
  if (!in.context) return "instance has no group";
  const ElementSet& n = in.n;
  const ElementSet& h = in.h1;
  if (!n.is_subset_of(h)) return "N is not contained in H";
  auto needs_h2 = [&]() -> std::optional<std::string> {
    if (!in.h2) return "H2 missing";
    if (!n.is_subset_of(*in.h2)) return "N is not contained in H2";
    return std::nullopt;
  };
  auto needs_m = [&]() -> std::optional<std::string> {
    if (!in.m) return "M missing";
    if (!is_normal(*in.m)) return "M is not normal";
    return std::nullopt;
  };
  switch (shape) {
    case Shape::Example:
    case Shape::Normal:
    case Shape::Subject:
      return std::nullopt;
    case Shape::SubjectPair:
    case Shape::IntersectionPair:
      return needs_h2();
    case Shape::NormalSubject:
      if (!in.h_is_normal) return "H is not normal";
      return std::nullopt;
    case Shape::SubgroupSubject:
      if (!in.h1_is_subgroup) return "H is not a subgroup";
      return std::nullopt;
    case Shape::SubgroupPair:
      if (auto gap = needs_h2()) return gap;
      if (!in.h1_is_subgroup || !in.h2_is_subgroup) return "H1 and H2 must be subgroups";
      return std::nullopt;
    case Shape::TwoNormalSubgroup:
      if (auto gap = needs_m()) return gap;
      if (!in.h1_is_subgroup) return "H is not a subgroup";
      if (!in.m->is_subset_of(h)) return "M is not contained in H";
      return std::nullopt;
    case Shape::NestedSubject:
    case Shape::NestedSubgroup:
      if (auto gap = needs_m()) return gap;
      if (!in.n_subset_m) return "N is not contained in M";
      if (!in.m->is_subset_of(h)) return "M is not contained in H";
      if (shape == Shape::NestedSubgroup && !in.h1_is_subgroup) return "H is not a subgroup";
      return std::nullopt;
    case Shape::TwoNormalJoin:
      if (auto gap = needs_m()) return gap;
      if (!set_product(n, *in.m).is_subset_of(h)) return "NM is not contained in H";
      return std::nullopt;
    case Shape::TwoNormalUnion:
      if (auto gap = needs_m()) return gap;
      if (!in.m->is_subset_of(h)) return "M is not contained in H";
      return std::nullopt;
  }
  return std::nullopt;
}

/// Runs a golden example statement.
inline CheckReport check_example(const Statement& s) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  r.statement = std::string(s.id);
  r.group = std::string(s.example_group);
  auto [verdict, witness] = statements::guarded([&] { return s.golden(); });
  r.verdict = verdict;
  r.witness = std::move(witness);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline CheckReport check(const Statement& s, Evaluation& e) {
  if (!s.run) return check_example(s);
  if (auto gap = hypothesis_gap(s.shape, e.instance()))
    throw ShapeMismatch(std::string(s.id) + " needs shape " + shape_name(s.shape) + ": " + *gap);
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  r.statement = std::string(s.id);
  r.group = e.context().name();
  r.instance = describe(e.instance());
  auto [verdict, witness] = s.run(e);
  r.verdict = verdict;
  r.witness = std::move(witness);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline CheckReport check(std::string_view id, const Instance& in) {
  Evaluation e(in);
  return check(find_statement(id), e);
}

}  // namespace roughq::verify
