// One PASS/FAIL line per acceptance criterion. Criterion 2 is listed in
// kKnownUnattainable: its line still reports FAIL, but only an unexpected
// outcome (a new failure, or criterion 2 starting to pass) changes the exit code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

using namespace roughq;
using namespace roughq::verify;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass;
  std::string detail;
};

const std::set<int> kKnownUnattainable = {2};

const std::vector<std::string> kCorpus = {
    "trivial",     "cyclic2",      "cyclic3",   "cyclic4",     "cyclic5",      "cyclic6",
    "cyclic7",     "cyclic8",      "cyclic9",   "cyclic10",    "cyclic11",     "cyclic12",
    "klein4",      "symmetric3",   "dihedral4", "quaternion8", "dihedral5",    "dihedral6",
    "alternating4", "symmetric4",  "direct_product(cyclic2,cyclic4)", "direct_product(cyclic2,klein4)"};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Result run_golden(std::string_view id) {
  const auto t = Clock::now();
  const CheckReport r = check_example(find_statement(id));
  const double s = seconds_since(t);
  std::string detail = std::string(verdict_name(r.verdict)) + " in " + std::to_string(s) + " s";
  if (r.verdict == Verdict::Fail) detail += "; violated " + r.witness["violated"].dump();
  return {r.verdict == Verdict::Pass && s < 1.0, detail};
}

Result criterion2() {
  Result r = run_golden("Example13");
  const auto g = builtin_group("symmetric4");
  const auto a = approximation_space(g, support::v4_in(*g));
  std::multiset<int> sizes;
  for (const auto& c : a.classes()) sizes.insert(c.size());
  const bool sizes_ok = sizes == std::multiset<int>{1, 2, 3};
  r.pass = r.pass && sizes_ok;
  r.detail += sizes_ok ? "; class sizes {1,2,3}" : "; class sizes wrong";
  return r;
}

Result criterion5() {
  const auto t = Clock::now();
  const SuiteReport r = run_suite(kCorpus, {"all"});
  const double s = seconds_since(t);
  long checks = 0;
  for (const auto& st : r.statements) checks += st.total();
  std::string detail = std::to_string(r.statements.size()) + " statements, " + std::to_string(checks) + " checks, " +
                       std::to_string(r.failures()) + " failures, " + std::to_string(s) + " s";
  if (const auto* bad = r.first_failing()) detail += "; first " + to_json(*bad->first_failure).dump();
  return {r.failures() == 0 && r.statements.size() == 34 && s < 300.0, detail};
}

Result criterion6() {
  long compared = 0, mismatches = 0;
  for (const auto& name : kCorpus) {
    const auto g = builtin_group(name);
    if (g->order() > 16) continue;
    const GroupContext ctx(g);
    for (const auto& in : enumerate_instances(ctx, Shape::Subject)) {
      const ApproximationSpace& a = ctx.space(in.n);
      const QuotientGroup& q = a.quotient();
      const ElementSet s = project_subset(q, in.h1);
      const auto expect = oracle::approximate(*g, support::to_set(in.n), support::to_set(in.h1));
      ++compared;
      mismatches += support::to_set(lift_subset(q, a.lower(s))) != expect.lower;
      mismatches += support::to_set(lift_subset(q, a.upper(s))) != expect.upper;
    }
  }
  return {mismatches == 0 && compared > 0,
          std::to_string(compared) + " (N,H) pairs, " + std::to_string(mismatches) + " mismatches"};
}

// Table-level checks that do not go through GroupHom's own predicates.
bool is_hom(const GroupHom& h) {
  const auto& m = h.map();
  for (int x = 0; x < h.source().order(); ++x)
    for (int y = 0; y < h.source().order(); ++y)
      if (m[h.source().mul(x, y)] != h.target().mul(m[x], m[y])) return false;
  return true;
}

bool is_bijective(const GroupHom& h) {
  if (h.source().order() != h.target().order()) return false;
  return std::set<int>(h.map().begin(), h.map().end()).size() == static_cast<std::size_t>(h.source().order());
}

Result criterion7() {
  long instances = 0, failures = 0;
  std::string first;
  for (const auto& name : kCorpus) {
    const GroupContext ctx(builtin_group(name));
    for (const auto& in : enumerate_instances(ctx, Shape::NestedSubgroup)) {
      ++instances;
      std::string why;
      try {
        const Theorem8Data d = theorem8_data(ctx.group_ptr(), in.n, *in.m, in.h1);
        if (!is_hom(d.psi1) || !is_bijective(d.psi1)) why = "psi1";
        else if (!is_hom(d.psi2) || !is_bijective(d.psi2)) why = "psi2";
        else if (!is_hom(d.phi)) why = "phi hom";
        else if (std::set<int>(d.phi.map().begin(), d.phi.map().end()).size() !=
                 static_cast<std::size_t>(d.phi.target().order()))
          why = "phi onto";
        else {
          std::set<int> kernel;
          for (int x = 0; x < d.phi.source().order(); ++x)
            if (d.phi.map()[x] == 0) kernel.insert(x);
          if (kernel != support::to_set(d.m_over_n) ||
              static_cast<int>(kernel.size()) * in.n.size() != in.m->size())
            why = "ker phi";
          else if (!d.k_over_m_iso || !is_hom(*d.k_over_m_iso) || !is_bijective(*d.k_over_m_iso))
            why = "K/M vs T/M";
        }
      } catch (const Error& e) {
        why = e.what();
      }
      if (!why.empty()) {
        ++failures;
        if (first.empty()) first = name + ": " + why;
      }
    }
  }
  return {failures == 0 && instances > 0, std::to_string(instances) + " instances, " + std::to_string(failures) +
                                              " failures" + (first.empty() ? "" : "; first " + first)};
}

bool has(const std::vector<Witness>& ws, const json& n, const json& h1, const json& h2) {
  for (const auto& w : ws)
    if (w.instance["N"] == n && w.instance["H1"] == h1 && (h2.is_null() || w.instance["H2"] == h2)) return true;
  return false;
}

Result criterion8() {
  std::string detail;
  bool ok = true;
  auto note = [&](const std::string& what, bool cond, std::size_t count) {
    ok = ok && cond;
    detail += (detail.empty() ? "" : "; ") + what + " " + std::to_string(count) + (cond ? " ok" : " MISSING");
  };
  const auto s4 = builtin_group("symmetric4");
  const json v4 = labels_of(support::v4_in(*s4));

  const auto up = hunt("upper-not-subgroup", {s4});
  const json h22 = labels_of(support::labelled(*s4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(1423)"}));
  note("upper-not-subgroup S4", has(up, v4, h22, nullptr), up.size());

  const auto prod = hunt("lower-product-strict", {s4});
  const json e13_h1 = labels_of(support::labelled(*s4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(1423)"}));
  const json e13_h2 = labels_of(support::labelled(
      *s4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(13)", "(24)", "(1234)", "(1432)", "(14)", "(23)", "(1243)", "(1342)"}));
  note("lower-product-strict S4", has(prod, v4, e13_h1, e13_h2), prod.size());

  const auto a4 = builtin_group("alternating4");
  const auto cor12 = hunt("cor12-fails-without-subgroups", {a4});
  const json a4v4 = labels_of(support::v4_in(*a4));
  const json h1 = labels_of(support::labelled(*a4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(123)", "(124)"}));
  const json h2 = labels_of(support::labelled(*a4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(132)", "(142)"}));
  note("cor12-fails-without-subgroups A4", has(cor12, a4v4, h1, h2), cor12.size());

  std::vector<GroupPtr> abelian;
  for (const auto& name : kCorpus) {
    auto g = builtin_group(name);
    if (g->is_abelian()) abelian.push_back(g);
  }
  const auto none = hunt("upper-not-subgroup", abelian);
  const bool empty = none.empty();
  ok = ok && empty && abelian.size() == 15;
  detail += "; upper-not-subgroup over " + std::to_string(abelian.size()) + " abelian groups " +
            std::to_string(none.size()) + (empty ? " ok" : " UNEXPECTED");
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"Q8 example", [] { return run_golden("ExampleQ8"); }},
      {"S4 example with H1H2", criterion2},
      {"S4 subgroup example", [] { return run_golden("Example22"); }},
      {"A4 intersection example", [] { return run_golden("ExampleA4"); }},
      {"full statement suite", criterion5},
      {"oracle equivalence", criterion6},
      {"quotient map construction", criterion7},
      {"strictness witnesses", criterion8},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const bool known = kKnownUnattainable.contains(id);
    std::printf("%s %d %s: %s%s\n", r.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), r.detail.c_str(),
                !r.pass && known ? " [known, recorded]" : "");
    std::fflush(stdout);
    if (r.pass == known) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
