#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roughq/catalog.hpp"
#include "roughq/verify/checks.hpp"

namespace roughq::verify {

struct StatementSummary {
  std::string id;
  Shape shape = Shape::Normal;
  long pass = 0;
  long strict = 0;
  long fail = 0;
  long not_applicable = 0;
  std::optional<CheckReport> first_failure;
  std::optional<CheckReport> first_strict;

  long total() const { return pass + strict + fail + not_applicable; }
};

struct SuiteReport {
  std::vector<std::string> groups;
  std::vector<StatementSummary> statements;
  std::chrono::nanoseconds elapsed{0};

  long failures() const {
    long f = 0;
    for (const auto& s : statements) f += s.fail;
    return f;
  }
  const StatementSummary* first_failing() const {
    for (const auto& s : statements)
      if (s.fail > 0) return &s;
    return nullptr;
  }
};

/// "all" (or an empty list) selects every statement quantified over the
/// corpus, "examples" the worked examples; other entries are statement ids.
inline std::vector<const Statement*> select_statements(std::vector<std::string> ids) {
  if (ids.empty()) ids.push_back("all");
  std::vector<const Statement*> out;
  for (const auto& id : ids) {
    if (id == "all" || id == "examples") {
      const bool examples = id == "examples";
      for (const auto& s : statement_registry())
        if ((s.shape == Shape::Example) == examples) out.push_back(&s);
    } else {
      out.push_back(&find_statement(id));
    }
  }
  return out;
}

using ReportSink = std::function<void(const CheckReport&)>;

inline SuiteReport run_suite(const std::vector<GroupPtr>& corpus, const std::vector<std::string>& ids,
                             const EnumerationOptions& opt = {}, const ReportSink& on_report = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto selected = select_statements(ids);
  SuiteReport out;
  std::map<const Statement*, std::size_t> slot;
  for (const Statement* s : selected) {
    if (slot.contains(s)) continue;
    slot.emplace(s, out.statements.size());
    out.statements.push_back(StatementSummary{std::string(s->id), s->shape, 0, 0, 0, 0, {}, {}});
  }

  auto record = [&](const Statement* s, CheckReport r) {
    StatementSummary& sum = out.statements[slot.at(s)];
    switch (r.verdict) {
      case Verdict::Pass: ++sum.pass; break;
      case Verdict::Strict:
        ++sum.strict;
        if (!sum.first_strict) sum.first_strict = r;
        break;
      case Verdict::Fail:
        ++sum.fail;
        if (!sum.first_failure) sum.first_failure = r;
        break;
      case Verdict::NotApplicable: ++sum.not_applicable; break;
    }
    if (on_report) on_report(r);
  };

  // Shapes in registry order so every group is swept the same way.
  std::vector<Shape> shapes;
  for (const Statement* s : selected)
    if (s->shape != Shape::Example && std::find(shapes.begin(), shapes.end(), s->shape) == shapes.end())
      shapes.push_back(s->shape);

  for (const auto& g : corpus) {
    out.groups.push_back(g->name());
    if (shapes.empty()) continue;
    const GroupContext ctx(g);
    for (Shape shape : shapes) {
      std::vector<const Statement*> here;
      for (const Statement* s : selected)
        if (s->shape == shape && std::find(here.begin(), here.end(), s) == here.end()) here.push_back(s);
      for_each_instance(ctx, shape, opt, [&](const Instance& in) {
        Evaluation e(in);
        for (const Statement* s : here) record(s, check(*s, e));
      });
    }
  }
  // Worked examples use fixed data and run once, independently of the corpus.
  for (const Statement* s : selected)
    if (s->shape == Shape::Example && out.statements[slot.at(s)].total() == 0) record(s, check_example(*s));

  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

inline SuiteReport run_suite(const std::vector<std::string>& corpus, const std::vector<std::string>& ids,
                             const EnumerationOptions& opt = {}, const ReportSink& on_report = {}) {
  std::vector<GroupPtr> groups;
  groups.reserve(corpus.size());
  for (const auto& name : corpus) groups.push_back(builtin_group(name));
  return run_suite(groups, ids, opt, on_report);
}

/// Aggregate JSON; deterministic (no timings).
inline json to_json(const SuiteReport& r) {
  json stmts = json::array();
  for (const auto& s : r.statements) {
    json j{{"statement", s.id},       {"shape", shape_name(s.shape)}, {"pass", s.pass},
           {"strict", s.strict},      {"fail", s.fail},               {"not_applicable", s.not_applicable}};
    if (s.first_failure) j["first_failure"] = to_json(*s.first_failure);
    if (s.first_strict) j["first_strict"] = to_json(*s.first_strict);
    stmts.push_back(std::move(j));
  }
  return json{{"groups", r.groups}, {"statements", std::move(stmts)}, {"failures", r.failures()}};
}

}  // namespace roughq::verify
