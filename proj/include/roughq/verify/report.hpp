#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "roughq/verify/context.hpp"

namespace roughq::verify {

using json = nlohmann::json;

/// Inclusion statements distinguish equality (Pass) from proper inclusion
/// (Strict); both mean the statement holds.
enum class Verdict { Pass, Strict, Fail, NotApplicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Strict: return "strict";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct CheckReport {
  std::string statement;
  std::string group;
  json instance = json::object();  // {"N": [...], "H1": [...], ...}
  Verdict verdict = Verdict::Pass;
  json witness = json::object();
  std::chrono::nanoseconds elapsed{0};
};

inline json labels_of(const ElementSet& s) { return json(s.labels()); }

inline json describe(const Instance& in) {
  json d = json::object();
  d["N"] = labels_of(in.n);
  if (in.shape != Shape::Normal) d["H1"] = labels_of(in.h1);
  if (in.h2) d["H2"] = labels_of(*in.h2);
  if (in.m) d["M"] = labels_of(*in.m);
  return d;
}

/// Report JSON; the elapsed time is left out so reports are reproducible.
inline json to_json(const CheckReport& r) {
  json j = r.instance;
  j["statement"] = r.statement;
  j["group"] = r.group;
  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness;
  return j;
}

/// Accumulates the sub-claims of one statement into a verdict and witness.
class Tally {
 public:
  void equal(std::string_view what, const ElementSet& lhs, const ElementSet& rhs) {
    if (!(lhs == rhs)) violate(what, lhs, rhs, "expected equality");
  }
  /// lhs ⊆ rhs; a proper inclusion is recorded as a strictness witness.
  void subset(std::string_view what, const ElementSet& lhs, const ElementSet& rhs) {
    if (!lhs.is_subset_of(rhs)) {
      violate(what, lhs, rhs, "expected inclusion");
    } else if (!(lhs == rhs) && !strict_.contains(std::string(what))) {
      strict_[std::string(what)] = json{{"lhs", labels_of(lhs)}, {"rhs", labels_of(rhs)}};
    }
  }
  void holds(std::string_view what, bool ok, json detail = json::object()) {
    if (!ok && !failed_.contains(std::string(what))) failed_[std::string(what)] = std::move(detail);
  }
  void note(std::string_view key, json value) { notes_[std::string(key)] = std::move(value); }
  bool failed() const { return !failed_.empty(); }

  std::pair<Verdict, json> finish() const {
    json w = notes_;
    if (!failed_.empty()) {
      w["violated"] = failed_;
      return {Verdict::Fail, w};
    }
    if (!strict_.empty()) {
      w["strict"] = strict_;
      return {Verdict::Strict, w};
    }
    return {Verdict::Pass, w};
  }

 private:
  void violate(std::string_view what, const ElementSet& lhs, const ElementSet& rhs, const char* relation) {
    if (failed_.contains(std::string(what))) return;
    failed_[std::string(what)] = json{{"relation", relation}, {"lhs", labels_of(lhs)}, {"rhs", labels_of(rhs)}};
  }

  json failed_ = json::object();
  json strict_ = json::object();
  json notes_ = json::object();
};

}  // namespace roughq::verify
