#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roughq/io.hpp"
#include "roughq/verify/hunt.hpp"
#include "roughq/verify/suite.hpp"

namespace roughq::cli {

using json = nlohmann::json;

enum Exit : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct GroupSource {
  std::string group;
  std::string builtin;
  std::string file;

  void add_to(CLI::App& app) {
    app.add_option("--group", group, "builtin name or path to a group JSON file");
    app.add_option("--builtin", builtin, "builtin catalog name");
    app.add_option("--file", file, "group JSON file");
  }

  GroupPtr resolve() const {
    const int given = !group.empty() + !builtin.empty() + !file.empty();
    if (given != 1) throw ParseError("give exactly one of --group, --builtin, --file");
    if (!builtin.empty()) return builtin_group(builtin);
    if (!file.empty()) return io::load_group_file(file);
    return io::resolve_group(group);
  }
};

inline std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "}";
}

inline std::string braces(const ElementSet& s) { return braces(s.labels()); }

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline std::vector<std::string> corpus_list(const std::string& corpus) { return io::split_top_level(corpus); }

// ---------------------------------------------------------------------------

inline int cmd_group(const GroupPtr& g, bool as_json, std::ostream& out) {
  const auto classes = conjugacy_classes(*g);
  std::vector<int> class_sizes;
  for (const auto& c : classes) class_sizes.push_back(c.size());
  json normals = json::array();
  std::optional<std::size_t> subgroup_count;
  if (g->order() <= kMaxVerifyOrder) {
    const auto subs = all_subgroups(*g);
    subgroup_count = subs.size();
    for (const auto& s : subs)
      if (is_normal(s)) normals.push_back(io::labels_json(s));
  }
  if (as_json) {
    json j{{"name", g->name()},
           {"order", g->order()},
           {"abelian", g->is_abelian()},
           {"elements", g->labels()},
           {"class_sizes", class_sizes}};
    if (subgroup_count) {
      j["subgroups"] = *subgroup_count;
      j["normal_subgroups"] = normals;
    }
    emit(out, j);
    return kOk;
  }
  out << "group     " << g->name() << "\n";
  out << "order     " << g->order() << "\n";
  out << "abelian   " << (g->is_abelian() ? "yes" : "no") << "\n";
  out << "classes   " << classes.size() << " of sizes";
  for (int s : class_sizes) out << " " << s;
  out << "\n";
  if (subgroup_count) {
    out << "subgroups " << *subgroup_count << "\n";
    out << "normal    " << normals.size() << "\n";
    for (const auto& n : normals) out << "  " << braces(n.get<std::vector<std::string>>()) << "\n";
  } else {
    out << "subgroup lattice skipped above order " << kMaxVerifyOrder << "\n";
  }
  return kOk;
}

inline int cmd_approx(const GroupPtr& g, const std::string& normal, const std::string& subset, bool classify_only,
                      bool as_json, std::ostream& out) {
  const ElementSet n = io::parse_subset(*g, normal);
  const ElementSet h = io::parse_subset(*g, subset);
  const ApproximationSpace a = approximation_space(g, n);
  const ElementSet s = project_subset(a.quotient(), h);
  const RoughPair p = approximation_pair(a, s);
  const RoughClassification c = classify_rough_subgroup(a, s);
  if (as_json) {
    json j = io::to_json(p, c);
    j["group"] = g->name();
    j["quotient_order"] = a.quotient().order();
    emit(out, j);
    return kOk;
  }
  out << "G/N       " << a.quotient().order() << " cosets, theta classes";
  for (const auto& cl : a.classes()) out << " " << braces(cl);
  out << "\n";
  if (!classify_only) {
    out << "subject   " << braces(p.subject) << "\n";
    out << "lower     " << braces(p.lower) << "\n";
    out << "upper     " << braces(p.upper) << "\n";
  }
  out << "rough     " << (p.is_rough() ? "yes" : "no") << "\n";
  out << "lower     subgroup " << (c.lower_is_subgroup ? "yes" : "no") << ", normal " << (c.lower_is_normal ? "yes" : "no")
      << "\n";
  out << "upper     subgroup " << (c.upper_is_subgroup ? "yes" : "no") << ", normal " << (c.upper_is_normal ? "yes" : "no")
      << "\n";
  out << "kinds     " << (c.labels.empty() ? "none" : braces(c.labels)) << "\n";
  return kOk;
}

inline int cmd_thm8(const GroupPtr& g, const std::string& normal, const std::string& outer, const std::string& subset,
                    bool as_json, std::ostream& out) {
  const ElementSet n = io::parse_subset(*g, normal);
  const ElementSet m = io::parse_subset(*g, outer);
  const ElementSet h = io::parse_subset(*g, subset);
  const Theorem8Data d = theorem8_data(g, n, m, h);
  const bool psi1_ok = d.psi1.is_isomorphism() && d.g_over_k_iso.has_value();
  const bool psi2_ok = d.psi2.is_isomorphism() && d.h_over_k_iso.has_value();
  const bool phi_ok = d.phi.is_surjective() && d.phi.kernel() == d.m_over_n &&
                      d.m_over_n.size() * n.size() == m.size() && d.m_within_k && d.k_within_h;
  const bool km_ok = d.k_over_m_iso && d.k_over_m_iso->is_isomorphism();
  const bool ok = psi1_ok && psi2_ok && phi_ok && km_ok;
  if (as_json) {
    emit(out, json{{"K", io::labels_json(d.K)},
                   {"T", io::labels_json(d.T)},
                   {"psi1", io::to_json(d.psi1)},
                   {"psi2", io::to_json(d.psi2)},
                   {"phi", io::to_json(d.phi)},
                   {"M/N", io::labels_json(d.m_over_n)},
                   {"checks", {{"Thm8.1", psi1_ok}, {"Thm8.2", psi2_ok}, {"Thm8.3", phi_ok}, {"Thm8.4", km_ok}}}});
    return ok ? kOk : kVerificationFailed;
  }
  auto yes = [](bool b) { return b ? "ok" : "FAILED"; };
  out << "K         " << braces(d.K) << "\n";
  out << "T         " << braces(d.T) << "\n";
  out << "psi1      " << d.psi1.source().order() << " -> " << d.psi1.target().order() << "  " << yes(psi1_ok) << "\n";
  out << "psi2      " << d.psi2.source().order() << " -> " << d.psi2.target().order() << "  " << yes(psi2_ok) << "\n";
  out << "phi       " << d.phi.source().order() << " -> " << d.phi.target().order() << ", kernel "
      << braces(d.phi.kernel()) << "  " << yes(phi_ok) << "\n";
  out << "K/M ~ T/M " << yes(km_ok) << "\n";
  return ok ? kOk : kVerificationFailed;
}

inline std::vector<GroupPtr> load_corpus(const std::string& corpus, int all_small) {
  std::vector<std::string> names;
  if (all_small > 0) {
    if (all_small > kMaxVerifyOrder)
      throw OrderTooLarge("--all-small is limited to order " + std::to_string(kMaxVerifyOrder));
    names = small_catalog(all_small);
  }
  for (auto& name : corpus_list(corpus)) names.push_back(name);
  if (names.empty()) throw ParseError("empty corpus; give --corpus or --all-small");
  std::vector<GroupPtr> groups;
  for (const auto& name : names) groups.push_back(io::resolve_group(name));
  return groups;
}

inline int cmd_verify(const std::vector<GroupPtr>& corpus, const std::string& statements, std::uint64_t seed,
                      bool as_json, std::ostream& out) {
  verify::EnumerationOptions opt;
  opt.seed = seed;
  const auto report = verify::run_suite(corpus, corpus_list(statements), opt);
  if (as_json) {
    emit(out, verify::to_json(report));
  } else {
    out << std::left << std::setw(12) << "statement" << std::setw(24) << "shape" << std::right << std::setw(10) << "pass"
        << std::setw(10) << "strict" << std::setw(8) << "fail" << std::setw(10) << "n/a" << "\n";
    for (const auto& s : report.statements)
      out << std::left << std::setw(12) << s.id << std::setw(24) << verify::shape_name(s.shape) << std::right
          << std::setw(10) << s.pass << std::setw(10) << s.strict << std::setw(8) << s.fail << std::setw(10)
          << s.not_applicable << "\n";
    out << "groups    " << braces(report.groups) << "\n";
    out << "failures  " << report.failures() << "\n";
    if (const auto* bad = report.first_failing()) out << "first     " << verify::to_json(*bad->first_failure).dump() << "\n";
  }
  return report.failures() == 0 ? kOk : kVerificationFailed;
}

inline int cmd_hunt(const std::vector<GroupPtr>& corpus, const std::string& property, std::size_t limit,
                    const std::string& expect, std::uint64_t seed, bool as_json, std::ostream& out) {
  if (!expect.empty() && expect != "found" && expect != "none") throw ParseError("--expect must be 'found' or 'none'");
  const auto witnesses = verify::hunt(property, corpus, verify::hunt_options(seed), limit);
  if (as_json) {
    json list = json::array();
    for (const auto& w : witnesses) list.push_back(verify::to_json(w));
    emit(out, json{{"property", property}, {"count", witnesses.size()}, {"witnesses", list}});
  } else {
    out << property << ": " << witnesses.size() << " witness" << (witnesses.size() == 1 ? "" : "es") << "\n";
    for (const auto& w : witnesses) {
      out << "  " << w.group;
      for (const char* key : {"N", "H1", "H2", "M"})
        if (w.instance.contains(key)) out << "  " << key << "=" << braces(w.instance[key].get<std::vector<std::string>>());
      out << "\n";
    }
  }
  if (expect == "found" && witnesses.empty()) return kVerificationFailed;
  if (expect == "none" && !witnesses.empty()) return kVerificationFailed;
  return kOk;
}

// ---------------------------------------------------------------------------

/// Entry point shared by the executable and the tests; `args` excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rough approximations on quotient groups", "roughq"};
  app.require_subcommand(1);
  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "sampling seed");

  GroupSource group_src, approx_src, classify_src, thm8_src;
  std::string normal, subset, outer, corpus, statements = "all", property, expect;
  int all_small = 0;
  std::size_t limit = 0;

  auto* group = app.add_subcommand("group", "summarize a group");
  group_src.add_to(*group);

  auto* approx = app.add_subcommand("approx", "lower and upper approximations of H/N");
  approx_src.add_to(*approx);
  approx->add_option("--normal", normal, "normal subgroup N")->required();
  approx->add_option("--subset", subset, "subset H containing N")->required();

  auto* classify = app.add_subcommand("classify", "rough subgroup classification of H/N");
  classify_src.add_to(*classify);
  classify->add_option("--normal", normal, "normal subgroup N")->required();
  classify->add_option("--subset", subset, "subset H containing N")->required();

  auto* thm8 = app.add_subcommand("thm8", "maps between quotients by K and T for N <= M <= H");
  thm8_src.add_to(*thm8);
  thm8->add_option("--normal", normal, "normal subgroup N")->required();
  thm8->add_option("--outer", outer, "normal subgroup M containing N")->required();
  thm8->add_option("--subset", subset, "subgroup H containing M")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check every statement over a corpus");
  verify_cmd->add_option("--corpus", corpus, "comma-separated group names or files");
  verify_cmd->add_option("--all-small", all_small, "add every catalog group up to this order");
  verify_cmd->add_option("--statements", statements, "comma-separated statement ids, 'all' or 'examples'");

  auto* hunt_cmd = app.add_subcommand("hunt", "search the corpus for strictness witnesses");
  hunt_cmd->add_option("--property", property, "property name")->required();
  hunt_cmd->add_option("--corpus", corpus, "comma-separated group names or files");
  hunt_cmd->add_option("--all-small", all_small, "add every catalog group up to this order");
  hunt_cmd->add_option("--limit", limit, "stop after this many witnesses (0 = all)");
  hunt_cmd->add_option("--expect", expect, "found or none; exit 1 when not met");

  for (auto* sub : {group, approx, classify, thm8, verify_cmd, hunt_cmd}) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", seed, "sampling seed");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const bool as_json = format == "json";
  try {
    if (group->parsed()) return cmd_group(group_src.resolve(), as_json, out);
    if (approx->parsed()) return cmd_approx(approx_src.resolve(), normal, subset, false, as_json, out);
    if (classify->parsed()) return cmd_approx(classify_src.resolve(), normal, subset, true, as_json, out);
    if (thm8->parsed()) return cmd_thm8(thm8_src.resolve(), normal, outer, subset, as_json, out);
    if (verify_cmd->parsed()) return cmd_verify(load_corpus(corpus, all_small), statements, seed, as_json, out);
    if (hunt_cmd->parsed()) return cmd_hunt(load_corpus(corpus, all_small), property, limit, expect, seed, as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace roughq::cli
