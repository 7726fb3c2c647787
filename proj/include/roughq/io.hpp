#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "roughq/approximation.hpp"
#include "roughq/catalog.hpp"
#include "roughq/homomorphism.hpp"

namespace roughq::io {

using json = nlohmann::json;

/// Splits on commas outside parentheses, trimming blanks; "(12),(34)" gives
/// two items and "direct_product(a,b)" one.
inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t\n");
    const auto e = cur.find_last_not_of(" \t\n");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  return out;
}

inline json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

/// Subset literal: comma-separated labels or a JSON array of labels.
inline ElementSet parse_subset(const FiniteGroup& g, std::string_view text) {
  std::vector<std::string> labels;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') {
    const json j = parse_json(text, "subset literal");
    if (!j.is_array()) throw ParseError("subset literal must be an array of labels");
    for (const auto& item : j) {
      if (!item.is_string()) throw ParseError("subset labels must be strings");
      labels.push_back(item.get<std::string>());
    }
  } else {
    labels = split_top_level(text);
  }
  ElementSet s(g);
  for (const auto& l : labels) s.insert(g.at(l));
  return s;
}

inline GroupPtr group_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("group spec needs a \"kind\" field");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "builtin") return builtin_group(j.at("name").get<std::string>());
    if (kind == "cayley") {
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return build_from_cayley_table(table, labels, j.value("name", std::string{}));
    }
    if (kind == "permutation") {
      PermutationSpec spec;
      spec.degree = j.at("degree").get<int>();
      spec.generators = j.at("generators").get<std::vector<std::vector<int>>>();
      return build_from_permutations(spec, j.value("name", std::string{}));
    }
    throw ParseError("unknown group kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("group spec: ") + e.what());
  }
}

inline GroupPtr load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json(parse_json(buf.str(), path.string()));
}

/// A path to an existing file is loaded as JSON, anything else is a builtin name.
inline GroupPtr resolve_group(const std::string& name_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) return load_group_file(name_or_path);
  return builtin_group(name_or_path);
}

inline json labels_json(const ElementSet& s) { return json(s.labels()); }

inline json to_json(const RoughPair& p, const RoughClassification& c) {
  return json{{"subject", labels_json(p.subject)},
              {"lower", labels_json(p.lower)},
              {"upper", labels_json(p.upper)},
              {"is_rough", p.is_rough()},
              {"flags",
               {{"upper_is_subgroup", c.upper_is_subgroup},
                {"upper_is_normal", c.upper_is_normal},
                {"lower_is_subgroup", c.lower_is_subgroup},
                {"lower_is_normal", c.lower_is_normal},
                {"is_rough", c.is_rough}}},
              {"labels", c.labels}};
}

inline json to_json(const GroupHom& h) {
  return json{{"source", h.source().name()},
              {"target", h.target().name()},
              {"map", h.map()},
              {"kernel", labels_json(h.kernel())},
              {"surjective", h.is_surjective()}};
}

}  // namespace roughq::io
