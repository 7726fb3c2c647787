#pragma once

#include <initializer_list>
#include <string_view>

#include "oracle.hpp"
#include "roughq/roughq.hpp"

namespace support {

using namespace roughq;

inline oracle::Set to_set(const ElementSet& s) {
  const auto e = s.elements();
  return oracle::Set(e.begin(), e.end());
}

inline ElementSet from_set(const FiniteGroup& g, const oracle::Set& s) {
  ElementSet out(g);
  for (int x : s) out.insert(x);
  return out;
}

inline ElementSet labelled(const FiniteGroup& g, std::initializer_list<std::string_view> labels) {
  ElementSet s(g);
  for (auto l : labels) s.insert(g.at(l));
  return s;
}

inline ElementSet v4_in(const FiniteGroup& g) { return labelled(g, {"I", "(12)(34)", "(13)(24)", "(14)(23)"}); }

inline ElementSet a4_in(const FiniteGroup& g) {
  return labelled(g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(123)", "(132)", "(124)", "(142)", "(134)", "(143)",
                      "(234)", "(243)"});
}

}  // namespace support
