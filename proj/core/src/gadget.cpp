#include "morsekit/gadget.hpp"

#include <algorithm>

namespace morsekit {

const std::vector<std::vector<const char*>>& gadget_triangles() {
  static const std::vector<std::vector<const char*>> tris = {
      {"s", "t", "u"}, {"s", "t", "w"}, {"q", "s", "w"}, {"q", "u", "w"}, {"r", "u", "w"},
      {"q", "r", "u"}, {"q", "r", "s"}, {"r", "s", "v"}, {"q", "s", "v"}, {"q", "u", "v"},
      {"t", "u", "v"}, {"r", "t", "v"}, {"r", "t", "w"}};
  return tris;
}

Gadget modified_dunce_hat() {
  std::vector<std::vector<std::string>> faces;
  for (const auto& t : gadget_triangles()) faces.push_back({t[0], t[1], t[2]});
  return Gadget{SimplicialComplex::from_maximal(faces),
                Simplex({"s", "u"}),
                Simplex({"s", "t"}),
                Simplex({"t", "v"}),
                Simplex({"t", "w"}),
                Simplex({"s", "t", "u"})};
}

std::vector<GradientPair> dunce_gradient(const Gadget&) {
  auto S = [](std::initializer_list<const char*> verts) {
    return Simplex(std::vector<std::string>(verts.begin(), verts.end()));
  };
  std::vector<GradientPair> pairs = {
      // one edge per triangle
      {S({"s", "u"}), S({"s", "t", "u"})},
      {S({"t", "u"}), S({"t", "u", "v"})},
      {S({"u", "v"}), S({"q", "u", "v"})},
      {S({"s", "v"}), S({"r", "s", "v"})},
      {S({"r", "v"}), S({"r", "t", "v"})},
      {S({"q", "v"}), S({"q", "s", "v"})},
      {S({"r", "s"}), S({"q", "r", "s"})},
      {S({"r", "t"}), S({"r", "t", "w"})},
      {S({"q", "r"}), S({"q", "r", "u"})},
      {S({"r", "u"}), S({"r", "u", "w"})},
      {S({"u", "w"}), S({"q", "u", "w"})},
      {S({"q", "w"}), S({"q", "s", "w"})},
      {S({"s", "w"}), S({"s", "t", "w"})},
      // five vertices matched upward; s and t stay critical
      {S({"u"}), S({"q", "u"})},
      {S({"q"}), S({"q", "s"})},
      {S({"r"}), S({"r", "w"})},
      {S({"v"}), S({"t", "v"})},
      {S({"w"}), S({"t", "w"})},
  };
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace morsekit
