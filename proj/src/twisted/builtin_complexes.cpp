#include "novikov/twisted/builtin_complexes.hpp"

namespace novikov::twisted::builtin {

namespace {

BoundaryTerm term(const std::string& cell, int coef, std::vector<int> weight) {
  return BoundaryTerm{cell, Integer(coef), std::move(weight)};
}

}  // namespace

WeightedCWComplex circle(bool twisted) {
  WeightedCWComplex x;
  x.name = twisted ? "s1_twisted" : "s1";
  x.s = twisted ? 1 : 0;
  auto w = [&](int v) { return twisted ? std::vector<int>{v} : std::vector<int>{}; };
  x.cells.push_back({"v", 0, {}});
  x.cells.push_back({"e", 1, {term("v", 1, w(1)), term("v", -1, w(0))}});
  return x;
}

WeightedCWComplex torus(bool twisted) {
  WeightedCWComplex x;
  x.name = twisted ? "t2_twisted" : "t2";
  x.s = twisted ? 1 : 0;
  auto w = [&](int v) { return twisted ? std::vector<int>{v} : std::vector<int>{}; };
  x.cells.push_back({"v", 0, {}});
  x.cells.push_back({"e1", 1, {term("v", 1, w(1)), term("v", -1, w(0))}});
  x.cells.push_back({"e2", 1, {term("v", 1, w(0)), term("v", -1, w(0))}});
  // Attaching word e1 e2 e1^-1 e2^-1.
  x.cells.push_back({"f", 2,
                     {term("e1", 1, w(0)), term("e2", 1, w(1)), term("e1", -1, w(0)),
                      term("e2", -1, w(0))}});
  return x;
}

WeightedCWComplex sphere() {
  WeightedCWComplex x;
  x.name = "s2";
  x.cells.push_back({"v", 0, {}});
  x.cells.push_back({"f", 2, {}});
  return x;
}

WeightedCWComplex projective_plane() {
  WeightedCWComplex x;
  x.name = "rp2";
  x.cells.push_back({"v", 0, {}});
  x.cells.push_back({"e", 1, {term("v", 1, {}), term("v", -1, {})}});
  x.cells.push_back({"f", 2, {term("e", 1, {}), term("e", 1, {})}});
  return x;
}

WeightedCWComplex d_t() {
  WeightedCWComplex x;
  x.name = "d_t";
  x.s = 1;
  x.cells.push_back({"v", 0, {}});
  x.cells.push_back({"e", 1, {term("v", 1, {1})}});
  return x;
}

LocalSystem circle_swap_system() {
  LocalSystem e;
  e.k = 2;
  IntMatrix swap(2, 2, Integer(0));
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  e.monodromy["e"] = swap;
  return e;
}

std::vector<std::string> names() { return {"s1", "s1_twisted", "t2", "t2_twisted", "s2", "rp2", "d_t"}; }

std::optional<WeightedCWComplex> by_name(const std::string& name) {
  if (name == "s1") return circle(false);
  if (name == "s1_twisted") return circle(true);
  if (name == "t2") return torus(false);
  if (name == "t2_twisted") return torus(true);
  if (name == "s2") return sphere();
  if (name == "rp2") return projective_plane();
  if (name == "d_t") return d_t();
  return std::nullopt;
}

}  // namespace novikov::twisted::builtin
