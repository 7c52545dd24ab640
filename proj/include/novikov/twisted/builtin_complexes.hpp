#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/twisted/weighted_cw.hpp"

namespace novikov::twisted::builtin {

/// Circle: vertex v, edge e. With `twisted` the +1 end of e carries weight 1.
WeightedCWComplex circle(bool twisted);
/// Torus: vertex v, edges e1, e2, face f. With `twisted` the class is dual to e1.
WeightedCWComplex torus(bool twisted);
/// Sphere: one 0-cell, one 2-cell.
WeightedCWComplex sphere();
/// Real projective plane: d_1 = 0, d_2 = [2].
WeightedCWComplex projective_plane();
/// One vertex and one edge with d = [t].
WeightedCWComplex d_t();

/// Rank-2 local system on the circle swapping the two sheets.
LocalSystem circle_swap_system();

/// Registry keyed by name: s1, s1_twisted, t2, t2_twisted, s2, rp2, d_t.
std::vector<std::string> names();
std::optional<WeightedCWComplex> by_name(const std::string& name);

}  // namespace novikov::twisted::builtin
