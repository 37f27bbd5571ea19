#pragma once

#include <string_view>

#include "superchar/group.hpp"

namespace superchar {

GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int degree);
GroupPtr alternating_group(int degree);
/// Symmetries of the regular n-gon, order 2n (n >= 3).
GroupPtr dihedral_group(int n);
/// Dicyclic group of order n (n divisible by 4); q8 is the quaternion group.
GroupPtr quaternion_group(int n);

/// Parses "cN", "sN", "aN", "dN" or "qN" (case-insensitive).
GroupPtr builtin_group(std::string_view spec, int max_order = 200);

}  // namespace superchar
