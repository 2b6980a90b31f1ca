#pragma once

#include <istream>
#include <string>

#include "dwcount/group.hpp"

namespace dwcount {

// Reads a group description:
//   perm <degree>     followed by one generator per line (space-separated images), or
//   cayley <n>        followed by n rows of n space-separated indices.
// Blank lines and lines starting with '#' are ignored.
FiniteGroup read_group(std::istream& in, std::size_t max_order = kDefaultMaxOrder);
FiniteGroup read_group_file(const std::string& path, std::size_t max_order = kDefaultMaxOrder);

// Builtin names: Cn (n <= 100), Dn (dihedral of order 2n), Sn and An (n <= 6), Q8.
FiniteGroup builtin_group(const std::string& name, std::size_t max_order = kDefaultMaxOrder);

}  // namespace dwcount
