#pragma once

#include <string>

#include "edfforge/edf.hpp"

namespace edfforge {

// Renders the element-level digraph of a witness: one node per family
// element (node label = residue), one directed edge per ordered element pair
// of each witness arc, edge label = difference mod n.
std::string witness_to_dot(const EdfWitness& w);

}  // namespace edfforge
