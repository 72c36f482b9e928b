#pragma once

#include <string>

#include "symtree/coloring.hpp"
#include "symtree/tree.hpp"

namespace symtree {

// Graphviz source for the tree. Color 0 renders as white, colors 1..12 use a
// fixed palette of named fills, and anything higher falls back to a gray node
// whose label carries the color index.
std::string to_dot(const Tree& tree, const Coloring* coloring = nullptr);

}  // namespace symtree
