#pragma once

#include <vector>

#include "symtree/coloring.hpp"
#include "symtree/tree.hpp"

namespace symtree::testsupport {

// Every color-preserving automorphism of the tree as a vertex permutation,
// found by plain backtracking over degree- and color-compatible bijections.
// Deliberately avoids canonical codes so it can cross-check them.
std::vector<std::vector<Vertex>> brute_automorphisms(const Tree& tree,
                                                     const Coloring* coloring = nullptr);

bool brute_distinguishing(const Tree& tree, const Coloring& coloring);

// Colored rooted-subtree isomorphism in the stored orientation, matching
// children by trying every pairing.
bool brute_rooted_isomorphic(const Tree& tree, const Coloring* coloring, Vertex a, Vertex b);

}  // namespace symtree::testsupport
