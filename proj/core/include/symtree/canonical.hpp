#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symtree/coloring.hpp"
#include "symtree/tree.hpp"

namespace symtree {

// Canonical form of a colored rooted tree as a byte string: BE32(color of
// the root), then for each child subtree code in lexicographic byte order a
// BE32 length prefix followed by the code itself. All fields are 4-byte
// big-endian words, so codes are comparable with plain string compare and
// two subtrees receive equal codes iff they are isomorphic as colored
// rooted trees.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const Tree& tree, const Coloring& coloring,
                             Vertex v = Tree::root);
CanonicalCode canonical_code(const Tree& tree, Vertex v = Tree::root);

// A rooted orientation of a tree's vertex set. When rooted at a bicentral
// edge, an extra virtual vertex (index vertex_count) adopts the two center
// halves; it carries a reserved color no real vertex can have.
struct RootedView {
    std::vector<Vertex> order;                  // parents before children
    std::vector<std::vector<Vertex>> children;  // indexed by vertex
    Vertex view_root = 0;
    bool has_virtual_root = false;
};

RootedView reroot(const Tree& tree, Vertex new_root);

// One or two middle vertices of the longest path, by leaf peeling.
std::vector<Vertex> tree_center(const Tree& tree);

// View rooted at the center (virtual-edge-rooted when bicentral), so that
// automorphisms of the unrooted colored tree are exactly the ones of the
// rooted view. For a perfect k-ary tree this is the stored orientation.
RootedView center_view(const Tree& tree);

// ids[v] interns the colored subtree below v in the view: equal ids iff
// equal canonical codes. Runs bottom-up without recursion, so arbitrarily
// deep trees (long pode arms) are fine. Null coloring means all-neutral.
std::vector<std::int32_t> subtree_ids(const RootedView& view, const Coloring* coloring);

}  // namespace symtree
