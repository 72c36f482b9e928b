#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symtree/bigint.hpp"
#include "symtree/coloring.hpp"
#include "symtree/tree.hpp"

namespace symtree {

struct AutomorphismReport {
    BigInt count = 1;
    // Color-preserving permutations of the vertex set, filled only when
    // enumeration was requested and count stayed within the cap.
    std::optional<std::vector<std::vector<Vertex>>> elements;
};

// True iff the identity is the only automorphism of the colored tree,
// i.e. at every vertex of the center-rooted view the children's colored
// subtree codes are pairwise distinct.
bool is_distinguishing(const Tree& tree, const Coloring& coloring);

// Exact number of color-preserving automorphisms (all automorphisms when
// coloring is null). Optionally enumerates them explicitly.
AutomorphismReport automorphism_count(const Tree& tree,
                                      const Coloring* coloring = nullptr,
                                      bool enumerate = false,
                                      std::int64_t enumerate_cap = 1'000'000);

// Does pinning each vertex of specials with its own fresh color kill every
// nontrivial automorphism?
bool is_fixing_set(const Tree& tree, const std::vector<Vertex>& specials);

// Smallest size of a fixing set of leaves, by ascending exhaustive search.
// Throws BudgetExceeded when the tree has more than max_leaves leaves.
int fixing_number_bruteforce(const Tree& tree, int max_leaves = 20);

}  // namespace symtree
