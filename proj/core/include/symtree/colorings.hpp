#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symtree/coloring.hpp"
#include "symtree/tree.hpp"

namespace symtree {

// Colored constructions for perfect k-ary trees T(k, n). All of them are
// distinguishing: only the identity automorphism preserves the color
// classes. Palettes are fixed by the scheme and never renormalized.

// Palette k. Every non-root vertex is colored by its sibling index, so
// sibling subtrees always differ in their root color. Paint cost k^n - 1.
Coloring k_distinguishing_coloring(int k, int n,
                                   std::int64_t max_vertices = default_vertex_budget);

// Cheapest-known scheme on the minimum possible palette (k colors for
// n = 1, k+1 for n = 2, k+2 for n >= 3). Paint cost (k-1) * k^(n-1).
Coloring frugal_coloring(int k, int n, std::int64_t max_vertices = default_vertex_budget);

// Scheme on palette k+1 with paint cost k-1 (n = 1), k(k-1) (n = 2),
// (k-1)(k^2+1)*k^(n-3) (n >= 3).
Coloring middle_coloring(int k, int n, std::int64_t max_vertices = default_vertex_budget);

// The k^2 + 2k distinguishing colorings of T(k, 2) that cost exactly one
// more than the k(k-1) optimum, pairwise non-isomorphic and all on palette
// k+1. Ordered: k root recolorings, then k^2 depth-1 recolorings (vertex
// major, then color), then the k colorings that paint the neutral leaf of
// a depth-1 subtree with that subtree's missing color.
std::vector<Coloring> almost_efficient_variants(int k);

// The (d+1)-pode with every arm of length t (t >= d), colored with one
// special color at distance i from the hub on arm i for i = 1..d. Cost d,
// palette 2, and the coloring is distinguishing.
std::pair<Tree, Coloring> kpode_equality_coloring(int d, std::int64_t t,
                                                  std::int64_t max_vertices = default_vertex_budget);

}  // namespace symtree
