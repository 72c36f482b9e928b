#pragma once

#include <cstdint>
#include <vector>

#include "symtree/tree.hpp"

namespace symtree {

// Vertex coloring with palette {0, 1, ..., palette-1}. Color 0 is the
// neutral background color; colors 1.. are the special (paint) colors.
// Palettes are never renormalized: a coloring that skips a color keeps it.
struct Coloring {
    int palette = 1;
    std::vector<int> colors;
};

// Number of non-neutral vertices.
std::int64_t paint_cost(const Coloring& c);

// Throws DomainError unless c has one entry per vertex of tree, each in
// [0, palette).
void check_coloring(const Tree& tree, const Coloring& c);

// All-neutral coloring of tree with the given palette size.
Coloring neutral_coloring(const Tree& tree, int palette = 1);

}  // namespace symtree
