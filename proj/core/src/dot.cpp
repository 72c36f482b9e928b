#include "symtree/dot.hpp"

#include <array>
#include <string>

namespace symtree {

namespace {

constexpr std::array<const char*, 13> kFills = {
    "white",  "red",    "royalblue", "green3", "gold",        "orchid", "orange",
    "cyan3",  "salmon", "yellowgreen", "plum", "gray70",      "tan",
};

}  // namespace

std::string to_dot(const Tree& tree, const Coloring* coloring) {
    if (coloring != nullptr) check_coloring(tree, *coloring);
    std::string out;
    out += "graph tree {\n";
    out += "  node [shape=circle, style=filled, fillcolor=white];\n";
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        const int color = coloring != nullptr ? coloring->colors[static_cast<std::size_t>(v)] : 0;
        if (color == 0) continue;
        const std::string id = std::to_string(v);
        if (color < std::ssize(kFills)) {
            out += "  " + id + " [fillcolor=" + kFills[static_cast<std::size_t>(color)] + "];\n";
        } else {
            out += "  " + id + " [fillcolor=gray90, label=\"" + id + ":c" +
                   std::to_string(color) + "\"];\n";
        }
    }
    for (Vertex v = 1; v < tree.vertex_count(); ++v)
        out += "  " + std::to_string(tree.parent(v)) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace symtree
