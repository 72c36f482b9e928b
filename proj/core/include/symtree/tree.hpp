#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace symtree {

using Vertex = std::int32_t;

// Perfect k-ary tree: every internal vertex has exactly k children, all
// leaves at depth n. k >= 2, n >= 1 (k = 1 would be a path; rejected).
struct PerfectShape {
    int k = 0;
    int n = 0;
};

// k-pode: a hub with arms.size() >= 2 paths attached, arm i of length arms[i].
struct KPodeShape {
    std::vector<std::int64_t> arms;
};

using TreeShape = std::variant<PerfectShape, KPodeShape>;

inline constexpr std::int64_t default_vertex_budget = 1'000'000;

// Rooted tree in BFS index order: root is 0 and every parent index is
// smaller than its children's. Children are stored contiguously (CSR).
class Tree {
public:
    static constexpr Vertex root = 0;

    Vertex vertex_count() const { return static_cast<Vertex>(parent_.size()); }
    Vertex parent(Vertex v) const { return parent_[v]; }  // -1 at the root
    int depth(Vertex v) const { return depth_[v]; }
    int height() const { return height_; }

    std::span<const Vertex> children(Vertex v) const {
        return {child_list_.data() + child_off_[v],
                static_cast<std::size_t>(child_off_[v + 1] - child_off_[v])};
    }
    bool is_leaf(Vertex v) const { return child_off_[v] == child_off_[v + 1]; }

    std::vector<Vertex> leaves() const;

    const TreeShape& shape() const { return shape_; }
    bool is_perfect() const { return std::holds_alternative<PerfectShape>(shape_); }

private:
    friend Tree build_perfect_tree(int, int, std::int64_t);
    friend Tree build_kpode(const std::vector<std::int64_t>&, std::int64_t);

    TreeShape shape_;
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
    std::vector<std::int32_t> child_off_;  // size V+1
    std::vector<Vertex> child_list_;
    int height_ = 0;
};

// Throws DomainError for k < 2 or n < 1, BudgetExceeded when the vertex
// count (k^(n+1)-1)/(k-1) would exceed max_vertices.
Tree build_perfect_tree(int k, int n, std::int64_t max_vertices = default_vertex_budget);

// Hub vertex 0; BFS level p >= 1 lists the p-th vertex of every arm long
// enough to reach it, in arm order. Throws DomainError for < 2 arms or an
// arm of length < 1.
Tree build_kpode(const std::vector<std::int64_t>& arms,
                 std::int64_t max_vertices = default_vertex_budget);

// Vertices at depth n - i of a perfect tree: the roots of the k^(n-i)
// leafy subtrees of depth i. i in [0, n]; i = 0 gives the leaves.
std::vector<Vertex> leafy_subtree_roots(const Tree& tree, int subtree_depth);

}  // namespace symtree
