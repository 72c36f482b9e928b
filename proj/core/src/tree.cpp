#include "symtree/tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "symtree/errors.hpp"

namespace symtree {

std::vector<Vertex> Tree::leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

Tree build_perfect_tree(int k, int n, std::int64_t max_vertices) {
    if (k < 2) throw DomainError("perfect tree needs branching factor k >= 2, got k=" + std::to_string(k));
    if (n < 1) throw DomainError("perfect tree needs depth n >= 1, got n=" + std::to_string(n));
    if (max_vertices < 1 || max_vertices > std::numeric_limits<Vertex>::max())
        throw DomainError("vertex budget out of range");

    // total = (k^(n+1) - 1) / (k - 1), accumulated level by level with an
    // overflow-safe budget check
    std::int64_t total = 1, level = 1;
    for (int d = 1; d <= n; ++d) {
        if (level > max_vertices / k)
            throw BudgetExceeded("perfect tree k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                 " exceeds vertex budget " + std::to_string(max_vertices));
        level *= k;
        total += level;
        if (total > max_vertices)
            throw BudgetExceeded("perfect tree k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                 " exceeds vertex budget " + std::to_string(max_vertices));
    }

    Tree t;
    t.shape_ = PerfectShape{k, n};
    t.height_ = n;
    auto V = static_cast<Vertex>(total);
    t.parent_.resize(V);
    t.depth_.resize(V);
    t.child_off_.resize(V + 1);
    t.child_list_.resize(V - 1);

    std::int64_t internal = (total - level);  // vertices with children
    t.parent_[0] = -1;
    t.depth_[0] = 0;
    for (Vertex v = 0; v < V; ++v) {
        if (v > 0) {
            t.parent_[v] = (v - 1) / k;
            t.depth_[v] = t.depth_[t.parent_[v]] + 1;
        }
        // children of v are v*k+1 .. v*k+k in BFS order
        t.child_off_[v] = static_cast<std::int32_t>(v < internal ? std::int64_t(v) * k : total - 1);
    }
    t.child_off_[V] = static_cast<std::int32_t>(total - 1);
    std::iota(t.child_list_.begin(), t.child_list_.end(), Vertex{1});
    return t;
}

Tree build_kpode(const std::vector<std::int64_t>& arms, std::int64_t max_vertices) {
    if (arms.size() < 2) throw DomainError("k-pode needs at least 2 arms");
    for (auto a : arms)
        if (a < 1) throw DomainError("k-pode arm lengths must be >= 1");
    if (max_vertices < 1 || max_vertices > std::numeric_limits<Vertex>::max())
        throw DomainError("vertex budget out of range");

    std::int64_t total = 1;
    for (auto a : arms) {
        total += a;
        if (total > max_vertices)
            throw BudgetExceeded("k-pode exceeds vertex budget " + std::to_string(max_vertices));
    }

    Tree t;
    t.shape_ = KPodeShape{arms};
    std::int64_t longest = *std::max_element(arms.begin(), arms.end());
    t.height_ = static_cast<int>(longest);
    auto V = static_cast<Vertex>(total);
    t.parent_.assign(V, -1);
    t.depth_.assign(V, 0);

    // level p holds the p-th vertex of every arm of length >= p, in arm order
    std::vector<std::vector<Vertex>> kids(V);
    std::vector<Vertex> prev(arms.size(), 0);  // previous vertex on each arm
    Vertex next = 1;
    for (std::int64_t p = 1; p <= longest; ++p) {
        for (std::size_t i = 0; i < arms.size(); ++i) {
            if (arms[i] < p) continue;
            t.parent_[next] = prev[i];
            t.depth_[next] = static_cast<int>(p);
            kids[prev[i]].push_back(next);
            prev[i] = next;
            ++next;
        }
    }

    t.child_off_.resize(V + 1);
    t.child_list_.reserve(V - 1);
    std::int32_t off = 0;
    for (Vertex v = 0; v < V; ++v) {
        t.child_off_[v] = off;
        for (Vertex c : kids[v]) t.child_list_.push_back(c);
        off += static_cast<std::int32_t>(kids[v].size());
    }
    t.child_off_[V] = off;
    return t;
}

std::vector<Vertex> leafy_subtree_roots(const Tree& tree, int subtree_depth) {
    const auto* p = std::get_if<PerfectShape>(&tree.shape());
    if (!p) throw DomainError("leafy_subtree_roots needs a perfect k-ary tree");
    if (subtree_depth < 0 || subtree_depth > p->n)
        throw DomainError("leafy subtree depth must lie in [0, n]");

    // depth d starts at (k^d - 1)/(k - 1) and spans k^d vertices
    int d = p->n - subtree_depth;
    std::int64_t start = 0, width = 1;
    for (int i = 0; i < d; ++i) {
        start += width;
        width *= p->k;
    }
    std::vector<Vertex> out(static_cast<std::size_t>(width));
    std::iota(out.begin(), out.end(), static_cast<Vertex>(start));
    return out;
}

}  // namespace symtree
