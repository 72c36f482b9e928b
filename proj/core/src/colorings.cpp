#include "symtree/colorings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symtree/errors.hpp"

namespace symtree {

std::int64_t paint_cost(const Coloring& c) {
    return std::count_if(c.colors.begin(), c.colors.end(), [](int x) { return x != 0; });
}

void check_coloring(const Tree& tree, const Coloring& c) {
    if (c.palette < 1) throw DomainError("coloring palette must be >= 1");
    if (static_cast<Vertex>(c.colors.size()) != tree.vertex_count())
        throw DomainError("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                          std::to_string(tree.vertex_count()) + " vertices");
    for (int x : c.colors)
        if (x < 0 || x >= c.palette) throw DomainError("color out of palette range");
}

Coloring neutral_coloring(const Tree& tree, int palette) {
    if (palette < 1) throw DomainError("coloring palette must be >= 1");
    return Coloring{palette, std::vector<int>(tree.vertex_count(), 0)};
}

namespace {

// first BFS index of depth d in T(k, *): (k^d - 1) / (k - 1)
std::int64_t level_start(int k, int d) {
    std::int64_t s = 0, w = 1;
    for (int i = 0; i < d; ++i) {
        s += w;
        w *= k;
    }
    return s;
}

std::int64_t ipow(int k, int e) {
    std::int64_t w = 1;
    for (int i = 0; i < e; ++i) w *= k;
    return w;
}

int frugal_palette(int k, int n) { return n == 1 ? k : (n == 2 ? k + 1 : k + 2); }

// counts of colors 1..k over an assignment
std::vector<std::int64_t> special_counts(const std::vector<int>& colors, int k) {
    std::vector<std::int64_t> cnt(k + 1, 0);
    for (int c : colors)
        if (c >= 1 && c <= k) ++cnt[c];
    return cnt;
}

void check_frugal_counts(const std::vector<int>& colors, int k, int n) {
    auto cnt = special_counts(colors, k);
    if (k >= 3) {
        // the next composition step permutes the classes of c_1..c_k and
        // needs their sizes pairwise distinct
        for (int a = 1; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b)
                if (cnt[a] == cnt[b])
                    throw std::logic_error("frugal invariant broken at k=" + std::to_string(k) +
                                           " n=" + std::to_string(n));
    } else {
        // k = 2 only ever needs one unequal pair among c_1..c_3 to swap
        auto all = special_counts(colors, 3);
        if (all[1] == all[2] && all[2] == all[3])
            throw std::logic_error("frugal invariant broken at k=2 n=" + std::to_string(n));
    }
}

std::vector<int> frugal_assignment(int k, int n) {
    if (n == 1) {
        // leaf i gets color i-1; the first leaf stays neutral
        std::vector<int> colors(1 + k, 0);
        for (int i = 1; i <= k; ++i) colors[i] = i - 1;
        return colors;
    }
    if (n == 2) {
        // depth-1 subtree j misses special color j+1; its leaves take the
        // remaining colors (neutral included) in ascending order
        std::vector<int> colors(level_start(k, 3), 0);
        for (int j = 0; j < k; ++j) {
            std::vector<int> pal;
            for (int c = 0; c <= k; ++c)
                if (c != j + 1) pal.push_back(c);
            std::int64_t first_leaf = std::int64_t(j + 1) * k + 1;
            for (int t = 0; t < k; ++t) colors[first_leaf + t] = pal[t];
        }
        return colors;
    }

    std::vector<int> prev = frugal_assignment(k, n - 1);
    std::vector<int> out(level_start(k, n + 1), 0);

    // per-copy recoloring of the special classes; identity map unless set below
    std::vector<int> identity(k + 2);
    std::iota(identity.begin(), identity.end(), 0);

    std::vector<int> rank_color;  // rank r (descending count) -> color, k >= 3 steps
    int swap_a = 0, swap_b = 0;   // k = 2 steps
    if (n > 3) {
        if (k >= 3) {
            auto cnt = special_counts(prev, k);
            rank_color.resize(k + 1);
            std::vector<int> by_count(k);
            std::iota(by_count.begin(), by_count.end(), 1);
            std::sort(by_count.begin(), by_count.end(),
                      [&](int a, int b) { return cnt[a] > cnt[b]; });
            for (int r = 1; r <= k; ++r) rank_color[r] = by_count[r - 1];
        } else {
            auto cnt = special_counts(prev, 3);
            for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}})
                if (cnt[a] != cnt[b]) {
                    swap_a = a;
                    swap_b = b;
                    break;
                }
        }
    }

    for (int j = 1; j <= k; ++j) {
        std::vector<int> map = identity;
        std::int64_t substitutions = 0;
        if (n == 3) {
            // copy j rewrites its first j-1 occurrences of color j-1 (in
            // BFS order) to the fresh color k+1
            substitutions = j - 1;
        } else if (k >= 3) {
            // copy j applies the j-cycle on the count ranks: the smallest
            // class moves up j-1 ranks and the displaced ones shift down
            for (int r = 1; r <= k; ++r) {
                int to = r;
                if (r == k)
                    to = k - j + 1;
                else if (r >= k - j + 1)
                    to = r + 1;
                map[rank_color[r]] = rank_color[to];
            }
        } else if (j == 2) {
            map[swap_a] = swap_b;
            map[swap_b] = swap_a;
        }

        std::int64_t pending = substitutions;
        for (int e = 0; e <= n - 1; ++e) {
            std::int64_t ps = level_start(k, e), bw = ipow(k, e);
            std::int64_t ns = level_start(k, e + 1) + std::int64_t(j - 1) * bw;
            for (std::int64_t t = 0; t < bw; ++t) {
                int c = prev[ps + t];
                if (n == 3 && pending > 0 && c == j - 1) {
                    c = k + 1;
                    --pending;
                } else {
                    c = map[c];
                }
                out[ns + t] = c;
            }
        }
        if (pending != 0) throw std::logic_error("frugal substitution ran out of targets");
    }

    check_frugal_counts(out, k, n);
    return out;
}

std::vector<std::vector<int>> variant_assignments(int k) {
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t(k) * k + 2 * k);
    const std::vector<int> efficient = frugal_assignment(k, 2);

    for (int i = 1; i <= k; ++i) {
        auto v = efficient;
        v[0] = i;
        out.push_back(std::move(v));
    }
    for (int d1 = 1; d1 <= k; ++d1)
        for (int i = 1; i <= k; ++i) {
            auto v = efficient;
            v[d1] = i;
            out.push_back(std::move(v));
        }
    for (int j = 0; j < k; ++j) {
        // the neutral leaf of subtree j sits first among its children
        // because the leaf palette was assigned in ascending order
        auto v = efficient;
        v[std::int64_t(j + 1) * k + 1] = j + 1;
        out.push_back(std::move(v));
    }
    return out;
}

// depth-3 gadget: an optimally colored T(k, 2) plus k-1 distinct
// almost-efficient variants hang under a neutral root. block selects which
// contiguous run of variants is used, so different blocks give
// non-isomorphic gadgets of equal paint cost.
std::vector<int> gadget_assignment(int k, int block,
                                   const std::vector<int>& efficient,
                                   const std::vector<std::vector<int>>& variants) {
    std::vector<int> out(level_start(k, 4), 0);
    for (int m = 1; m <= k; ++m) {
        const std::vector<int>& src =
            m == 1 ? efficient : variants[std::size_t(block) * (k - 1) + (m - 2)];
        for (int e = 0; e <= 2; ++e) {
            std::int64_t ps = level_start(k, e), bw = ipow(k, e);
            std::int64_t ns = level_start(k, e + 1) + std::int64_t(m - 1) * bw;
            for (std::int64_t t = 0; t < bw; ++t) out[ns + t] = src[ps + t];
        }
    }
    return out;
}

}  // namespace

Coloring k_distinguishing_coloring(int k, int n, std::int64_t max_vertices) {
    Tree t = build_perfect_tree(k, n, max_vertices);
    Coloring c{k, std::vector<int>(t.vertex_count(), 0)};
    for (Vertex v = 1; v < t.vertex_count(); ++v) c.colors[v] = (v - 1) % k;
    return c;
}

Coloring frugal_coloring(int k, int n, std::int64_t max_vertices) {
    build_perfect_tree(k, n, max_vertices);  // validates k, n and the budget
    return Coloring{frugal_palette(k, n), frugal_assignment(k, n)};
}

Coloring middle_coloring(int k, int n, std::int64_t max_vertices) {
    build_perfect_tree(k, n, max_vertices);  // validates k, n and the budget
    Coloring c{k + 1, {}};

    if (n == 1) {
        c.colors.assign(std::size_t(k) + 1, 0);
        for (int i = 2; i <= k; ++i) c.colors[i] = i - 1;
        return c;
    }
    if (n == 2) {
        c.colors = frugal_assignment(k, 2);
        return c;
    }

    const std::vector<int> efficient = frugal_assignment(k, 2);
    const auto variants = variant_assignments(k);

    if (n == 3) {
        c.colors = gadget_assignment(k, 0, efficient, variants);
        return c;
    }

    // replace every leaf of a frugally colored T(k, n-3) by a depth-3
    // gadget picked by the leaf's color; gadgets for distinct colors use
    // disjoint variant blocks, so leaf distinctness survives substitution
    std::vector<int> base = frugal_assignment(k, n - 3);
    int base_palette = frugal_palette(k, n - 3);
    std::vector<std::vector<int>> gadgets(base_palette);
    for (int j = 0; j < base_palette; ++j) gadgets[j] = gadget_assignment(k, j, efficient, variants);

    c.colors.assign(std::size_t(level_start(k, n + 1)), 0);
    std::int64_t leaf_start = level_start(k, n - 3), leaf_count = ipow(k, n - 3);
    for (std::int64_t o = 0; o < leaf_count; ++o) {
        const std::vector<int>& g = gadgets[base[leaf_start + o]];
        for (int r = 0; r <= 3; ++r) {
            std::int64_t ps = level_start(k, r), bw = ipow(k, r);
            std::int64_t ns = level_start(k, n - 3 + r) + o * bw;
            for (std::int64_t u = 0; u < bw; ++u) c.colors[ns + u] = g[ps + u];
        }
    }
    return c;
}

std::vector<Coloring> almost_efficient_variants(int k) {
    if (k < 2) throw DomainError("almost_efficient_variants needs k >= 2");
    std::vector<Coloring> out;
    for (auto& a : variant_assignments(k)) out.push_back(Coloring{k + 1, std::move(a)});
    return out;
}

std::pair<Tree, Coloring> kpode_equality_coloring(int d, std::int64_t t,
                                                  std::int64_t max_vertices) {
    if (d < 1) throw DomainError("kpode_equality_coloring needs d >= 1");
    if (t < d)
        throw DomainError("kpode_equality_coloring needs arm length t >= d, got t=" +
                          std::to_string(t) + " d=" + std::to_string(d));
    Tree tree = build_kpode(std::vector<std::int64_t>(std::size_t(d) + 1, t), max_vertices);
    Coloring c = neutral_coloring(tree, 2);
    // arm i carries its special at distance i from the hub; the last arm
    // stays blank, so all d+1 arms end up pairwise non-isomorphic
    for (int i = 1; i <= d; ++i) c.colors[1 + std::int64_t(i - 1) * (d + 2)] = 1;
    return {std::move(tree), std::move(c)};
}

}  // namespace symtree
