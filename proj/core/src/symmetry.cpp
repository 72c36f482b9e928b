#include "symtree/symmetry.hpp"

#include <algorithm>
#include <functional>

#include "symtree/canonical.hpp"
#include "symtree/errors.hpp"

namespace symtree {

namespace {

// children of v bucketed by subtree id; buckets ordered by id, vertices
// inside a bucket ascending
std::vector<std::vector<Vertex>> id_groups(const RootedView& view,
                                           const std::vector<std::int32_t>& ids, Vertex v) {
    std::vector<Vertex> kids(view.children[v].begin(), view.children[v].end());
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
        return ids[a] != ids[b] ? ids[a] < ids[b] : a < b;
    });
    std::vector<std::vector<Vertex>> groups;
    for (Vertex c : kids) {
        if (groups.empty() || ids[groups.back().back()] != ids[c]) groups.emplace_back();
        groups.back().push_back(c);
    }
    return groups;
}

// walks the matching forest, emitting every colored automorphism as a
// vertex permutation; work[i] pairs a source vertex with its image
struct AutomorphismEnumerator {
    const RootedView& view;
    const std::vector<std::int32_t>& ids;
    Vertex real_count;

    std::vector<Vertex> image;
    std::vector<std::pair<Vertex, Vertex>> work;
    std::vector<std::vector<Vertex>> out;

    void run() {
        image.assign(view.children.size(), -1);
        image[view.view_root] = view.view_root;
        work.push_back({view.view_root, view.view_root});
        step(0);
    }

    void step(std::size_t i) {
        if (i == work.size()) {
            std::vector<Vertex> perm(image.begin(), image.begin() + real_count);
            out.push_back(std::move(perm));
            return;
        }
        auto [v, w] = work[i];
        auto src = id_groups(view, ids, v);
        auto dst = id_groups(view, ids, w);  // same bucket shapes since ids[v] == ids[w]

        std::vector<std::vector<std::size_t>> pick(src.size());
        std::function<void(std::size_t)> choose = [&](std::size_t g) {
            if (g == src.size()) {
                std::size_t base = work.size();
                for (std::size_t h = 0; h < src.size(); ++h)
                    for (std::size_t j = 0; j < src[h].size(); ++j) {
                        image[src[h][j]] = dst[h][pick[h][j]];
                        work.push_back({src[h][j], dst[h][pick[h][j]]});
                    }
                step(i + 1);
                work.resize(base);
                return;
            }
            pick[g].resize(src[g].size());
            for (std::size_t j = 0; j < pick[g].size(); ++j) pick[g][j] = j;
            do {
                choose(g + 1);
            } while (std::next_permutation(pick[g].begin(), pick[g].end()));
        };
        choose(0);
    }
};

}  // namespace

bool is_distinguishing(const Tree& tree, const Coloring& coloring) {
    check_coloring(tree, coloring);
    RootedView view = center_view(tree);
    auto ids = subtree_ids(view, &coloring);

    std::vector<std::int32_t> kid_ids;
    for (std::size_t v = 0; v < view.children.size(); ++v) {
        const auto& kids = view.children[v];
        if (kids.size() < 2) continue;
        kid_ids.clear();
        for (Vertex c : kids) kid_ids.push_back(ids[c]);
        std::sort(kid_ids.begin(), kid_ids.end());
        if (std::adjacent_find(kid_ids.begin(), kid_ids.end()) != kid_ids.end()) return false;
    }
    return true;
}

AutomorphismReport automorphism_count(const Tree& tree, const Coloring* coloring,
                                      bool enumerate, std::int64_t enumerate_cap) {
    if (coloring) check_coloring(tree, *coloring);
    RootedView view = center_view(tree);
    auto ids = subtree_ids(view, coloring);

    AutomorphismReport report;
    std::vector<std::int32_t> kid_ids;
    for (std::size_t v = 0; v < view.children.size(); ++v) {
        kid_ids.clear();
        for (Vertex c : view.children[v]) kid_ids.push_back(ids[c]);
        std::sort(kid_ids.begin(), kid_ids.end());
        std::size_t run = 1;
        for (std::size_t i = 1; i <= kid_ids.size(); ++i) {
            if (i < kid_ids.size() && kid_ids[i] == kid_ids[i - 1]) {
                ++run;
                report.count *= static_cast<unsigned>(run);
            } else {
                run = 1;
            }
        }
    }

    if (enumerate && report.count <= enumerate_cap) {
        AutomorphismEnumerator en{view, ids, tree.vertex_count(), {}, {}, {}};
        en.run();
        report.elements = std::move(en.out);
    }
    return report;
}

bool is_fixing_set(const Tree& tree, const std::vector<Vertex>& specials) {
    std::vector<Vertex> s(specials);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s)
        if (v < 0 || v >= tree.vertex_count()) throw DomainError("is_fixing_set: vertex out of range");

    // a distinct color per pinned vertex: color-preserving automorphisms
    // are then exactly the ones fixing the set pointwise
    Coloring c = neutral_coloring(tree, static_cast<int>(s.size()) + 1);
    for (std::size_t i = 0; i < s.size(); ++i) c.colors[s[i]] = static_cast<int>(i) + 1;
    return is_distinguishing(tree, c);
}

int fixing_number_bruteforce(const Tree& tree, int max_leaves) {
    std::vector<Vertex> leaves = tree.leaves();
    int L = static_cast<int>(leaves.size());
    if (L > max_leaves)
        throw BudgetExceeded("fixing_number_bruteforce: " + std::to_string(L) + " leaves exceeds cap " +
                             std::to_string(max_leaves));

    for (int m = 0; m <= L; ++m) {
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        while (true) {
            std::vector<Vertex> subset(m);
            for (int i = 0; i < m; ++i) subset[i] = leaves[idx[i]];
            if (is_fixing_set(tree, subset)) return m;

            // next m-combination of {0..L-1} in lexicographic order
            int i = m - 1;
            while (i >= 0 && idx[i] == L - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // fixing all leaves always works on a tree
    return L;
}

}  // namespace symtree
