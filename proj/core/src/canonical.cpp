#include "symtree/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "symtree/errors.hpp"

namespace symtree {

namespace {

// FNV-1a over the words of an intern key; the map still compares keys
// exactly, the hash only buckets.
struct KeyHash {
    std::size_t operator()(const std::vector<std::int32_t>& key) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::int32_t w : key) {
            auto u = static_cast<std::uint32_t>(w);
            for (int b = 0; b < 4; ++b) {
                h ^= (u >> (8 * b)) & 0xffU;
                h *= 1099511628211ULL;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

// intern key: [color, sorted child ids...]
using InternKey = std::vector<std::int32_t>;
using InternTable = std::unordered_map<InternKey, std::int32_t, KeyHash>;

void be32_append(std::string& out, std::uint32_t w) {
    out.push_back(static_cast<char>((w >> 24) & 0xff));
    out.push_back(static_cast<char>((w >> 16) & 0xff));
    out.push_back(static_cast<char>((w >> 8) & 0xff));
    out.push_back(static_cast<char>(w & 0xff));
}

}  // namespace

RootedView reroot(const Tree& tree, Vertex new_root) {
    Vertex V = tree.vertex_count();
    if (new_root < 0 || new_root >= V) throw DomainError("reroot: vertex out of range");

    RootedView view;
    view.view_root = new_root;
    view.children.assign(V, {});
    view.order.reserve(V);
    std::vector<char> seen(V, 0);
    view.order.push_back(new_root);
    seen[new_root] = 1;
    for (std::size_t head = 0; head < view.order.size(); ++head) {
        Vertex v = view.order[head];
        auto adopt = [&](Vertex u) {
            if (u >= 0 && !seen[u]) {
                seen[u] = 1;
                view.children[v].push_back(u);
                view.order.push_back(u);
            }
        };
        adopt(tree.parent(v));
        for (Vertex c : tree.children(v)) adopt(c);
    }
    return view;
}

std::vector<Vertex> tree_center(const Tree& tree) {
    Vertex V = tree.vertex_count();
    if (V <= 2) {
        std::vector<Vertex> all(V);
        for (Vertex v = 0; v < V; ++v) all[v] = v;
        return all;
    }

    std::vector<int> deg(V, 0);
    for (Vertex v = 1; v < V; ++v) {
        ++deg[v];
        ++deg[tree.parent(v)];
    }

    std::vector<char> removed(V, 0);
    std::vector<Vertex> frontier;
    for (Vertex v = 0; v < V; ++v)
        if (deg[v] == 1) frontier.push_back(v);

    auto peel_neighbor = [&](Vertex u, std::vector<Vertex>& next) {
        if (!removed[u] && --deg[u] == 1) next.push_back(u);
    };

    Vertex remaining = V;
    while (remaining > 2) {
        remaining -= static_cast<Vertex>(frontier.size());
        std::vector<Vertex> next;
        for (Vertex v : frontier) {
            removed[v] = 1;
            if (tree.parent(v) >= 0) peel_neighbor(tree.parent(v), next);
            for (Vertex c : tree.children(v)) peel_neighbor(c, next);
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

RootedView center_view(const Tree& tree) {
    auto centers = tree_center(tree);
    if (centers.size() == 1) return reroot(tree, centers[0]);

    // bicentral: hang both halves under a virtual root so edge-flipping
    // automorphisms become root-preserving ones
    RootedView view = reroot(tree, centers[0]);
    Vertex c1 = centers[0], c2 = centers[1];
    Vertex virt = tree.vertex_count();
    auto& ch = view.children[c1];
    ch.erase(std::find(ch.begin(), ch.end(), c2));
    view.children.push_back({c1, c2});
    view.order.insert(view.order.begin(), virt);
    view.view_root = virt;
    view.has_virtual_root = true;
    return view;
}

std::vector<std::int32_t> subtree_ids(const RootedView& view, const Coloring* coloring) {
    const std::size_t N = view.children.size();
    std::vector<std::int32_t> ids(N, -1);
    InternTable table;
    InternKey key;
    std::vector<std::int32_t> kid_ids;

    for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
        Vertex v = *it;
        bool is_virtual = view.has_virtual_root && v == view.view_root;
        kid_ids.clear();
        for (Vertex c : view.children[v]) kid_ids.push_back(ids[c]);
        std::sort(kid_ids.begin(), kid_ids.end());

        key.clear();
        key.push_back(is_virtual ? -1 : (coloring ? coloring->colors[v] : 0));
        key.insert(key.end(), kid_ids.begin(), kid_ids.end());

        auto [pos, fresh] = table.try_emplace(key, static_cast<std::int32_t>(table.size()));
        ids[v] = pos->second;
        (void)fresh;
    }
    return ids;
}

namespace {

// Interns the stored-orientation subtree below v and renders the code of
// each distinct id once; children ids always precede their parent's, so a
// single pass in id order has every child's bytes ready.
CanonicalCode render_code(const Tree& tree, const Coloring* coloring, Vertex v) {
    std::vector<Vertex> order{v};
    order.reserve(64);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Vertex c : tree.children(order[head])) order.push_back(c);

    InternTable table;
    std::vector<InternKey> composition;  // id -> its intern key
    std::vector<std::int32_t> ids(tree.vertex_count(), -1);
    InternKey key;
    std::vector<std::int32_t> kid_ids;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex u = *it;
        kid_ids.clear();
        for (Vertex c : tree.children(u)) kid_ids.push_back(ids[c]);
        std::sort(kid_ids.begin(), kid_ids.end());
        key.clear();
        key.push_back(coloring ? coloring->colors[u] : 0);
        key.insert(key.end(), kid_ids.begin(), kid_ids.end());
        auto [pos, fresh] = table.try_emplace(key, static_cast<std::int32_t>(table.size()));
        if (fresh) composition.push_back(key);
        ids[u] = pos->second;
    }

    std::vector<std::string> bytes(composition.size());
    std::vector<const std::string*> parts;
    for (std::size_t id = 0; id < composition.size(); ++id) {
        const InternKey& comp = composition[id];
        parts.clear();
        for (std::size_t i = 1; i < comp.size(); ++i) parts.push_back(&bytes[comp[i]]);
        std::sort(parts.begin(), parts.end(),
                  [](const std::string* a, const std::string* b) { return *a < *b; });
        std::string& out = bytes[id];
        be32_append(out, static_cast<std::uint32_t>(comp[0]));
        for (const std::string* p : parts) {
            be32_append(out, static_cast<std::uint32_t>(p->size()));
            out += *p;
        }
    }
    return bytes[ids[v]];
}

}  // namespace

CanonicalCode canonical_code(const Tree& tree, const Coloring& coloring, Vertex v) {
    check_coloring(tree, coloring);
    if (v < 0 || v >= tree.vertex_count()) throw DomainError("canonical_code: vertex out of range");
    return render_code(tree, &coloring, v);
}

CanonicalCode canonical_code(const Tree& tree, Vertex v) {
    if (v < 0 || v >= tree.vertex_count()) throw DomainError("canonical_code: vertex out of range");
    return render_code(tree, nullptr, v);
}

}  // namespace symtree
