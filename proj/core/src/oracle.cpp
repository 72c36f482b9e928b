#include "symtree/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "symtree/canonical.hpp"
#include "symtree/errors.hpp"
#include "symtree/symmetry.hpp"

namespace symtree {

namespace {

constexpr std::int64_t kSat = std::numeric_limits<std::int64_t>::max() / 2;

std::int64_t sat_add(std::int64_t a, std::int64_t b) { return a >= kSat - b ? kSat : a + b; }

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSat / b) return kSat;
    return a * b;
}

// C(n, r), saturating at kSat
std::int64_t binom_sat(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        // out * (n - r + i) / i is integral at every step
        if (out >= kSat / (n - r + i)) return kSat;
        out = out * (n - r + i) / i;
    }
    return out;
}

// number of canonical special-color assignments of length m drawing on s
// interchangeable colors: first occurrences appear in increasing order
std::int64_t rgs_count_sat(int m, int s) {
    if (m == 0) return 1;
    if (s == 0) return 0;
    // ways[j] = assignments of the prefix using exactly j colors
    std::vector<std::int64_t> ways(std::size_t(s) + 1, 0);
    ways[1] = 1;
    for (int i = 1; i < m; ++i) {
        std::vector<std::int64_t> nxt(std::size_t(s) + 1, 0);
        for (int j = 1; j <= s; ++j) {
            if (ways[j] == 0) continue;
            nxt[j] = sat_add(nxt[j], sat_mul(ways[j], j));
            if (j < s) nxt[j + 1] = sat_add(nxt[j + 1], ways[j]);
        }
        ways = std::move(nxt);
    }
    std::int64_t total = 0;
    for (int j = 1; j <= s; ++j) total = sat_add(total, ways[j]);
    return total;
}

// ascending-lexicographic m-combination of {0..V-1} with the given rank
void unrank_combination(std::int64_t rank, int V, int m, std::vector<int>& idx) {
    idx.resize(m);
    int c = 0;
    for (int p = 0; p < m; ++p) {
        while (true) {
            std::int64_t block = binom_sat(V - 1 - c, m - 1 - p);
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        idx[p] = c++;
    }
}

// step to the lexicographically previous m-combination; false at the first
bool prev_combination(std::vector<int>& idx, int V) {
    int m = static_cast<int>(idx.size());
    for (int i = m - 1; i >= 0; --i) {
        int floor = i == 0 ? 0 : idx[i - 1] + 1;
        if (idx[i] > floor) {
            --idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = V - m + j;
            return true;
        }
    }
    return false;
}

// odometer over canonical special assignments: values in 1..s, the first
// use of each color happens in increasing color order
struct RgsIter {
    int m, s;
    std::vector<int> a;

    RgsIter(int m_, int s_) : m(m_), s(s_), a(std::size_t(m_), 1) {}

    bool valid_start() const { return m == 0 || s >= 1; }

    bool next() {
        for (int i = m - 1; i >= 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
            if (a[i] < std::min(prefix_max + 1, s)) {
                ++a[i];
                for (int j = i + 1; j < m; ++j) a[j] = 1;
                return true;
            }
        }
        return false;
    }
};

bool distinguishing_in_view(const RootedView& view, const Coloring& c) {
    auto ids = subtree_ids(view, &c);
    std::vector<std::int32_t> kid_ids;
    for (std::size_t v = 0; v < view.children.size(); ++v) {
        const auto& kids = view.children[v];
        if (kids.size() < 2) continue;
        kid_ids.clear();
        for (Vertex u : kids) kid_ids.push_back(ids[u]);
        std::sort(kid_ids.begin(), kid_ids.end());
        if (std::adjacent_find(kid_ids.begin(), kid_ids.end()) != kid_ids.end()) return false;
    }
    return true;
}

struct SearchContext {
    const Tree& tree;
    RootedView view;
    std::int64_t used = 0;
    std::int64_t cap;
    std::chrono::steady_clock::time_point started;
    std::chrono::milliseconds time_hint;
    int jobs;

    SearchContext(const Tree& t, const OracleBudget& b)
        : tree(t),
          view(center_view(t)),
          cap(b.max_candidate_colorings),
          started(std::chrono::steady_clock::now()),
          time_hint(b.time_hint),
          jobs(std::max(1, b.jobs)) {}

    bool out_of_time() const {
        return time_hint.count() > 0 &&
               std::chrono::steady_clock::now() - started > time_hint;
    }
};

struct LevelHit {
    std::int64_t rank = -1;        // subset rank; higher rank = lex-lower vector
    std::int64_t ordinal = 0;      // 1-based assignment index inside the subset
    std::vector<int> subset;
    std::vector<int> assignment;
};

// scans every size-m painted subset of the vertices (descending rank, i.e.
// ascending color-vector order) with every canonical special assignment.
// Returns the hit with the largest rank, which decodes to the
// lexicographically least distinguishing color vector of this cost.
std::optional<LevelHit> scan_level(SearchContext& ctx, int palette, int m,
                                   std::int64_t total_subsets, std::int64_t per_subset) {
    const int V = ctx.tree.vertex_count();
    const int s = palette - 1;

    auto scan_range = [&](std::int64_t lo, std::int64_t hi, std::atomic<std::int64_t>& best,
                          std::atomic<bool>& stop) -> std::optional<LevelHit> {
        std::optional<LevelHit> found;
        Coloring work{palette, std::vector<int>(std::size_t(V), 0)};
        std::vector<int> idx;
        unrank_combination(hi - 1, V, m, idx);
        for (std::int64_t rank = hi - 1; rank >= lo; --rank) {
            if (rank < best.load(std::memory_order_relaxed)) break;
            if ((rank & 0xfff) == 0 && ctx.out_of_time()) {
                stop.store(true, std::memory_order_relaxed);
                break;
            }
            RgsIter it(m, s);
            std::int64_t ord = 0;
            if (it.valid_start()) {
                do {
                    for (int t = 0; t < m; ++t) work.colors[idx[t]] = it.a[t];
                    ++ord;
                    if (distinguishing_in_view(ctx.view, work)) {
                        found = LevelHit{rank, ord, idx, it.a};
                        best.store(rank, std::memory_order_relaxed);
                        break;
                    }
                } while (it.next());
            }
            for (int t = 0; t < m; ++t) work.colors[idx[t]] = 0;
            if (found && found->rank == rank) break;  // lower ranks are lex-greater
            if (rank > lo) prev_combination(idx, V);
        }
        return found;
    };

    std::atomic<std::int64_t> best{-1};
    std::atomic<bool> stop{false};

    std::optional<LevelHit> hit;
    if (ctx.jobs <= 1 || total_subsets < 4096) {
        hit = scan_range(0, total_subsets, best, stop);
    } else {
        const std::int64_t chunk =
            std::max<std::int64_t>(512, total_subsets / (std::int64_t(ctx.jobs) * 8));
        const std::int64_t chunks = (total_subsets + chunk - 1) / chunk;
        std::atomic<std::int64_t> next{chunks - 1};
        std::mutex merge;
        std::vector<std::thread> pool;
        for (int w = 0; w < ctx.jobs; ++w) {
            pool.emplace_back([&] {
                while (!stop.load(std::memory_order_relaxed)) {
                    std::int64_t ci = next.fetch_sub(1, std::memory_order_relaxed);
                    if (ci < 0) break;
                    std::int64_t lo = ci * chunk, hi = std::min(total_subsets, lo + chunk);
                    if (hi - 1 < best.load(std::memory_order_relaxed)) continue;
                    auto local = scan_range(lo, hi, best, stop);
                    if (local) {
                        std::lock_guard<std::mutex> g(merge);
                        if (!hit || local->rank > hit->rank) hit = std::move(local);
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    if (stop.load()) throw BudgetExceeded("oracle time budget exhausted while scanning cost " +
                                              std::to_string(m),
                                          m);
    if (hit)
        ctx.used += (total_subsets - 1 - hit->rank) * per_subset + hit->ordinal;
    else
        ctx.used += total_subsets * per_subset;
    return hit;
}

struct PaintSearchOutcome {
    bool found = false;
    std::int64_t cost = 0;
    Coloring witness;
};

// ascending-size exhaustive search; max_m bounds the painted-set size
PaintSearchOutcome paint_cost_search(SearchContext& ctx, int palette, int max_m) {
    const int V = ctx.tree.vertex_count();
    const int s = palette - 1;
    for (int m = 0; m <= max_m; ++m) {
        std::int64_t per_subset = rgs_count_sat(m, s);
        if (per_subset == 0) continue;
        std::int64_t total_subsets = binom_sat(V, m);
        std::int64_t level_total = sat_mul(total_subsets, per_subset);
        if (sat_add(ctx.used, level_total) > ctx.cap)
            throw BudgetExceeded("oracle candidate budget cannot cover cost level " +
                                     std::to_string(m) + " on palette " + std::to_string(palette),
                                 m);
        if (ctx.out_of_time())
            throw BudgetExceeded("oracle time budget exhausted before cost level " +
                                     std::to_string(m),
                                 m);

        auto hit = scan_level(ctx, palette, m, total_subsets, per_subset);
        if (hit) {
            PaintSearchOutcome out;
            out.found = true;
            out.cost = m;
            out.witness = Coloring{palette, std::vector<int>(std::size_t(V), 0)};
            for (int t = 0; t < m; ++t) out.witness.colors[hit->subset[t]] = hit->assignment[t];
            return out;
        }
    }
    return {};
}

}  // namespace

PaintCostResult min_paint_cost(const Tree& tree, int palette, const OracleBudget& budget) {
    if (palette < 1) throw DomainError("min_paint_cost needs palette >= 1");
    SearchContext ctx(tree, budget);
    const int V = tree.vertex_count();
    const int max_m = std::min(budget.max_special_slots, V);
    if (max_m < 0) throw DomainError("min_paint_cost needs max_special_slots >= 0");

    auto out = paint_cost_search(ctx, palette, max_m);
    if (!out.found) {
        if (max_m < V)
            throw BudgetExceeded("no distinguishing coloring with at most " +
                                     std::to_string(max_m) + " painted vertices on palette " +
                                     std::to_string(palette),
                                 max_m + 1);
        throw DomainError("no distinguishing coloring exists on palette " +
                          std::to_string(palette));
    }
    return PaintCostResult{out.cost, std::move(out.witness), ctx.used};
}

int min_colors(const Tree& tree, const OracleBudget& budget) {
    SearchContext ctx(tree, budget);
    const int V = tree.vertex_count();
    for (int d = 1; d <= V; ++d) {
        auto out = paint_cost_search(ctx, d, V);
        if (out.found) return d;
    }
    // a rainbow coloring distinguishes any tree, so control never gets here
    throw DomainError("min_colors found no distinguishing coloring");
}

CostNumberResult cost_number(const Tree& tree, int palette, const OracleBudget& budget) {
    const int V = tree.vertex_count();
    if (palette < 1 || palette > V)
        throw DomainError("cost_number needs a palette in [1, vertex count]");

    // canonical colorings over the full vertex set: vertex 0 opens the
    // first color and every new color first appears in order. Both the
    // distinguishing property and the class-size profile are
    // renaming-invariant, so one representative per renaming class suffices.
    std::int64_t total = rgs_count_sat(V, palette);
    if (total > budget.max_candidate_colorings)
        throw BudgetExceeded("cost_number candidate budget exceeded", -1);

    SearchContext ctx(tree, budget);
    Coloring work{palette, std::vector<int>(std::size_t(V), 0)};
    CostNumberResult best;
    best.value = -1;

    RgsIter it(V, palette);
    std::int64_t candidates = 0;
    std::vector<std::int64_t> class_size(std::size_t(palette), 0);
    do {
        if (ctx.out_of_time()) throw BudgetExceeded("cost_number time budget exhausted", -1);
        ++candidates;
        for (int v = 0; v < V; ++v) work.colors[v] = it.a[v] - 1;
        std::fill(class_size.begin(), class_size.end(), 0);
        for (int v = 0; v < V; ++v) ++class_size[work.colors[v]];
        bool all_used = std::all_of(class_size.begin(), class_size.end(),
                                    [](std::int64_t x) { return x > 0; });
        if (all_used && distinguishing_in_view(ctx.view, work)) {
            std::int64_t smallest = *std::min_element(class_size.begin(), class_size.end());
            if (best.value < 0 || smallest < best.value) {
                best.value = smallest;
                best.witness = work;
            }
        }
    } while (it.next());
    best.candidates = candidates;
    if (best.value < 0)
        throw DomainError("no distinguishing coloring uses all " + std::to_string(palette) +
                          " colors");
    return best;
}

OracleSpectrumReport spectrum_oracle(const Tree& tree, const OracleBudget& budget) {
    SearchContext ctx(tree, budget);
    const int V = tree.vertex_count();

    OracleSpectrumReport report;
    int d = 1;
    for (; d <= V; ++d) {
        auto out = paint_cost_search(ctx, d, V);
        if (out.found) break;
    }
    if (d > V) throw DomainError("spectrum oracle found no distinguishing coloring");
    report.dist = d;
    report.fix = fixing_number_bruteforce(tree, budget.max_fixing_leaves);

    const int max_m = std::min(budget.max_special_slots, V);
    for (int dd = report.dist; dd <= report.fix + 1; ++dd) {
        auto out = paint_cost_search(ctx, dd, max_m);
        if (!out.found)
            throw BudgetExceeded("spectrum oracle could not settle palette " + std::to_string(dd) +
                                     " within " + std::to_string(max_m) + " painted vertices",
                                 max_m + 1);
        report.costs.push_back(out.cost);
    }
    report.fdist = report.dist;
    while (report.fdist <= report.fix + 1 &&
           report.costs[std::size_t(report.fdist - report.dist)] != report.fix)
        ++report.fdist;
    if (report.fdist > report.fix + 1)
        throw std::logic_error("spectrum oracle: no palette reached the fixing-number floor");
    report.ratio = Rational(BigInt(report.fix - report.fdist + 2),
                            BigInt(report.fix - report.dist + 2));
    return report;
}

}  // namespace symtree
