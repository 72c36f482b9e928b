// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion carries its own wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "support/brute.hpp"
#include "symtree/canonical.hpp"
#include "symtree/colorings.hpp"
#include "symtree/dcs.hpp"
#include "symtree/errors.hpp"
#include "symtree/oracle.hpp"
#include "symtree/spectrum.hpp"
#include "symtree/symmetry.hpp"
#include "symtree/tree.hpp"

using namespace symtree;
using namespace symtree::testsupport;

namespace {

using Rle = std::vector<std::pair<BigInt, BigInt>>;

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Coloring random_coloring(const Tree& tree, int palette, std::mt19937& rng) {
    Coloring c;
    c.palette = palette;
    c.colors.resize(std::size_t(tree.vertex_count()));
    std::uniform_int_distribution<int> pick(0, palette - 1);
    for (auto& x : c.colors) x = pick(rng);
    return c;
}

std::vector<Vertex> painted_support(const Coloring& c) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < std::ssize(c.colors); ++v)
        if (c.colors[std::size_t(v)] != 0) out.push_back(v);
    return out;
}

// 1. closed-form spectrum table over 2<=k<=6, 1<=n<=6, with the two
//    hand-pinned rows
bool criterion_spectrum_table() {
    bool ok = true;
    {
        const SpectrumReport r = spectrum_closed(3, 2);
        ok = ok && r.dist == 3 && r.costs_rle == Rle{{8, 1}, {6, 4}} && r.ratio == Rational(4, 5);
    }
    {
        const SpectrumReport r = spectrum_closed(2, 3);
        ok = ok && r.dist == 2 && r.costs_rle == Rle{{7, 1}, {5, 1}, {4, 2}} &&
             r.ratio == Rational(1, 2);
    }
    for (int k = 2; k <= 6 && ok; ++k)
        for (int n = 1; n <= 6 && ok; ++n) {
            const SpectrumReport r = spectrum_closed(k, n);
            ok = ok && r.dist == dist_closed(k, n) && r.fix == fix_closed(k, n) &&
                 r.fdist == fdist_closed(k, n);

            BigInt covered = 0;
            BigInt prev_value = -1;
            for (const auto& [value, count] : r.costs_rle) {
                // every run must match the closed form at both of its ends
                const BigInt first_d = BigInt(r.dist) + covered;
                const BigInt last_d = first_d + count - 1;
                ok = ok && count > 0 && rho_closed(k, n, first_d) == value &&
                     rho_closed(k, n, last_d) == value;
                // runs are maximal, so values strictly decrease
                ok = ok && (prev_value < 0 || value < prev_value);
                prev_value = value;
                covered += count;
            }
            ok = ok && covered == r.fix - r.dist + 2;
            ok = ok && r.costs_rle.back().first == r.fix;
            ok = ok && r.ratio == Rational(r.costs_rle.back().second, covered);
        }
    return ok;
}

// 2. exhaustive-search spectrum equals the closed form on the small trees;
//    T_3^2 d in {3,4,5} exactly, d in {6,7} via the fixing-number floor
//    plus an explicit cost-6 witness
bool criterion_oracle_agreement() {
    bool ok = true;
    for (auto [k, n] : {std::pair{2, 2}, {3, 1}, {4, 1}, {2, 3}}) {
        const Tree tree = build_perfect_tree(k, n);
        const SpectrumReport closed = spectrum_closed(k, n);
        const OracleSpectrumReport r = spectrum_oracle(tree);
        ok = ok && r.dist == closed.dist && BigInt(r.fix) == closed.fix &&
             r.fdist == closed.fdist && r.ratio == closed.ratio &&
             BigInt(std::ssize(r.costs)) == closed.fix - closed.dist + 2;
        for (std::size_t i = 0; i < r.costs.size() && ok; ++i)
            ok = BigInt(r.costs[i]) == rho_closed(k, n, BigInt(r.dist) + BigInt(i));
    }

    const Tree t32 = build_perfect_tree(3, 2);
    for (int d = 3; d <= 5 && ok; ++d)
        ok = BigInt(min_paint_cost(t32, d).cost) == rho_closed(3, 2, d);

    ok = ok && fixing_number_bruteforce(t32) == 6;
    for (int d = 6; d <= 7 && ok; ++d) {
        Coloring witness = frugal_coloring(3, 2);
        witness.palette = d;  // unused extra colors change nothing
        ok = ok && paint_cost(witness) == 6 && is_distinguishing(t32, witness);
        // its painted set must fix the tree, the heart of the floor bound
        ok = ok && is_fixing_set(t32, painted_support(witness));
        ok = ok && rho_closed(3, 2, d) == 6;
    }
    return ok;
}

// 3. the three constructions distinguish and hit their exact costs across
//    the whole parameter grid
bool criterion_constructions() {
    bool ok = true;
    for (int k = 2; k <= 6 && ok; ++k)
        for (int n = 1; n <= 6 && ok; ++n) {
            const Tree tree = build_perfect_tree(k, n);

            const Coloring dist = k_distinguishing_coloring(k, n);
            ok = ok && paint_cost(dist) == ipow(k, n) - 1 && is_distinguishing(tree, dist);

            const Coloring middle = middle_coloring(k, n);
            const BigInt middle_expect =
                rho_closed(k, n, std::min(BigInt(k) + 1, fix_closed(k, n) + 1));
            ok = ok && BigInt(paint_cost(middle)) == middle_expect &&
                 is_distinguishing(tree, middle);

            const Coloring frugal = frugal_coloring(k, n);
            ok = ok && paint_cost(frugal) == (k - 1) * ipow(k, n - 1) &&
                 is_distinguishing(tree, frugal);
        }
    return ok;
}

// 4. frugal depth-3 census: ternary leaf counts (9,5,4,6,3), binary special
//    counts (1,2,1)
bool criterion_frugal_census() {
    const Tree t33 = build_perfect_tree(3, 3);
    const Coloring c33 = frugal_coloring(3, 3);
    std::vector<int> leaf_counts(5, 0);
    for (Vertex v : t33.leaves()) ++leaf_counts[std::size_t(c33.colors[std::size_t(v)])];
    bool ok = leaf_counts == std::vector<int>{9, 5, 4, 6, 3};

    const Coloring c23 = frugal_coloring(2, 3);
    std::vector<int> counts(4, 0);
    for (int x : c23.colors) ++counts[std::size_t(x)];
    ok = ok && counts[1] == 1 && counts[2] == 2 && counts[3] == 1;
    return ok;
}

// 5. permutation pattern rows: the worked 5-value example and strictly
//    decreasing sums on 200 random tuples
bool criterion_pattern_rows() {
    const RowPermutedMatrix m = lemma_rows({5, 4, 3, 2, 1});
    bool ok = m.entries() == std::vector<std::vector<std::int64_t>>{{5, 4, 3, 2, 1},
                                                                    {5, 4, 3, 1, 2},
                                                                    {5, 4, 1, 3, 2},
                                                                    {5, 1, 4, 3, 2},
                                                                    {1, 5, 4, 3, 2}} &&
              m.column_sums() == std::vector<BigInt>{21, 18, 15, 12, 9};

    std::mt19937 rng(7177);
    for (int round = 0; round < 200 && ok; ++round) {
        const int k = 3 + int(rng() % 48);
        std::set<std::int64_t> seen;
        std::uniform_int_distribution<std::int64_t> pick(-1'000'000'000, 1'000'000'000);
        while (std::ssize(seen) < k) seen.insert(pick(rng));
        std::vector<std::int64_t> values(seen.begin(), seen.end());
        std::shuffle(values.begin(), values.end(), rng);

        const auto sums = lemma_rows(values).column_sums();
        for (std::size_t j = 0; j + 1 < sums.size() && ok; ++j) ok = sums[j] > sums[j + 1];
    }
    return ok;
}

// 6. generalized matrices verify for every legal k at n = 3 and n = 4 and
//    for the stratified n = 5 sample
bool criterion_generalized_dcs() {
    bool ok = true;
    for (int k = 1; k <= 5 && ok; ++k) {
        const RowPermutedMatrix m = general_dcs({3, 2, 1}, k);
        ok = m.rows() == k && verify_dcs(m.entries(), {3, 2, 1});
    }
    for (int k = 1; k <= 23 && ok; ++k) {
        const RowPermutedMatrix m = general_dcs({9, 6, 4, 1}, k);
        ok = m.rows() == k && verify_dcs(m.entries(), {9, 6, 4, 1});
    }
    for (std::int64_t k : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 18, 59, 60, 61, 102, 119}) {
        if (!ok) break;
        const RowPermutedMatrix m = general_dcs({5, 4, 3, 2, 1}, k);
        ok = m.rows() == k && verify_dcs(m.entries(), {5, 4, 3, 2, 1});
    }
    return ok;
}

// 7. brute-force fixing numbers: (k-1) k^(n-1) on perfect trees, d on
//    (d+1)-podes with equal arms
bool criterion_fixing_numbers() {
    bool ok = true;
    for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        const BigInt expect = fix_closed(k, n);
        ok = ok && BigInt(fixing_number_bruteforce(build_perfect_tree(k, n))) == expect;
    }
    for (int d = 1; d <= 3 && ok; ++d)
        for (std::int64_t t : {std::int64_t(d), std::int64_t(d) + 1}) {
            const std::vector<std::int64_t> arms(std::size_t(d) + 1, t);
            ok = ok && fixing_number_bruteforce(build_kpode(arms)) == d;
        }
    return ok;
}

// 8. cost numbers: oracle values on the two pinned instances, closed form
//    equal to the geometric series across the grid
bool criterion_cost_numbers() {
    bool ok = cost_number(build_perfect_tree(2, 2), 2).value == 3 &&
              cost_number(build_perfect_tree(3, 1), 3).value == 1;
    for (int k = 2; k <= 6 && ok; ++k)
        for (int n = 1; n <= 6 && ok; ++n) {
            BigInt geometric = 0;
            for (int e = 0; e < n; ++e) geometric += bigint_pow(k, e);
            ok = cost_number_closed(k, n) == geometric;
        }
    return ok;
}

// 9. property suites at fixed seeds: rho monotone and floored, class
//    complements are fixing sets, canonical codes agree with explicit
//    search on every tree shape up to 10 vertices
bool criterion_properties() {
    bool ok = true;

    for (int k = 2; k <= 6 && ok; ++k)
        for (int n = 1; n <= 5 && ok; ++n) {
            const BigInt fix = fix_closed(k, n);
            std::vector<BigInt> probes;
            for (int d = k; d <= k + 3; ++d) probes.push_back(d);
            probes.push_back(fix);
            probes.push_back(fix + 1);
            BigInt prev_d = -1;
            BigInt prev_rho = -1;
            for (const BigInt& d : probes) {
                if (d < dist_closed(k, n) || d > fix + 1 || !ok) continue;
                const BigInt rho = rho_closed(k, n, d);
                ok = ok && rho >= fix;
                if (prev_d >= 0 && d >= prev_d) ok = ok && rho <= prev_rho;
                if (d >= fdist_closed(k, n)) ok = ok && rho == fix;
                prev_d = d;
                prev_rho = rho;
            }
        }

    std::mt19937 rng(90210);
    std::vector<std::pair<Tree, Coloring>> distinguishing_cases;
    for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        distinguishing_cases.emplace_back(build_perfect_tree(k, n), frugal_coloring(k, n));
        distinguishing_cases.emplace_back(build_perfect_tree(k, n), middle_coloring(k, n));
        distinguishing_cases.emplace_back(build_perfect_tree(k, n),
                                          k_distinguishing_coloring(k, n));
    }
    for (const Tree& tree :
         {build_perfect_tree(2, 2), build_perfect_tree(3, 1), build_kpode({2, 2, 2})}) {
        int kept = 0;
        while (kept < 5) {
            Coloring c = random_coloring(tree, 3, rng);
            if (!is_distinguishing(tree, c)) continue;
            ++kept;
            distinguishing_cases.emplace_back(tree, std::move(c));
        }
    }
    for (const auto& [tree, c] : distinguishing_cases) {
        if (!ok) break;
        for (int color = 0; color < c.palette && ok; ++color) {
            std::vector<Vertex> complement;
            for (Vertex v = 0; v < tree.vertex_count(); ++v)
                if (c.colors[std::size_t(v)] != color) complement.push_back(v);
            ok = is_fixing_set(tree, complement);
        }
    }

    // every perfect-tree and k-pode shape with at most 10 vertices
    std::vector<Tree> shapes;
    for (int k = 2; k <= 9; ++k) shapes.push_back(build_perfect_tree(k, 1));
    shapes.push_back(build_perfect_tree(2, 2));
    for (int total = 2; total <= 9; ++total) {
        // ordered compositions of `total` into at least two positive parts
        for (unsigned mask = 0; mask < (1u << (total - 1)); ++mask) {
            std::vector<std::int64_t> arms;
            std::int64_t run = 1;
            for (int bit = 0; bit < total - 1; ++bit) {
                if (mask & (1u << bit)) {
                    arms.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            arms.push_back(run);
            if (arms.size() < 2) continue;
            shapes.push_back(build_kpode(arms));
        }
    }

    std::mt19937 rng_codes(5150);
    for (const Tree& tree : shapes) {
        if (!ok) break;
        for (int round = 0; round < 3 && ok; ++round) {
            const Coloring c =
                round == 0 ? neutral_coloring(tree, 2) : random_coloring(tree, 3, rng_codes);
            const auto brute = brute_automorphisms(tree, &c);
            ok = ok && automorphism_count(tree, &c).count == BigInt(brute.size());
            ok = ok && is_distinguishing(tree, c) == (brute.size() == 1);

            const RootedView stored = reroot(tree, Tree::root);
            const auto ids = subtree_ids(stored, &c);
            for (Vertex a = 0; a < tree.vertex_count() && ok; ++a)
                for (Vertex b = a + 1; b < tree.vertex_count() && ok; ++b)
                    ok = (ids[std::size_t(a)] == ids[std::size_t(b)]) ==
                         brute_rooted_isomorphic(tree, &c, a, b);
        }
    }
    return ok;
}

struct Criterion {
    int number;
    const char* label;
    double limit_seconds;
    std::function<bool()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "closed-form spectrum table (2<=k<=6, 1<=n<=6)", 1.0, criterion_spectrum_table},
        {2, "search oracle agrees with the closed forms", 600.0, criterion_oracle_agreement},
        {3, "construction costs and distinguishing property", 60.0, criterion_constructions},
        {4, "frugal depth-3 color censuses", 60.0, criterion_frugal_census},
        {5, "pattern rows: worked example and 200 random tuples", 1.0, criterion_pattern_rows},
        {6, "generalized matrices verify for every legal row count", 60.0,
         criterion_generalized_dcs},
        {7, "fixing numbers on perfect trees and podes", 60.0, criterion_fixing_numbers},
        {8, "cost numbers: oracle and closed form", 600.0, criterion_cost_numbers},
        {9, "property suites at fixed seeds", 600.0, criterion_properties},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string note;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            pass = false;
            note = std::string(" [exception: ") + e.what() + "]";
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && seconds > c.limit_seconds) {
            pass = false;
            note = " [over time limit]";
        }
        std::printf("[%s] criterion %d: %s (%.0f ms)%s\n", pass ? "PASS" : "FAIL", c.number,
                    c.label, seconds * 1000.0, note.c_str());
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}
