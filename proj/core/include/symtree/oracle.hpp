#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "symtree/bigint.hpp"
#include "symtree/coloring.hpp"
#include "symtree/tree.hpp"

namespace symtree {

// Resource limits for the exhaustive searches. A search that cannot be
// completed within them throws BudgetExceeded whose partial() carries the
// best lower bound proved so far (-1 when there is none).
struct OracleBudget {
    // most painted vertices tried in a single candidate coloring
    int max_special_slots = 8;
    // cap on candidate colorings examined over one oracle call
    std::int64_t max_candidate_colorings = 100'000'000;
    // soft wall-clock cap, checked between work chunks; zero disables it
    std::chrono::milliseconds time_hint{0};
    // worker threads for the subset scans; results do not depend on it
    int jobs = 1;
    // fixing-number searches refuse trees with more leaves than this
    int max_fixing_leaves = 20;
};

struct PaintCostResult {
    std::int64_t cost = 0;
    Coloring witness;             // lexicographically least optimal coloring
    std::int64_t candidates = 0;  // colorings inspected up to the witness
};

// Exact minimum number of painted vertices over distinguishing colorings
// on `palette` colors. Searches painted subsets in ascending size, so the
// first hit is optimal; within a size the scan order makes the witness the
// lexicographically least color vector. Throws DomainError when no
// distinguishing coloring exists on this palette at all.
PaintCostResult min_paint_cost(const Tree& tree, int palette, const OracleBudget& budget = {});

// Exact distinguishing number: the smallest palette size that admits a
// distinguishing coloring.
int min_colors(const Tree& tree, const OracleBudget& budget = {});

struct CostNumberResult {
    std::int64_t value = 0;
    Coloring witness;
    std::int64_t candidates = 0;
};

// Exact minimum size of the smallest color class over distinguishing
// colorings that use all `palette` colors. Colorings are enumerated up to
// color renaming, which changes neither property.
CostNumberResult cost_number(const Tree& tree, int palette, const OracleBudget& budget = {});

struct OracleSpectrumReport {
    int dist = 0;
    int fix = 0;
    int fdist = 0;
    std::vector<std::int64_t> costs;  // min paint cost for d = dist..fix+1
    Rational ratio;
};

// The full search-based spectrum: distinguishing number, fixing number,
// the paint costs over the whole palette range, and the derived ratio.
OracleSpectrumReport spectrum_oracle(const Tree& tree, const OracleBudget& budget = {});

}  // namespace symtree
