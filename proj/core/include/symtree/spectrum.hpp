#pragma once

#include <utility>
#include <vector>

#include "symtree/bigint.hpp"

namespace symtree {

// Closed-form symmetry-breaking quantities of the perfect k-ary tree
// T(k, n), exact for any k >= 2, n >= 1.

// Minimum number of colors that admits a distinguishing coloring: always k.
int dist_closed(int k, int n);

// Minimum size of a fixing set: (k-1) * k^(n-1).
BigInt fix_closed(int k, int n);

// Smallest palette whose cheapest distinguishing coloring is as cheap as a
// fixing set: k for n = 1, k+1 for n = 2, k+2 for n >= 3.
int fdist_closed(int k, int n);

// Cheapest distinguishing coloring on d colors, for d in [dist, fix + 1].
BigInt rho_closed(int k, int n, const BigInt& d);

// Minimum over distinguishing k-colorings that use all k colors of the
// smallest color class: (k^n - 1) / (k - 1).
BigInt cost_number_closed(int k, int n);

struct SpectrumReport {
    int k = 0;
    int n = 0;
    int dist = 0;
    BigInt fix;
    int fdist = 0;
    // run-length encoded rho^d for d = dist .. fix+1: (value, run length)
    std::vector<std::pair<BigInt, BigInt>> costs_rle;
    // (fix - fdist + 2) / (fix - dist + 2), reduced
    Rational ratio;
};

SpectrumReport spectrum_closed(int k, int n);

}  // namespace symtree
