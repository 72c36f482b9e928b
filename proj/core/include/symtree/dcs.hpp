#pragma once

#include <cstdint>
#include <vector>

#include "symtree/bigint.hpp"

namespace symtree {

// A matrix whose every row lists the same distinct values, permuted so that
// all column sums are pairwise distinct. Entry (r, j) is
// values[row_perms[r][j]]; values are kept strictly descending and
// source_index maps them back to the caller's original positions.
struct RowPermutedMatrix {
    std::vector<std::int64_t> values;
    std::vector<int> source_index;
    std::vector<std::vector<int>> row_perms;

    int rows() const { return static_cast<int>(row_perms.size()); }
    int cols() const { return static_cast<int>(values.size()); }
    std::int64_t at(int r, int j) const { return values[std::size_t(row_perms[r][j])]; }
    std::vector<std::vector<std::int64_t>> entries() const;
    std::vector<BigInt> column_sums() const;
};

// The k x k pattern for k >= 3 distinct values: row 1 is the identity and
// row i rotates the smallest value into column k-i+1, pushing the displaced
// ones right. Column sums come out strictly decreasing.
RowPermutedMatrix lemma_rows(const std::vector<std::int64_t>& values);

// k rows over n = |values| distinct values for any k in [1, n!-1]: a short
// head pattern on the first s values (k = n*q + s) padded with q full
// rotation blocks, or the complement of the construction for n!-k when k
// exceeds n!/2. Construction paths that must enumerate rotation classes
// throw BudgetExceeded when (n-1)! exceeds max_perm_classes.
RowPermutedMatrix general_dcs(const std::vector<std::int64_t>& values, std::int64_t k,
                              std::int64_t max_perm_classes = 40320);

// Lexicographically ordered representatives of the (n-1)! rotation classes
// of the permutations of {0..n-1}; each representative starts with 0.
std::vector<std::vector<int>> cyclic_blocks(int n, std::int64_t max_perm_classes = 40320);

// True iff every row of matrix is a permutation of values, the rows are
// pairwise distinct, and all column sums are pairwise distinct.
bool verify_dcs(const std::vector<std::vector<std::int64_t>>& matrix,
                const std::vector<std::int64_t>& values);

}  // namespace symtree
