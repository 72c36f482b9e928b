#include "symtree/dcs.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "symtree/errors.hpp"

namespace symtree {

std::vector<std::vector<std::int64_t>> RowPermutedMatrix::entries() const {
    std::vector<std::vector<std::int64_t>> out(row_perms.size());
    for (std::size_t r = 0; r < row_perms.size(); ++r) {
        out[r].reserve(values.size());
        for (int j : row_perms[r]) out[r].push_back(values[std::size_t(j)]);
    }
    return out;
}

std::vector<BigInt> RowPermutedMatrix::column_sums() const {
    std::vector<BigInt> sums(values.size(), BigInt(0));
    for (const auto& perm : row_perms)
        for (std::size_t j = 0; j < perm.size(); ++j) sums[j] += values[std::size_t(perm[j])];
    return sums;
}

namespace {

constexpr std::int64_t kFactCap = std::numeric_limits<std::int64_t>::max() / 2;

std::int64_t fact_sat(std::int64_t n) {
    std::int64_t out = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        if (out >= kFactCap / i) return kFactCap;
        out *= i;
    }
    return out;
}

// sort descending into m.values, remember caller positions, reject dupes
void prepare_values(const std::vector<std::int64_t>& in, RowPermutedMatrix& m,
                    const std::string& who) {
    if (in.empty()) throw DomainError(who + ": needs at least one value");
    m.source_index.resize(in.size());
    std::iota(m.source_index.begin(), m.source_index.end(), 0);
    std::sort(m.source_index.begin(), m.source_index.end(),
              [&](int a, int b) { return in[std::size_t(a)] > in[std::size_t(b)]; });
    m.values.resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) m.values[i] = in[std::size_t(m.source_index[i])];
    if (std::adjacent_find(m.values.begin(), m.values.end()) != m.values.end())
        throw DomainError(who + ": values must be pairwise distinct");
}

// 0-based column pattern of the descending-values lemma, 1-based row i of k:
// columns up to k-i keep their own value, column k-i+1 takes the smallest,
// later columns shift one left
std::vector<int> lemma_row(int k, int i) {
    std::vector<int> p(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        int v = j <= k - i ? j : (j == k - i + 1 ? k : j - 1);
        p[std::size_t(j - 1)] = v - 1;
    }
    return p;
}

// the q = 0 head: k = s rows over n columns acting on the s largest values
std::vector<std::vector<int>> head_rows(int n, int s) {
    std::vector<std::vector<int>> rows;
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    if (s == 1) {
        rows.push_back(identity);
    } else if (s == 2) {
        rows.push_back(identity);
        std::vector<int> second = identity;
        second[0] = 1;
        second[1] = 2;
        second[2] = 0;
        rows.push_back(second);
    } else {
        for (int i = 1; i <= s; ++i) {
            std::vector<int> row = identity;
            auto pattern = lemma_row(s, i);
            for (int j = 0; j < s; ++j) row[std::size_t(j)] = pattern[std::size_t(j)];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// rotation taking the 0 entry to the front: the canonical class member
std::vector<int> canonical_rotation(const std::vector<int>& p) {
    std::size_t n = p.size();
    std::size_t z = std::size_t(std::find(p.begin(), p.end(), 0) - p.begin());
    std::vector<int> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = p[(j + z) % n];
    return out;
}

}  // namespace

RowPermutedMatrix lemma_rows(const std::vector<std::int64_t>& values) {
    if (values.size() < 3) throw DomainError("lemma_rows needs at least 3 values");
    RowPermutedMatrix m;
    prepare_values(values, m, "lemma_rows");
    int k = m.cols();
    for (int i = 1; i <= k; ++i) m.row_perms.push_back(lemma_row(k, i));
    return m;
}

std::vector<std::vector<int>> cyclic_blocks(int n, std::int64_t max_perm_classes) {
    if (n < 1) throw DomainError("cyclic_blocks needs n >= 1");
    std::int64_t classes = fact_sat(n - 1);
    if (classes > max_perm_classes)
        throw BudgetExceeded("cyclic_blocks: " + std::to_string(n - 1) +
                                 "! rotation classes exceed the budget " +
                                 std::to_string(max_perm_classes),
                             -1);
    std::vector<int> tail(std::size_t(n - 1));
    std::iota(tail.begin(), tail.end(), 1);
    std::vector<std::vector<int>> reps;
    reps.reserve(std::size_t(classes));
    do {
        std::vector<int> rep(static_cast<std::size_t>(n));
        rep[0] = 0;
        std::copy(tail.begin(), tail.end(), rep.begin() + 1);
        reps.push_back(std::move(rep));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return reps;
}

RowPermutedMatrix general_dcs(const std::vector<std::int64_t>& values, std::int64_t k,
                              std::int64_t max_perm_classes) {
    RowPermutedMatrix m;
    prepare_values(values, m, "general_dcs");
    const int n = m.cols();
    const std::int64_t nfact = fact_sat(n);
    if (k < 1 || k >= nfact)
        throw DomainError("general_dcs: row count must lie in [1, n!-1], got " +
                          std::to_string(k));

    if (k > nfact / 2) {
        // complement: all n! permutations have constant column sums, so
        // removing a distinct-column-sum matrix leaves one
        if (fact_sat(n - 1) > max_perm_classes)
            throw BudgetExceeded("general_dcs: complement construction needs full permutation "
                                 "enumeration beyond the class budget",
                                 -1);
        RowPermutedMatrix rest = general_dcs(m.values, nfact - k, max_perm_classes);
        std::set<std::vector<int>> skip(rest.row_perms.begin(), rest.row_perms.end());
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            if (!skip.count(p)) m.row_perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        if (std::int64_t(m.row_perms.size()) != k)
            throw std::logic_error("general_dcs: complement row count mismatch");
        return m;
    }

    const int s = static_cast<int>((k - 1) % n) + 1;
    const std::int64_t q = (k - s) / n;
    auto head = head_rows(n, s);

    if (q > 0) {
        // full rotation blocks add the same amount to every column, so any
        // q classes that avoid the head rows keep the sums distinct
        std::set<std::vector<int>> head_classes;
        for (const auto& row : head) head_classes.insert(canonical_rotation(row));
        std::int64_t taken = 0;
        for (const auto& rep : cyclic_blocks(n, max_perm_classes)) {
            if (taken == q) break;
            if (head_classes.count(rep)) continue;
            for (int t = 0; t < n; ++t) {
                std::vector<int> row(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j) row[std::size_t(j)] = rep[std::size_t((j + t) % n)];
                m.row_perms.push_back(std::move(row));
            }
            ++taken;
        }
        if (taken != q) throw std::logic_error("general_dcs: ran out of rotation classes");
    }

    for (auto& row : head) m.row_perms.push_back(std::move(row));
    if (std::int64_t(m.row_perms.size()) != k)
        throw std::logic_error("general_dcs: row count mismatch");
    return m;
}

bool verify_dcs(const std::vector<std::vector<std::int64_t>>& matrix,
                const std::vector<std::int64_t>& values) {
    if (matrix.empty() || values.empty()) return false;
    const std::size_t n = values.size();
    std::vector<std::int64_t> want(values);
    std::sort(want.begin(), want.end());

    std::set<std::vector<std::int64_t>> seen;
    std::vector<BigInt> sums(n, BigInt(0));
    for (const auto& row : matrix) {
        if (row.size() != n) return false;
        std::vector<std::int64_t> sorted(row);
        std::sort(sorted.begin(), sorted.end());
        if (sorted != want) return false;
        if (!seen.insert(row).second) return false;
        for (std::size_t j = 0; j < n; ++j) sums[j] += row[j];
    }
    std::set<BigInt> distinct(sums.begin(), sums.end());
    return distinct.size() == n;
}

}  // namespace symtree
