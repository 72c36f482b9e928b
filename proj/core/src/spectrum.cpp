#include "symtree/spectrum.hpp"

#include <string>

#include "symtree/errors.hpp"

namespace symtree {

namespace {

void check_kn(int k, int n) {
    if (k < 2) throw DomainError("spectrum closed forms need k >= 2, got k=" + std::to_string(k));
    if (n < 1) throw DomainError("spectrum closed forms need n >= 1, got n=" + std::to_string(n));
}

void append_run(std::vector<std::pair<BigInt, BigInt>>& rle, const BigInt& value,
                const BigInt& run) {
    if (run <= 0) return;
    if (!rle.empty() && rle.back().first == value)
        rle.back().second += run;
    else
        rle.emplace_back(value, run);
}

}  // namespace

int dist_closed(int k, int n) {
    check_kn(k, n);
    return k;
}

BigInt fix_closed(int k, int n) {
    check_kn(k, n);
    return BigInt(k - 1) * bigint_pow(k, static_cast<unsigned>(n - 1));
}

int fdist_closed(int k, int n) {
    check_kn(k, n);
    return n == 1 ? k : (n == 2 ? k + 1 : k + 2);
}

BigInt rho_closed(int k, int n, const BigInt& d) {
    check_kn(k, n);
    BigInt fix = fix_closed(k, n);
    if (d < k || d > fix + 1)
        throw DomainError("rho is defined for d in [dist, fix + 1]");

    if (n == 1) return BigInt(k - 1);  // the only admissible d is k itself
    if (d == k) return bigint_pow(k, static_cast<unsigned>(n)) - 1;
    if (n == 2) return BigInt(k) * (k - 1);
    if (d == k + 1) return BigInt(k - 1) * (BigInt(k) * k + 1) * bigint_pow(k, static_cast<unsigned>(n - 3));
    return fix;  // d >= fdist = k + 2
}

BigInt cost_number_closed(int k, int n) {
    check_kn(k, n);
    return (bigint_pow(k, static_cast<unsigned>(n)) - 1) / (k - 1);
}

SpectrumReport spectrum_closed(int k, int n) {
    check_kn(k, n);
    SpectrumReport r;
    r.k = k;
    r.n = n;
    r.dist = dist_closed(k, n);
    r.fix = fix_closed(k, n);
    r.fdist = fdist_closed(k, n);

    // rho over d = dist .. fix+1 takes at most three values, so the RLE can
    // be assembled from the closed pieces directly
    if (n == 1) {
        append_run(r.costs_rle, BigInt(k - 1), 1);
    } else if (n == 2) {
        append_run(r.costs_rle, BigInt(k) * k - 1, 1);
        append_run(r.costs_rle, BigInt(k) * (k - 1), r.fix - k + 1);
    } else {
        append_run(r.costs_rle, bigint_pow(k, static_cast<unsigned>(n)) - 1, 1);
        append_run(r.costs_rle, rho_closed(k, n, k + 1), 1);
        append_run(r.costs_rle, r.fix, r.fix - k);
    }

    r.ratio = Rational(r.fix - r.fdist + 2, r.fix - r.dist + 2);
    return r;
}

}  // namespace symtree
