#pragma once

#include <map>
#include <random>
#include <vector>

#include "ndeg/linalg.hpp"
#include "ndeg/polytope.hpp"

namespace oracles {

using ndeg::IMat;
using ndeg::IVec;

// Unimodular 3x3 matrix from random elementary row operations.
inline IMat random_unimodular(std::mt19937& rng) {
    IMat U{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::uniform_int_distribution<int> r(0, 2), k(-2, 2);
    for (int s = 0; s < 6; ++s) {
        int i = r(rng), j = r(rng), c = k(rng);
        if (i == j) continue;
        for (int t = 0; t < 3; ++t) U[i][t] += c * U[j][t];
    }
    return U;
}

// Rows w_i with w_i · u_j = δ_ij for the rows u_j of a unimodular U (cofactor matrix over det).
inline IMat dual_rows(const IMat& U) {
    IMat W(3, IVec(3));
    long D = ndeg::det(U).get_si();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            IMat minor;
            for (int a = 0; a < 3; ++a) {
                if (a == i) continue;
                IVec row;
                for (int b = 0; b < 3; ++b)
                    if (b != j) row.push_back(U[a][b]);
                minor.push_back(row);
            }
            W[i][j] = ndeg::det(minor).get_si() * (((i + j) % 2) ? -1 : 1) * D;
        }
    return W;
}

inline long brute_ell(const ndeg::Poly& f, const IVec& a) {
    long best = -1;
    for (const auto& [e, c] : f.terms) {
        long v = ndeg::dot(a, e);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

// Cohomology multiplicities straight from the support: loop over a in [1,n]^d, no D-set grouping.
inline std::map<long, long> direct_cohomology(const ndeg::Poly& f, long n) {
    int d = f.dim;
    std::map<long, long> out;
    IVec a(d, 1);
    for (;;) {
        long l = brute_ell(f, a);
        long k = n - l;
        std::vector<IVec> V;
        for (const auto& [x, c] : f.terms)
            if (ndeg::dot(a, x) == l) V.push_back(x);
        if (k >= 0 && !(k >= 1 && V.size() == 1)) {
            long s = 0;
            for (long x : a) s += x;
            long p = d - 1 + d * n - s - k;
            std::vector<IVec> V0 = V;
            V0.push_back(IVec(d, 0));
            out[2 * p - (d - 1)] += k == 0 ? ndeg::normalized_volume(V0) : ndeg::normalized_volume(V);
        }
        int i = 0;
        while (i < d) {
            if (++a[i] <= n) break;
            a[i] = 1;
            ++i;
        }
        if (i == d) break;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

}  // namespace oracles
