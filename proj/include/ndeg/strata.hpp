#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ndeg/gring.hpp"
#include "ndeg/polytope.hpp"

namespace ndeg {

struct StratumKey {
    Subset J = 0;
    IVec a;  // length d, zero outside J
    long n = 0;
};

struct StratumInfo {
    StratumKey key;
    Subset Jt = 0;
    FaceDesc gamma;
    long ell = 0;
    long k = 0;
    GClass cls;
    long dim = -1;
    bool empty = true;
};

// General stratum: local jets with coefficients t^1..t^N, contact level n (f(φ) = t^n mod t^{n+1}),
// ord x_i = b_i for i in J (1 <= b_i <= N) and x_i ≡ 0 for i outside J.
StratumInfo jet_stratum(const Poly& f, long N, long n, Subset J, const IVec& b);
// Ordinary contact-locus stratum (N = n).
StratumInfo stratum_class(const Poly& f, long n, Subset J, const IVec& a);

bool delta_membership(const Poly& f, Subset J, const IVec& a, long k);
// a in Z_{>0}^J with a_j <= n, ℓ_J(a) = n - k and a_j <= ℓ_J(a) + k.
std::vector<IVec> delta_tilde_enumerate(const Poly& f, Subset J, long n, long k);

struct Poset {
    long n = 0;
    std::vector<StratumInfo> nodes;
    bool leq(size_t i, size_t j) const;  // node i <= node j
    std::vector<size_t> closure(size_t i) const;
    // Closed piece S_p of the filtration: union of strata of dimension <= p.
    std::vector<size_t> filtration(long p) const;
};

Poset enumerate_Pn(const Poly& f, long n);
// p -> indices of strata with dim = p
std::map<long, std::vector<size_t>> e1_table(const Poset& P);

// (face vertices, k, p) -> list of a; full support strata only.
using DSetKey = std::tuple<std::vector<IVec>, long, long>;
std::map<DSetKey, std::vector<IVec>> d_sets(const Poly& f, long n);
std::map<long, long> cohomology_table(const Poly& f, long n);

struct Weights {
    IVec residues;
    long modulus = 0;
};
Weights monodromy_weights(const NewtonPolyhedron& G, const IVec& a);

}  // namespace ndeg
