#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ndeg/cone.hpp"
#include "ndeg/linalg.hpp"

namespace ndeg {

struct Atom {
    enum class Kind { Unit, Torus, Smooth };
    Kind kind = Kind::Unit;
    std::vector<IVec> face;  // Torus: vertices of the compact face
    Subset J = 0;
    int eps = 0;
    bool has_rel = false;
    Subset rel = 0;
    // metadata only, ignored by comparisons
    IVec weights;
    long weight_mod = 0;

    auto key() const { return std::tie(kind, face, J, eps, has_rel, rel); }
    bool operator<(const Atom& o) const { return key() < o.key(); }
    bool operator==(const Atom& o) const { return key() == o.key(); }
};

Atom unit_atom();
Atom torus_atom(const std::vector<IVec>& face, Subset J, int eps);
Atom smooth_atom(Subset J);
// Torus atom with eps = 0 on a single vertex: the monomial has no zero on the torus.
bool atom_is_empty(const Atom& a);
std::string atom_label(const Atom& a);

using LPoly = std::map<long, long long>;  // exponent of L -> coefficient

struct GClass {
    std::map<Atom, LPoly> terms;

    void add(const Atom& a, long exp, long long c);
    void add(const Atom& a, const LPoly& p);
    GClass& operator+=(const GClass& o);
    GClass& operator-=(const GClass& o);
    GClass operator+(const GClass& o) const;
    GClass operator-(const GClass& o) const;
    GClass scaled(long k) const;  // times L^k
    GClass times(long long c) const;
    GClass times(const LPoly& p) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const GClass& o) const;
    bool operator!=(const GClass& o) const { return !(*this == o); }
};

std::string to_string(const GClass& c);
std::string lpoly_string(const LPoly& p);

// One structured summand  coeff · Σ_{x ∈ cone ∩ Z^m} L^{-sform(x)} T^{lform(x)} · Π L^a T^b / (1 - L^a T^b).
struct ConeTerm {
    PolyCone cone;
    IVec lform;
    IVec sform;
    std::vector<std::pair<long, long>> geom;
    GClass coeff;
    std::string label;
};

struct MotSeries {
    std::map<long, GClass> poly;
    std::vector<ConeTerm> terms;
};

bool positivity_check(const ConeTerm& t);
// Coefficients of T^0..T^N.
std::vector<GClass> series_truncate(const MotSeries& Z, long N);
GClass series_limit(const MotSeries& Z);
GClass term_limit(const ConeTerm& t);

}  // namespace ndeg
