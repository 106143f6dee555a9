#include "ndeg/gring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ndeg {

Atom unit_atom() { return Atom{}; }

Atom torus_atom(const std::vector<IVec>& face, Subset J, int eps) {
    Atom a;
    a.kind = Atom::Kind::Torus;
    a.face = face;
    std::sort(a.face.begin(), a.face.end());
    a.J = J;
    a.eps = eps;
    return a;
}

Atom smooth_atom(Subset J) {
    Atom a;
    a.kind = Atom::Kind::Smooth;
    a.J = J;
    return a;
}

bool atom_is_empty(const Atom& a) { return a.kind == Atom::Kind::Torus && a.eps == 0 && a.face.size() == 1; }

namespace {

std::string set_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int i : members(s)) {
        out += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace

std::string atom_label(const Atom& a) {
    switch (a.kind) {
        case Atom::Kind::Unit:
            return "1";
        case Atom::Kind::Smooth:
            return "[X_" + set_str(a.J) + "(0)]";
        case Atom::Kind::Torus: {
            std::string s = "[X(";
            for (size_t i = 0; i < a.face.size(); ++i) {
                s += i ? " " : "";
                s += "(";
                for (size_t k = 0; k < a.face[i].size(); ++k) s += (k ? "," : "") + std::to_string(a.face[i][k]);
                s += ")";
            }
            s += ")," + set_str(a.J) + "," + std::to_string(a.eps);
            if (a.has_rel) s += ",rel" + set_str(a.rel);
            return s + "]";
        }
    }
    return "?";
}

void GClass::add(const Atom& a, long exp, long long c) {
    if (c == 0 || atom_is_empty(a)) return;
    auto it = terms.find(a);
    if (it == terms.end()) it = terms.emplace(a, LPoly{}).first;
    long long& slot = it->second[exp];
    slot += c;
    if (slot == 0) it->second.erase(exp);
    if (it->second.empty()) terms.erase(it);
}

void GClass::add(const Atom& a, const LPoly& p) {
    for (const auto& [e, c] : p) add(a, e, c);
}

GClass& GClass::operator+=(const GClass& o) {
    for (const auto& [a, p] : o.terms) add(a, p);
    return *this;
}

GClass& GClass::operator-=(const GClass& o) {
    for (const auto& [a, p] : o.terms)
        for (const auto& [e, c] : p) add(a, e, -c);
    return *this;
}

GClass GClass::operator+(const GClass& o) const {
    GClass r = *this;
    r += o;
    return r;
}

GClass GClass::operator-(const GClass& o) const {
    GClass r = *this;
    r -= o;
    return r;
}

GClass GClass::scaled(long k) const {
    GClass r;
    for (const auto& [a, p] : terms)
        for (const auto& [e, c] : p) r.add(a, e + k, c);
    return r;
}

GClass GClass::times(long long m) const {
    GClass r;
    for (const auto& [a, p] : terms)
        for (const auto& [e, c] : p) r.add(a, e, c * m);
    return r;
}

GClass GClass::times(const LPoly& q) const {
    GClass r;
    for (const auto& [a, p] : terms)
        for (const auto& [e, c] : p)
            for (const auto& [e2, c2] : q) r.add(a, e + e2, c * c2);
    return r;
}

bool GClass::operator==(const GClass& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (auto i = terms.begin(), j = o.terms.begin(); i != terms.end(); ++i, ++j)
        if (!(i->first == j->first) || i->second != j->second) return false;
    return true;
}

std::string lpoly_string(const LPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        auto [e, c] = *it;
        long long a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "L";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string to_string(const GClass& c) {
    if (c.terms.empty()) return "0";
    std::string s;
    for (const auto& [a, p] : c.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + lpoly_string(p) + ")*" + atom_label(a);
    }
    return s;
}

bool positivity_check(const ConeTerm& t) {
    for (const auto& g : t.geom)
        if (g.second <= 0) return false;
    if (!t.cone.closure_pointed()) return false;
    for (const auto& r : t.cone.closure_rays())
        if (dot(t.lform, r) <= 0) return false;
    return true;
}

std::vector<GClass> series_truncate(const MotSeries& Z, long N) {
    std::vector<GClass> out(N + 1);
    for (const auto& [n, c] : Z.poly)
        if (n >= 0 && n <= N) out[n] += c;
    for (const auto& t : Z.terms) {
        if (!positivity_check(t)) throw std::domain_error("cone term violates the positivity condition");
        for (const auto& x : t.cone.lattice_points(t.lform, N)) {
            long n0 = dot(t.lform, x);
            long s0 = dot(t.sform, x);
            // expand geometric factors: choose multiplicities c_i >= 1
            std::function<void(size_t, long, long)> rec = [&](size_t i, long n, long lexp) {
                if (n > N) return;
                if (i == t.geom.size()) {
                    out[n] += t.coeff.scaled(lexp);
                    return;
                }
                auto [a, b] = t.geom[i];
                for (long c = 1; n + c * b <= N; ++c) rec(i + 1, n + c * b, lexp + c * a);
            };
            rec(0, n0, -s0);
        }
    }
    return out;
}

GClass term_limit(const ConeTerm& t) {
    if (!positivity_check(t)) throw std::domain_error("cone term violates the positivity condition; limit undefined");
    GClass r;
    for (const auto& P : t.cone.open_pieces()) {
        int dim = P.m - (P.eq.empty() ? 0 : rank(P.eq));
        int sign = ((dim + static_cast<int>(t.geom.size())) % 2) ? -1 : 1;
        r += t.coeff.times(sign);
    }
    return r;
}

GClass series_limit(const MotSeries& Z) {
    GClass r;
    for (const auto& t : Z.terms) r += term_limit(t);
    return r;
}

}  // namespace ndeg
