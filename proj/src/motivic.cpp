#include "ndeg/motivic.hpp"

#include <sstream>

#include "ndeg/fan.hpp"
#include "ndeg/json_io.hpp"
#include "ndeg/realize.hpp"

namespace ndeg {

void require_local_input(const Poly& f) {
    if (f.is_zero()) throw MathError("the zero polynomial is not allowed here");
    if (!constant_term_zero(f)) throw MathError("f(O) != 0: the origin is not on the hypersurface");
}

namespace {

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

IVec pad(const IVec& v, int M) {
    IVec out(M, 0);
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

// Structured series of local contact loci; with j >= 0 the pair series for g = x_j.
// Coordinates: b_0..b_{d-1}, m (index d), k (index d+1).
MotSeries build_series(const Poly& f, int j) {
    require_local_input(f);
    int d = f.dim;
    int M = d + 2, MI = d, KI = d + 1;
    bool pair = j >= 0;
    MotSeries Z;
    for (Subset J = 1; J <= full_set(d); ++J) {
        if (pair && !contains(J, j)) continue;
        Subset Jt = tilde_J(f, J);
        if (Jt == 0) continue;
        int q = popcount(Jt);
        Subset freeset = J & ~Jt;
        bool jfree = pair && contains(freeset, j);
        int r = popcount(freeset) - (jfree ? 1 : 0);
        NewtonPolyhedron G = newton_polyhedron(f, Jt);
        for (const auto& g : G.compact_faces()) {
            DualCone D = sigma_cone(G, g);
            PolyCone base;
            base.m = M;
            for (const auto& row : D.cone.eq) base.eq.push_back(pad(row, M));
            for (const auto& row : D.cone.strict) base.strict.push_back(pad(row, M));
            IVec ell = pad(g.vertices[0], M);  // ℓ(b) on this cone
            IVec Nform = ell;
            Nform[KI] = 1;
            if (pair) Nform[MI] = 1;
            IVec lform = ell;
            lform[KI] = 1;
            IVec sumb(M, 0);
            for (int i : members(Jt)) sumb[i] = 1;
            for (int kcase = 0; kcase <= 1; ++kcase) {
                if (kcase == 1 && g.is_vertex()) continue;
                PolyCone C = base;
                bool geom_k = !pair && kcase == 1 && g.supp == Jt;
                if (kcase == 0 || geom_k)
                    C.eq.push_back(unit(M, KI));
                else
                    C.strict.push_back(unit(M, KI));
                if (!pair) {
                    C.eq.push_back(unit(M, MI));
                } else {
                    C.strict.push_back(unit(M, MI));
                    if (contains(Jt, j)) C.eq.push_back(vsub(unit(M, MI), unit(M, j)));
                    IVec w = lform;
                    w[MI] -= 1;
                    C.weak.push_back(w);  // m <= n
                }
                for (int i : members(Jt & ~g.supp)) {
                    IVec w = Nform;
                    w[i] -= 1;
                    C.weak.push_back(w);  // b_i <= N
                }
                if (C.empty()) continue;
                Atom a = torus_atom(g.vertices, Jt, kcase == 0 ? 1 : 0);
                for (int i = 0; i <= r; ++i) {
                    for (int delta = 0; delta <= (jfree ? 1 : 0); ++delta) {
                        long long c = binom(r, i) * (((r - i) % 2) ? -1 : 1);
                        if (jfree) c *= delta ? 1 : -1;
                        // L-exponent = (i + q - d + [jfree])·N - Σb - [kcase]·k - [jfree]·m + delta
                        long nc = i + q - d + (jfree ? 1 : 0);
                        IVec expo(M, 0);
                        for (int t = 0; t < M; ++t) expo[t] = nc * Nform[t] - sumb[t];
                        if (kcase == 1) expo[KI] -= 1;
                        if (jfree) expo[MI] -= 1;
                        ConeTerm T;
                        T.cone = C;
                        T.lform = lform;
                        T.sform = expo;
                        for (auto& x : T.sform) x = -x;
                        if (geom_k) T.geom.push_back({expo[KI], 1});
                        GClass coeff;
                        coeff.add(a, delta, c);
                        T.coeff = coeff;
                        std::ostringstream lab;
                        lab << "J=" << to_json_subset(J).dump() << " face=" << to_json_face(g.vertices).dump()
                            << " k" << (kcase ? ">0" : "=0") << " i=" << i;
                        if (jfree) lab << " delta=" << delta;
                        T.label = lab.str();
                        Z.terms.push_back(std::move(T));
                    }
                }
            }
        }
    }
    return Z;
}

GClass atom_pair(const FaceDesc& g, Subset Jt) {
    GClass c;
    c.add(torus_atom(g.vertices, Jt, 1), 0, 1);
    c.add(torus_atom(g.vertices, Jt, 0), 0, -1);
    return c;
}

}  // namespace

MotSeries zeta_local(const Poly& f) { return build_series(f, -1); }

MotSeries pair_zeta(const Poly& f, int j) {
    if (j < 0 || j >= f.dim) throw MathError("coordinate index out of range");
    return build_series(f, j);
}

GClass milnor_fiber_in(const Poly& f, Subset K) {
    require_local_input(f);
    GClass S;
    for (Subset J = K; J; J = (J - 1) & K) {
        Subset Jt = tilde_J(f, J);
        if (Jt == 0) continue;
        int r = popcount(J & ~Jt);
        for (const auto& g : gamma_circ(f, Jt)) {
            int sign = ((popcount(J) + 1 - g.dim) % 2) ? -1 : 1;
            S += atom_pair(g, Jt).times(sign).scaled(r);
        }
    }
    return S;
}

GClass milnor_fiber(const Poly& f) { return milnor_fiber_in(f, full_set(f.dim)); }

GClass nearby_cycles_relative(const Poly& f) {
    require_local_input(f);
    GClass S;
    int d = f.dim;
    for (Subset J = 0;; ++J) {
        Subset Jt = tilde_J(f, J);
        int r = popcount(J & ~Jt);
        Poly fj = restrict(f, Jt);
        GClass part;
        if (!(Jt != 0 && fj.terms.size() == 1)) part.add(smooth_atom(Jt), 0, 1);
        if (Jt != 0) {
            NewtonPolyhedron G = newton_polyhedron(f, Jt);
            for (const auto& g : gamma_circ(G, Jt)) {
                for (Subset I : p_family(G, g).P) {
                    int sign = ((popcount(J) + 1 - popcount(I) - g.dim) % 2) ? -1 : 1;
                    for (int eps = 1; eps >= 0; --eps) {
                        Atom a = torus_atom(g.vertices, Jt, eps);
                        a.has_rel = true;
                        a.rel = I;
                        part.add(a, 0, eps ? sign : -sign);
                    }
                }
            }
        }
        S += part.scaled(r);
        if (J == full_set(d)) break;
    }
    return S;
}

FaceformResult milnor_fiber_faceform(const Poly& f) {
    require_local_input(f);
    FaceformResult R;
    int d = f.dim;
    NewtonPolyhedron G = newton_polyhedron(f);
    for (const auto& g : G.compact_faces()) {
        int sign = ((d + 1 - g.dim) % 2) ? -1 : 1;
        R.cls += atom_pair(g, full_set(d)).times(sign);
    }
    R.euler_faceform = euler(R.cls, f);
    R.euler_normative = euler(milnor_fiber(f), f);
    return R;
}

GClass s_delta(const Poly& f, int j) {
    require_local_input(f);
    int d = f.dim;
    if (j < 0 || j >= d) throw MathError("coordinate index out of range");
    Subset rest = full_set(d) & ~(1u << j);
    GClass S;
    for (Subset J = rest;; J = (J - 1) & rest) {
        Subset Jd = J | (1u << j);
        Subset Jt = tilde_J(f, Jd);
        if (Jt != 0) {
            int r = popcount(Jd & ~Jt);
            for (const auto& g : gamma_circ(f, Jt)) {
                int sign = ((popcount(Jd) + 1 - g.dim) % 2) ? -1 : 1;
                S += atom_pair(g, Jt).times(sign).scaled(r);
            }
        }
        if (J == 0) break;
    }
    return S;
}

Report check_restriction(const Poly& f, int j) {
    Report R;
    int d = f.dim;
    Subset rest = full_set(d) & ~(1u << j);
    GClass Sf = milnor_fiber(f);
    Poly ft = restrict(f, rest);
    GClass St = ft.is_zero() ? GClass{} : milnor_fiber_in(f, rest);
    GClass Sd = s_delta(f, j);
    GClass rhs = St + Sd;
    nlohmann::json data = {{"S_f", to_json(Sf)}, {"S_restricted", to_json(St)}, {"S_delta", to_json(Sd)},
                           {"restriction_zero", ft.is_zero()}};
    if (Sf == rhs) {
        R.add("class identity", Status::Verified, "S_f = S_restricted + S_delta", data);
    } else {
        data["difference"] = to_json(Sf - rhs);
        R.add("class identity", Status::Failed, "S_f differs from S_restricted + S_delta", data);
    }
    long e1 = euler(Sf, f), e2 = euler(St, f) + euler(Sd, f);
    R.add("euler characteristic", e1 == e2 ? Status::Verified : Status::Failed,
          std::to_string(e1) + " vs " + std::to_string(e2), {{"lhs", e1}, {"rhs", e2}});
    return R;
}

Report check_integral_identity(const Poly& f, int d1, int d2, int d3) {
    Report R;
    int d = f.dim;
    if (d1 < 0 || d2 < 0 || d3 < 0 || d1 + d2 + d3 != d)
        throw MathError("block sizes must be nonnegative and sum to d = " + std::to_string(d));
    require_local_input(f);
    // (1) weight balance for f(λx, λ^{-1}y, z) = f
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& [e, c] : f.terms) {
        long sx = 0, sy = 0;
        for (int i = 0; i < d1; ++i) sx += e[i];
        for (int i = d1; i < d1 + d2; ++i) sy += e[i];
        if (sx != sy) bad.push_back(e);
    }
    if (bad.empty())
        R.add("weight balance", Status::Verified, "every monomial is balanced between the x and y blocks");
    else
        R.add("weight balance", Status::Failed, "unbalanced monomials", {{"monomials", bad}});
    if (!bad.empty() || d2 == 0) {
        if (d2 == 0) R.add("face families", Status::Verified, "no y block: the identity is the restriction itself");
        return R;
    }
    // (2) face families in the pair expansions along y_1..y_{d2}
    Subset X = full_set(d1);
    nlohmann::json cases = nlohmann::json::array();
    bool structural_ok = true, cancel_ok = true;
    for (int jj = 0; jj < d2; ++jj) {
        int y = d1 + jj;
        Subset killed = 0;
        for (int t = 0; t < jj; ++t) killed |= 1u << (d1 + t);
        Subset avail = full_set(d) & ~killed;
        Poly fj = restrict(f, avail);
        if (fj.is_zero()) continue;
        for (Subset J = avail; J; J = (J - 1) & avail) {
            if (!contains(J, y)) continue;
            Subset Jt = tilde_J(fj, J);
            if (Jt == 0) continue;
            NewtonPolyhedron G = newton_polyhedron(fj, Jt);
            for (const auto& g : gamma_circ(G, Jt)) {
                if ((Jt & full_set(d1 + d2)) == 0) {
                    // lives on the z block only: part of the restricted function, not cancelled
                    cases.push_back({{"y", y + 1},
                                     {"J", to_json_subset(J)},
                                     {"J_tilde", to_json_subset(Jt)},
                                     {"face", to_json_face(g.vertices)},
                                     {"kind", "z-block term"}});
                    continue;
                }
                PFamily P = p_family(G, g);
                std::vector<Subset> restricted;
                for (Subset I : P.P)
                    if ((I & ~X) == 0) restricted.push_back(I);
                std::vector<Subset> maxes;
                for (Subset I : restricted) {
                    bool m = true;
                    for (Subset K : restricted)
                        if (K != I && (K & I) == I) m = false;
                    if (m) maxes.push_back(I);
                }
                bool unique = maxes.size() == 1;
                Subset Mx = unique ? maxes[0] : 0;
                bool power_set = unique && static_cast<long>(restricted.size()) == (1l << popcount(Mx));
                bool ok = unique && Mx != 0 && (Mx & ~(Jt & X)) == 0 && power_set;
                long alt = 0;
                for (Subset I : restricted) alt += (popcount(I) % 2) ? -1 : 1;
                if (!ok) structural_ok = false;
                if (alt != 0) cancel_ok = false;
                nlohmann::json fam = nlohmann::json::array(), famr = nlohmann::json::array();
                for (Subset I : P.P) fam.push_back(to_json_subset(I));
                for (Subset I : restricted) famr.push_back(to_json_subset(I));
                cases.push_back({{"y", y + 1},
                                 {"J", to_json_subset(J)},
                                 {"J_tilde", to_json_subset(Jt)},
                                 {"face", to_json_face(g.vertices)},
                                 {"kind", "cancelling"},
                                 {"P", fam},
                                 {"P_x_block", famr},
                                 {"M", unique ? to_json_subset(Mx) : nlohmann::json(nullptr)},
                                 {"ok", ok},
                                 {"alternating_sum", alt}});
            }
        }
    }
    R.add("face families", structural_ok ? Status::Verified : Status::Inconclusive,
          structural_ok ? "each family restricted to the x block is the power set of a nonempty M inside J~ ∩ x"
                        : "some family lacks a unique nonempty maximal element inside the x block",
          {{"cases", cases}});
    R.add("cancellation", cancel_ok ? Status::Verified : Status::Inconclusive,
          cancel_ok ? "every alternating sum over the family vanishes" : "a nonzero alternating sum remains");
    return R;
}

// ---------------------------------------------------------------- spectrum

void fp_add(FracPoly& p, const mpq_class& e, long long c) {
    if (c == 0) return;
    long long& slot = p[e];
    slot += c;
    if (slot == 0) p.erase(e);
}

std::string to_string(const FracPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p) {
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
        os << "t^(" << e.get_str() << ")";
    }
    return os.str();
}

bool atom_spectrum(const Atom& a, const std::map<Atom, FracPoly>& table, FracPoly& out) {
    auto it = table.find(a);
    if (it != table.end()) {
        out = it->second;
        return true;
    }
    out.clear();
    if (a.kind == Atom::Kind::Unit) {
        out[0] = 1;
        return true;
    }
    if (a.kind == Atom::Kind::Torus && a.eps == 1 && a.face.size() == 1 && popcount(a.J) == 1) {
        long N = 0;
        for (long x : a.face[0]) N += x;
        for (long k = 0; k < N; ++k) {
            mpq_class e(k, N);
            e.canonicalize();
            fp_add(out, e, 1);
        }
        return true;
    }
    return false;
}

SpectrumResult spectrum_of_class(const GClass& c, const std::map<Atom, FracPoly>& table) {
    SpectrumResult R;
    for (const auto& [a, p] : c.terms) {
        FracPoly sp;
        if (atom_spectrum(a, table, sp)) {
            for (const auto& [e, k] : p)
                for (const auto& [q, m] : sp) fp_add(R.resolved, q + e, k * m);
        } else {
            FracPoly& s = R.symbolic[a];
            for (const auto& [e, k] : p) fp_add(s, mpq_class(e), k);
            if (s.empty()) R.symbolic.erase(a);
        }
    }
    return R;
}

SpectrumResult spectrum(const Poly& f, const std::map<Atom, FracPoly>& table) {
    int d = f.dim;
    // Σ_J t^{|J∖J̃|} Σ_γ (-1)^{|J|+d-dim γ}(Sp X(1) - Sp X(0)) + (-1)^d
    GClass c = milnor_fiber(f).times((d - 1) % 2 ? -1 : 1);
    SpectrumResult R = spectrum_of_class(c, table);
    fp_add(R.resolved, 0, d % 2 ? -1 : 1);
    return R;
}

}  // namespace ndeg
