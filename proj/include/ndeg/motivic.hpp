#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ndeg/gring.hpp"
#include "ndeg/polytope.hpp"
#include "ndeg/report.hpp"

namespace ndeg {

MotSeries zeta_local(const Poly& f);
MotSeries pair_zeta(const Poly& f, int j);

// Milnor-fiber class summed over J ⊆ K; K = [d] gives the ordinary class.
GClass milnor_fiber_in(const Poly& f, Subset K);
GClass milnor_fiber(const Poly& f);
// Relative variant: SmoothHyp atoms plus torus atoms tagged by I ∈ P_{γ,J̃}.
GClass nearby_cycles_relative(const Poly& f);

struct FaceformResult {
    GClass cls;
    long euler_faceform = 0;
    long euler_normative = 0;
    bool mismatch() const { return euler_faceform != euler_normative; }
};
FaceformResult milnor_fiber_faceform(const Poly& f);

GClass s_delta(const Poly& f, int j);

Report check_restriction(const Poly& f, int j);
Report check_integral_identity(const Poly& f, int d1, int d2, int d3);

using FracPoly = std::map<mpq_class, long long>;
std::string to_string(const FracPoly& p);
void fp_add(FracPoly& p, const mpq_class& e, long long c);

struct SpectrumResult {
    FracPoly resolved;
    std::map<Atom, FracPoly> symbolic;  // Sp[atom] appears multiplied by this t-polynomial
    bool complete() const { return symbolic.empty(); }
};
// Sp of an atom: table entry, built-in 0-dimensional rule, or nullptr when unknown.
bool atom_spectrum(const Atom& a, const std::map<Atom, FracPoly>& table, FracPoly& out);
SpectrumResult spectrum_of_class(const GClass& c, const std::map<Atom, FracPoly>& table);
SpectrumResult spectrum(const Poly& f, const std::map<Atom, FracPoly>& table = {});

void require_local_input(const Poly& f);

}  // namespace ndeg
