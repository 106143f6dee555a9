#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ndeg/gring.hpp"
#include "ndeg/kernels.hpp"
#include "ndeg/polytope.hpp"
#include "ndeg/report.hpp"

namespace ndeg {

// Cap on brute-force enumeration size (number of points visited).
struct Budget {
    double limit = 1e8;
    static Budget from_env();  // NDEG_BUDGET overrides the default
    void check(double cost, const std::string& what) const;
};

// Complex Euler characteristic of an atom, for f nondegenerate.
long atom_euler(const Atom& a, const Poly& f);
long euler(const GClass& c, const Poly& f);

// Point counts of atoms and classes over F_p (L = p).
class FpContext {
public:
    FpContext(const Poly& f, long p, Budget budget = Budget::from_env());
    long prime() const { return p_; }
    mpz_class atom_count(const Atom& a);
    mpq_class class_count(const GClass& c);

private:
    Poly f_;
    long p_;
    Budget budget_;
    std::map<Atom, mpz_class> cache_;
};

// #{local (or global) jets mod t^{n+1} with f(φ) ≡ t^n}; reference selects the serial odometer.
uint64_t jet_count_fp(const Poly& f, long p, long n, bool local, const Budget& budget, bool reference = false);
// Local jets mod t^{n+m+1} with f(φ) ≡ t^n and ord x_j = m.
mpz_class pair_jet_count_fp(const Poly& f, long p, long n, int j, long m, const Budget& budget);
// Σ of stratum classes at L = p over the contact-locus strata of level n.
mpq_class strata_sum_fp(const Poly& f, long p, long n, const Budget& budget);

// Support survives mod p and no compact-face function has a singular zero on the F_p-torus.
// A necessary condition only: singular points over extensions of F_p are not searched.
bool good_reduction(const Poly& f, long p, const Budget& budget = Budget::from_env());

// Kouchnirenko number; requires f convenient.
long milnor_number_oracle(const Poly& f);
bool is_convenient(const Poly& f);

// Finite-field and Euler-characteristic cross-checks of the symbolic formulas.
Report crosscheck(const Poly& f, const std::vector<long>& primes, long nmax, const Budget& budget);

}  // namespace ndeg
