#pragma once

#include <cstdint>

#include "ndeg/poly.hpp"

namespace ndeg {

// Truncated jets mod t^{n+1}: coefficients of t^s..t^n per coordinate, s = 1 (local) or 0 (global).
struct JetQuery {
    long n = 1;
    bool local = true;
    int pair_var = -1;    // when >= 0, also require ord_t x_{pair_var} = pair_order
    long pair_order = 0;  // 1 <= pair_order <= n
};

// Number of jets with f(φ) ≡ t^n mod t^{n+1}. Parallel kernel (OpenMP).
uint64_t jet_count_kernel(const PolyFp& f, const JetQuery& q);
// Same count by plain odometer enumeration of all coefficients; serial.
uint64_t jet_count_reference(const PolyFp& f, const JetQuery& q);

// #{x ∈ (F_p^*)^vars : g(x) = target}; g may only involve variables in vars.
uint64_t torus_count_kernel(const PolyFp& g, Subset vars, long target);
uint64_t torus_count_reference(const PolyFp& g, Subset vars, long target);

}  // namespace ndeg
