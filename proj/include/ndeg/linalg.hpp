#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace ndeg {

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;  // row-major: a list of row vectors
using QVec = std::vector<mpq_class>;

// Coordinate subsets are bitmasks over 0-based indices (d is small).
using Subset = unsigned;

inline int popcount(Subset s) { return __builtin_popcount(s); }
inline bool contains(Subset s, int i) { return (s >> i) & 1u; }
inline Subset full_set(int d) { return d >= 32 ? ~0u : ((1u << d) - 1u); }
std::vector<int> members(Subset s);
Subset subset_of(const std::vector<int>& idx);

long gcd_all(const IVec& v);
IVec primitive(const IVec& v);
long dot(const IVec& a, const IVec& b);
IVec vsub(const IVec& a, const IVec& b);
IVec vadd(const IVec& a, const IVec& b);
IVec unit(int d, int i);
bool is_zero(const IVec& v);

int rank(const IMat& rows);

// Integer vectors spanning the rational kernel {x : rows * x = 0}; each is primitive.
IMat kernel(const IMat& rows, int ncols);

// Basis (row Hermite form) of the lattice generated by the rows.
IMat hermite_basis(const IMat& rows, int ncols);

// Basis of the saturated lattice (rational span of rows) ∩ Z^ncols, in row Hermite form.
IMat saturated_basis(const IMat& rows, int ncols);

// Coordinates of x in a row-echelon basis B; exact rational solve.
// Returns false if x is not in the rational span of B.
bool coords_in_basis(const IMat& B, const IVec& x, QVec& out);

mpz_class det(const IMat& square);

}  // namespace ndeg
