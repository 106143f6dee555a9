#pragma once

#include <string>
#include <vector>

#include "ndeg/polytope.hpp"

namespace ndeg {

struct FaceVerdict {
    FaceDesc face;
    std::string verdict;  // trivial | nondegenerate | degenerate | probably nondegenerate | degenerate mod p | unchecked
    bool exact = true;
    long witness_prime = 0;
};

struct ProbeReport {
    std::vector<long> primes;
    std::vector<FaceVerdict> faces;
    bool nondegenerate = true;
    bool exact = true;  // every verdict decided exactly
};

ProbeReport nondegeneracy_probe(const Poly& f, const std::vector<long>& primes);

// First `count` primes above every exponent and coefficient denominator with good reduction.
std::vector<long> default_probe_primes(const Poly& f, int count = 3);

}  // namespace ndeg
