#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ndeg/cone.hpp"
#include "ndeg/polytope.hpp"

namespace ndeg {

// Relatively open dual cone of a proper face (vectors of length d, zero outside the ambient set).
struct DualCone {
    FaceDesc face;
    IMat generators;
    PolyCone cone;
    int dim = 0;
};

DualCone sigma_cone(const NewtonPolyhedron& G, const FaceDesc& face);
// Cone of gamma + R_{>=0}^I; throws MathError if that is not a proper face.
DualCone sigma_cone(const NewtonPolyhedron& G, const FaceDesc& gamma, Subset I);
// Closed version: equalities kept, strict rows relaxed.
PolyCone closed_sigma(const NewtonPolyhedron& G, const FaceDesc& face);

// (compact part, recession set) of the face minimized by a.
std::pair<FaceDesc, Subset> locate(const NewtonPolyhedron& G, const IVec& a);

struct PFamily {
    std::vector<Subset> P;
    std::vector<Subset> M;
};
PFamily p_family(const NewtonPolyhedron& G, const FaceDesc& gamma);

// Compact faces of Γ(f) whose support is exactly Jt.
std::vector<FaceDesc> gamma_circ(const Poly& f, Subset Jt);
std::vector<FaceDesc> gamma_circ(const NewtonPolyhedron& G, Subset Jt);

struct PartitionReport {
    int samples = 0;
    int faces_checked = 0;
    int pairs_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
PartitionReport partition_check(const NewtonPolyhedron& G, int samples, unsigned seed, long bound = 20);

}  // namespace ndeg
