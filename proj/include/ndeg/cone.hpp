#pragma once

#include <vector>

#include "ndeg/linalg.hpp"

namespace ndeg {

// {x in R^m : eq·x = 0, strict·x > 0, weak·x >= 0}
struct PolyCone {
    int m = 0;
    IMat eq, strict, weak;

    bool contains(const IVec& x) const;
    bool empty() const;
    // Dimension of the set; -1 when empty.
    int dim() const;
    // Primitive generators of the closure (the closure must be pointed).
    IMat closure_rays() const;
    bool closure_pointed() const;
    // Partition into nonempty relatively open pieces (each weak row either = 0 or > 0).
    std::vector<PolyCone> open_pieces() const;
    // Lattice points x of the set with lform(x) <= N; lform must be positive on the closure minus 0.
    std::vector<IVec> lattice_points(const IVec& lform, long N) const;
};

}  // namespace ndeg
