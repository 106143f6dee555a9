#pragma once

#include <utility>
#include <vector>

#include "ndeg/linalg.hpp"
#include "ndeg/poly.hpp"

namespace ndeg {

// A face conv(V) + R_{>=0}^I of a Newton polyhedron. Identity is (vertices, recession).
struct FaceDesc {
    std::vector<IVec> vertices;  // sorted, full-length exponent vectors
    Subset recession = 0;
    int dim = 0;
    Subset supp = 0;
    Subset ambient = 0;  // coordinate set K of the polyhedron this face belongs to
    IVec normal;         // a weight vector whose minimizing face is exactly this face

    bool compact() const { return recession == 0; }
    bool is_vertex() const { return recession == 0 && vertices.size() == 1; }
    bool same(const FaceDesc& o) const { return vertices == o.vertices && recession == o.recession; }
    bool operator<(const FaceDesc& o) const {
        if (dim != o.dim) return dim < o.dim;
        if (vertices != o.vertices) return vertices < o.vertices;
        return recession < o.recession;
    }
};

struct Facet {
    IVec normal;  // primitive, nonnegative, zero outside the ambient set
    long offset = 0;
};

// Newton polyhedron of f^K inside R^K (vectors kept at full length d).
struct NewtonPolyhedron {
    int d = 1;
    Subset ambient = 0;
    bool empty = true;
    std::vector<IVec> vertices;
    std::vector<Facet> facets;
    std::vector<FaceDesc> faces;  // every face including the polyhedron itself, sorted

    long ell(const IVec& a) const;
    const FaceDesc& face_of(const IVec& a) const;
    const FaceDesc* find(const std::vector<IVec>& V, Subset I) const;
    std::vector<FaceDesc> compact_faces() const;
    const FaceDesc& whole() const;
    bool facet_contains(const Facet& F, const FaceDesc& face) const;
};

NewtonPolyhedron newton_polyhedron(const Poly& f, Subset ambient);
NewtonPolyhedron newton_polyhedron(const Poly& f);

// Terms of f lying on the face; throws MathError if the face is not a face of f's polyhedron.
Poly face_function(const Poly& f, const FaceDesc& face);

IMat affine_lattice_basis(const std::vector<IVec>& pts);
long normalized_volume(const std::vector<IVec>& pts);
long mixed_volume(const std::vector<std::vector<IVec>>& polytopes);
// (Vol_Z(Delta_0), Vol_Z(Delta_1)) for a compact face.
std::pair<long, long> delta_volumes(const FaceDesc& face);

// Pulling triangulation of a lattice polytope; simplices as point lists (affine-independent).
std::vector<std::vector<IVec>> triangulate(const std::vector<IVec>& pts);

}  // namespace ndeg
