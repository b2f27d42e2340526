#pragma once

#include "tqft/group.hpp"
#include "tqft/rational.hpp"
#include "tqft/rng.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace tqft {

/// Slot = (triangle, corner) flattened as 3*tri + corner.  Each triangle
/// carries its three edge slots in cyclic traversal order; paired slots are
/// glued with opposite traversal directions and contracted through g^{ij}.
using Slot = int;
inline int slot_tri(Slot s) { return s / 3; }
inline int slot_idx(Slot s) { return s % 3; }
inline Slot make_slot(int tri, int idx) { return 3 * tri + idx; }

/// A simplicial 2-graph (Delta-complex): repeated vertices and multi-edges
/// are allowed.  Vertices are bookkeeping for the face-map identities and the
/// Euler characteristic; the contraction only reads slots and pairings.
struct Triangulation {
    struct Edge {
        int src = -1, dst = -1;  // -1 when vertex data is absent (raw slot form)
    };
    struct Tri {
        std::array<int, 3> edge;     // edge id per slot
        std::array<bool, 3> forward; // does the slot traverse the edge src->dst?
        std::array<int, 3> vert;     // traversal visits vert[i] -> vert[(i+1)%3]
    };

    int n_vertices = 0; // 0 with raw slot input (vertex data absent)
    std::vector<Edge> edges;
    std::vector<Tri> tris;
    std::vector<std::pair<Slot, Slot>> pairings;
    std::vector<std::vector<Slot>> boundary_circles;

    bool has_vertex_data() const { return n_vertices > 0; }
    int euler_characteristic() const; // requires vertex data
    std::vector<Slot> boundary_slots() const;
    int pairing_of(Slot s) const; // index into pairings, or -1

    /// Face-map identities (each triangle closes up), slot/edge endpoint
    /// consistency, pairing involution, boundary circles closed.  Throws.
    void validate() const;
};

/// Sphere (two triangles glued along all three edges) for g = 0; fan
/// triangulation of the 4g-gon with a_1 b_1 a_1^-1 b_1^-1 ... identifications
/// for g >= 1.
Triangulation standard_surface(int genus);

/// Cylinder over the circle with one edge per boundary: two triangles, one
/// seam, one diagonal.  boundary_circles = {input, output}.
Triangulation cylinder_triangulation();

/// Flip the diagonal of the quadrilateral formed by the two triangles sharing
/// an interior edge.  Rejects boundary edges and the degenerate case where
/// both slots lie on one triangle.
Triangulation pachner_22(const Triangulation& t, int edge);

/// Subdivide a triangle into three around a new interior vertex.
Triangulation pachner_13(const Triangulation& t, int tri);

/// n seeded random 2-2 / 1-3 moves.
Triangulation random_pachner_mix(const Triangulation& t, int moves, std::uint64_t seed);

/// The algebra data entering the state sum: sparse three-point tensor and the
/// (inverse) metric, exact rationals.
struct LatticeTensorData {
    int dim = 0;
    struct MEntry {
        int i, j, k;
        Rational value;
    };
    std::vector<MEntry> m;                      // m_{ijk}
    std::vector<std::vector<Rational>> metric;  // g_{ij}, dense dim x dim
    std::vector<std::vector<Rational>> metric_inv;
};

/// C[G]: m_{ijk} = |G| iff ijk = e; g_{ij} = |G| delta_{i,j^-1}.
LatticeTensorData group_algebra_tensors(const FiniteGroup& G);

/// Result of contracting a triangulated surface: a scalar when closed, a
/// sparse tensor over the boundary slots otherwise (slot order = boundary
/// circles in order, slots within each circle in order).
struct ContractionResult {
    std::vector<Slot> open_slots;
    std::map<std::vector<int>, Rational> entries;

    bool closed() const { return open_slots.empty(); }
    Rational scalar() const;
    Rational at(const std::vector<int>& coloring) const;
};

ContractionResult contract(const Triangulation& t, const LatticeTensorData& d);

/// Closed surfaces only: the partition function as one exact rational.
Rational partition_function(const Triangulation& t, const LatticeTensorData& d);

/// With boundary: evaluate at a per-boundary-edge coloring.
Rational partition_function(const Triangulation& t, const LatticeTensorData& d,
                            const std::vector<int>& boundary_coloring);

/// Contract the standard cylinder and raise the output index: the idempotent
/// |G| x |G| matrix projecting C[G] onto its center (pi[out][in]).
std::vector<std::vector<Rational>> cylinder_projector(const FiniteGroup& G);

} // namespace tqft
