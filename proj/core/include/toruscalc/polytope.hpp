#pragma once

// Face lattices of simple polytopes and nice manifolds with corners, plus the
// combinatorial connected sums used to build orbit spaces of torus manifolds.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "toruscalc/betti.hpp"

namespace toruscalc {

/// A face is a connected component of an intersection of facets. Faces with
/// the same facet set are told apart by their component tag.
struct Face {
    int id = 0;
    int dim = 0;
    std::vector<int> facets;    // sorted facet ids
    int component = 0;
    std::vector<int> vertices;  // sorted ids of the vertex faces it contains

    friend bool operator==(const Face&, const Face&) = default;
};

class FaceLattice {
public:
    FaceLattice() = default;

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<int>& facets() const { return facets_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const;
    int hole_count() const { return holes_; }

    std::vector<int> vertex_ids() const;
    std::size_t vertex_count() const;
    std::size_t facet_count() const { return facets_.size(); }

    /// Ids of all faces whose facet set is exactly `facet_set`.
    std::vector<int> faces_with_facets(const std::vector<int>& facet_set) const;
    int top_face() const;

    /// True iff `lower` is a face of `upper` (reflexive).
    bool contains(int upper, int lower) const;

    /// Structural flags recorded by the constructor that produced the lattice.
    bool is_nice_corners() const { return nice_corners_; }
    bool is_simple_polytope() const { return simple_polytope_; }
    /// Every vertex lies in exactly n facets.
    bool vertices_simple() const;
    /// Every codimension-k face lies in exactly k facets.
    bool codimension_consistent() const;
    /// Every facet id names a single connected face.
    bool facets_connected() const;
    /// Every covering relation drops dimension by exactly one.
    bool is_graded() const;

    /// Faces counted by dimension, index 0 = vertices, up to dim n-1.
    std::vector<std::size_t> f_vector() const;

    struct Flags {
        bool simple_polytope = false;
        bool nice_corners = true;
        int holes = 0;
    };

    /// Builds a lattice from raw faces. Ids are reassigned lexicographically by
    /// (dim, facet set, input order); components are renumbered per facet set.
    /// Vertex lists in `raw` refer to positions in `raw`.
    static FaceLattice assemble(int ambient_dim, std::vector<int> facets, std::vector<Face> raw,
                                Flags flags);

    friend bool operator==(const FaceLattice&, const FaceLattice&) = default;

private:
    int ambient_dim_ = 0;
    std::vector<int> facets_;
    std::vector<Face> faces_;  // index == id
    int holes_ = 0;
    bool simple_polytope_ = false;
    bool nice_corners_ = true;
};

struct SurgerySpec {
    int left_face = 0;
    int right_face = 0;
    /// Facet of the left lattice -> facet of the right lattice, covering the
    /// facets that contain each chosen face.
    std::map<int, int> facet_pairing;
};

/// A connected sum together with the facet renaming applied to each side.
struct ConnectedSum {
    FaceLattice lattice;
    std::map<int, int> left_facet_map;
    std::map<int, int> right_facet_map;
};

class SurgeryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

FaceLattice orbit_space_lattice(int n);
FaceLattice simplex_lattice(int n);
FaceLattice cube_lattice(int n);

ConnectedSum vertex_connected_sum_detailed(const FaceLattice& p, int v, const FaceLattice& q, int w,
                                           const std::map<int, int>& pairing);
FaceLattice vertex_connected_sum(const FaceLattice& p, int v, const FaceLattice& q, int w,
                                 const std::map<int, int>& pairing);

ConnectedSum face_connected_sum_detailed(const FaceLattice& p, const FaceLattice& q,
                                         const SurgerySpec& spec);
FaceLattice face_connected_sum(const FaceLattice& p, const FaceLattice& q, const SurgerySpec& spec);

/// Pairing of the facets around two faces of the same facet count, matched in
/// increasing facet-id order. Convenient for symmetric surgeries.
SurgerySpec ordered_surgery(const FaceLattice& p, int left_face, const FaceLattice& q,
                            int right_face);

/// Betti numbers of an n-polytope with s simple holes (a wedge of s spheres S^{n-1}).
BettiVector holes_betti(int n, int s);

/// Euler characteristic of the boundary complex sum_{d<n} (-1)^d f_d.
long euler_char_of_boundary(const FaceLattice& p);

/// h-vector of a simple polytope from its f-vector.
std::vector<long> h_vector(const FaceLattice& p);

}  // namespace toruscalc
