#pragma once

// Characteristic functions on face lattices and the descriptors of the torus
// manifolds M(P, xi) they determine.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toruscalc/exactla.hpp"
#include "toruscalc/polytope.hpp"

namespace toruscalc {

/// Facet id -> primitive vector in Z^n.
struct CharacteristicFunction {
    int target_rank = 0;
    std::map<int, IntVector> assignment;

    const IntVector& operator[](int facet) const { return assignment.at(facet); }

    static CharacteristicFunction from_ints(int n, const std::map<int, std::vector<long>>& values);
};

class CharacteristicError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ValidationReport {
    bool ok = true;
    /// Faces whose characteristic vectors fail to span a direct summand.
    std::vector<int> violating_faces;
};

/// Checks the direct-summand condition on every proper face. Throws
/// CharacteristicError on wrong vector length, non-primitive vectors or a
/// facet without a vector.
ValidationReport validate_characteristic(const FaceLattice& p, const CharacteristicFunction& xi);

/// Characteristic function on the connected sum: merged facets keep their
/// common vector. Throws CharacteristicError if paired facets disagree.
CharacteristicFunction merge_characteristic(const FaceLattice& p1, const CharacteristicFunction& xi1,
                                            const FaceLattice& p2, const CharacteristicFunction& xi2,
                                            const SurgerySpec& spec);

/// The standard function F_i -> e_i on the orbit space Q^n.
CharacteristicFunction standard_orbit_characteristic(int n);

/// A validated characteristic pair (P, xi). N(F) is stored per face as the
/// list of characteristic vectors of the facets containing it.
class TorusManifoldDescriptor {
public:
    TorusManifoldDescriptor(FaceLattice lattice, CharacteristicFunction xi);

    const FaceLattice& lattice() const { return lattice_; }
    const CharacteristicFunction& xi() const { return xi_; }
    const std::vector<IntVector>& isotropy_generators(int face_id) const
    {
        return isotropy_.at(static_cast<std::size_t>(face_id));
    }

private:
    FaceLattice lattice_;
    CharacteristicFunction xi_;
    std::vector<std::vector<IntVector>> isotropy_;
};

/// Fixed points of the torus action correspond to vertices of the orbit space.
std::size_t fixed_point_count(const TorusManifoldDescriptor& d);

std::vector<std::pair<int, IntVector>> characteristic_submanifolds(const TorusManifoldDescriptor& d);

}  // namespace toruscalc
