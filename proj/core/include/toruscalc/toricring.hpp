#pragma once

// Rational cohomology rings of quasitoric manifolds and of (equivariant)
// connected sums, as finite graded rings with a fundamental class.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toruscalc/betti.hpp"
#include "toruscalc/cdga.hpp"
#include "toruscalc/charfun.hpp"
#include "toruscalc/polytope.hpp"

namespace toruscalc {

/// Graded-commutative ring with unit and zero differential, stored as a Cdga.
/// The unit must be a single basis element in degree 0.
class FiniteGradedRing {
public:
    FiniteGradedRing(CdgaPtr algebra, std::optional<int> fundamental_class);

    const Cdga& algebra() const { return *algebra_; }
    CdgaPtr algebra_ptr() const { return algebra_; }
    int unit_index() const { return unit_; }
    std::optional<int> fundamental_class() const { return fundamental_; }
    int top_degree() const { return algebra_->max_degree(); }

    /// Coefficient of the unit.
    Rational augmentation(const SparseVector& x) const;
    SparseVector multiply(const SparseVector& x, const SparseVector& y) const
    {
        return algebra_->multiply(x, y);
    }

private:
    CdgaPtr algebra_;
    int unit_ = 0;
    std::optional<int> fundamental_;
};

class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generators v_F (one per facet, degree 2), Stanley-Reisner monomials and
/// the n linear forms sum_F xi_F[j] v_F.
struct RingPresentation {
    std::vector<int> facets;
    std::vector<std::vector<int>> minimal_non_faces;
    std::vector<std::vector<Integer>> linear_relations;  // indexed like `facets`
};

RingPresentation ring_presentation(const FaceLattice& p, const CharacteristicFunction& xi);

FiniteGradedRing quasitoric_ring(const FaceLattice& p, const CharacteristicFunction& xi);
FiniteGradedRing sphere_ring(int dimension);
FiniteGradedRing connected_sum_ring(const FiniteGradedRing& r1, const FiniteGradedRing& r2);
FiniteGradedRing equivariant_connected_sum_ring(const FiniteGradedRing& r1, const FiniteGradedRing& r2, int n,
                                                int k);

/// Wraps a CDGA with zero differential; the fundamental class is the named
/// basis element or, if omitted, the unique basis element of top degree.
FiniteGradedRing ring_from_cdga(CdgaPtr x, const std::string& fundamental_label = {});

/// Coefficients of mu in e_a * e_b for a in degree p, b in degree top - p.
RatMatrix pairing_matrix(const FiniteGradedRing& r, int degree);
bool has_nondegenerate_pairing(const FiniteGradedRing& r);
BettiVector betti_of_ring(const FiniteGradedRing& r);

}  // namespace toruscalc
