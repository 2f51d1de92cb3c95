#pragma once

// Finite-basis commutative differential graded algebras over Q.
//
// A Cdga is immutable once built: a graded basis with labels, sparse
// structure constants, a sparse degree +1 differential and a unit element.
// Elements are sparse coordinate vectors over the basis.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toruscalc/betti.hpp"
#include "toruscalc/exactla.hpp"

namespace toruscalc {

/// Basis index -> coefficient. Zero coefficients are never stored.
using SparseVector = std::map<int, Rational>;

void add_scaled(SparseVector& target, const Rational& scale, const SparseVector& v);
SparseVector scaled(const SparseVector& v, const Rational& scale);
SparseVector basis_vector(int index);

struct BasisElement {
    std::string label;
    int degree = 0;
};

class Cdga;
using CdgaPtr = std::shared_ptr<const Cdga>;

class CdgaBuilder {
public:
    int add_basis(std::string label, int degree);
    void set_unit(SparseVector unit) { unit_ = std::move(unit); }
    /// e_i * e_j = value. Unset pairs multiply to zero.
    void set_product(int i, int j, SparseVector value);
    void set_differential(int i, SparseVector value);

    int size() const { return static_cast<int>(basis_.size()); }
    int degree(int i) const { return basis_.at(static_cast<std::size_t>(i)).degree; }

    CdgaPtr build() &&;

private:
    std::vector<BasisElement> basis_;
    SparseVector unit_;
    std::map<std::pair<int, int>, SparseVector> products_;
    std::map<int, SparseVector> differential_;
};

class Cdga {
public:
    int dimension() const { return static_cast<int>(basis_.size()); }
    const BasisElement& basis(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    int degree(int i) const { return basis(i).degree; }
    const std::string& label(int i) const { return basis(i).label; }
    std::optional<int> index_of(const std::string& label) const;
    int index(const std::string& label) const;

    int max_degree() const { return max_degree_; }
    /// Basis indices of the given degree, in basis order.
    const std::vector<int>& indices_of_degree(int degree) const;
    int dimension_in_degree(int degree) const
    {
        return static_cast<int>(indices_of_degree(degree).size());
    }
    int position_in_degree(int i) const { return position_.at(static_cast<std::size_t>(i)); }

    const SparseVector& unit() const { return unit_; }
    const SparseVector& product(int i, int j) const;
    /// Nonzero products e_i * e_j, sorted by j.
    const std::vector<std::pair<int, SparseVector>>& product_row(int i) const
    {
        return rows_.at(static_cast<std::size_t>(i));
    }
    SparseVector multiply(const SparseVector& x, const SparseVector& y) const;

    const SparseVector& differential(int i) const { return differential_.at(static_cast<std::size_t>(i)); }
    SparseVector d(const SparseVector& x) const;
    bool has_zero_differential() const;

    /// Homogeneous degree of x; nullopt for zero or inhomogeneous x.
    std::optional<int> degree_of(const SparseVector& x) const;

    RatVector to_dense(const SparseVector& x, int degree) const;
    SparseVector from_dense(const RatVector& v, int degree) const;
    /// Matrix of d : X^p -> X^{p+1} in the degreewise bases.
    RatMatrix differential_matrix(int degree) const;

    std::string render(const SparseVector& x) const;

private:
    friend class CdgaBuilder;
    Cdga() = default;

    std::vector<BasisElement> basis_;
    std::map<std::string, int> by_label_;
    std::vector<int> position_;
    std::vector<std::vector<int>> by_degree_;
    int max_degree_ = 0;
    SparseVector unit_;
    std::vector<std::vector<std::pair<int, SparseVector>>> rows_;
    std::vector<SparseVector> differential_;
};

/// Degree -> list of vectors (in the coordinates of some ambient CDGA).
using GradedVectors = std::map<int, std::vector<SparseVector>>;

/// A degree-preserving linear map given on the source basis.
struct Morphism {
    std::string name;
    CdgaPtr source;
    CdgaPtr target;
    std::vector<SparseVector> images;

    // Set by verify_morphism.
    bool chain_map = false;
    bool algebra_map = false;
    bool injective = false;
    bool surjective = false;

    SparseVector apply(const SparseVector& x) const;
};

Morphism identity_morphism(CdgaPtr x);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string message);
    void merge(const CheckReport& other, const std::string& prefix = {});
};

/// Exhaustive check of d^2 = 0, Leibniz, graded commutativity, associativity,
/// unit laws and degree bookkeeping on all basis pairs and triples.
CheckReport check_axioms(const Cdga& x);

CheckReport check_degree_preserving(const Morphism& f);
CheckReport check_chain_map(const Morphism& f);
CheckReport check_algebra_map(const Morphism& f);
/// Fills the four flags of `f`; returns the chain-map and algebra-map failures.
CheckReport verify_morphism(Morphism& f);

/// Cohomology of a sub-complex S of X (all of X when `sub` is null): cycles,
/// boundaries and representatives of a basis of H, all in X coordinates.
struct CohomologyData {
    std::map<int, std::vector<SparseVector>> boundaries;
    std::map<int, std::vector<SparseVector>> representatives;
    BettiVector betti;
};

CohomologyData cohomology_data(const Cdga& x, const GradedVectors* sub = nullptr);
BettiVector cohomology_betti(const Cdga& x);
BettiVector subcomplex_betti(const Cdga& x, const GradedVectors& sub);

/// True iff the sub-complex is closed under d.
bool is_subcomplex(const Cdga& x, const GradedVectors& sub);

/// Quasi-isomorphism test for f restricted to the sub-complex `source_sub`
/// of f.source, landing in the sub-complex `target_sub` of f.target (nulls
/// mean the whole algebra).
bool is_quasi_iso(const Morphism& f, const GradedVectors* source_sub = nullptr,
                  const GradedVectors* target_sub = nullptr);

/// Spanning set per degree reduced to a basis (deterministic pivoting).
GradedVectors graded_basis(const Cdga& x, const std::vector<SparseVector>& vectors);
std::map<int, int> graded_dimensions(const GradedVectors& g);

struct IdealBasis {
    CdgaPtr parent;
    GradedVectors span;
    bool closed = false;
    bool acyclic = false;
};

/// Smallest graded subspace containing the generators and closed under
/// multiplication by every basis element and under d.
IdealBasis ideal_closure(CdgaPtr parent, const std::vector<SparseVector>& generators);

struct SubalgebraResult {
    CdgaPtr algebra;
    Morphism inclusion;
};

/// The subalgebra of `parent` with the given graded basis. Throws if the span
/// is not closed under products or d, or does not contain the unit.
SubalgebraResult subalgebra(CdgaPtr parent, const GradedVectors& basis,
                            const std::vector<std::string>& labels = {});

/// Coordinates of a parent vector in the subalgebra basis, if it lies there.
std::optional<SparseVector> coordinates_in(const SubalgebraResult& sub, const SparseVector& parent_vector);

struct QuotientResult {
    CdgaPtr algebra;
    Morphism projection;
    /// Parent vectors chosen as representatives of the quotient basis.
    std::vector<SparseVector> representatives;
};

/// X / I on a degreewise complement of I obtained by extending a basis of I
/// with the basis of X in order.
QuotientResult quotient_cdga(const IdealBasis& ideal);

CdgaPtr tensor_cdga(CdgaPtr x, CdgaPtr y);
SparseVector tensor_element(const Cdga& x, const Cdga& y, const SparseVector& a, const SparseVector& b);

/// Direct product X x Y with componentwise operations; unit (1, 1).
CdgaPtr product_cdga(CdgaPtr x, CdgaPtr y, const std::string& left_tag = {},
                     const std::string& right_tag = {});
SparseVector pair_element(const Cdga& x, const SparseVector& a, const SparseVector& b);

class FiniteGradedRing;

/// Cohomology ring: representatives of a basis of H with the induced
/// product. Throws if the product is not independent of representatives.
FiniteGradedRing cohomology_ring(CdgaPtr x);

}  // namespace toruscalc
