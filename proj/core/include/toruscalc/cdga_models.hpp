#pragma once

// Finite models for S^{2n} #_{T^k} S^{2n}: the boundary and complement
// algebras C and B, the acyclic E' and B' = E' (x) B, the pullback D with its
// acyclic ideal J, the small model A, and the comparison maps between them.
//
// Generators are ordered a_1 < ... < a_k < da_1 < ... < da_k < b < b' < c and
// every monomial is stored in ascending order; words are normalized with
// Koszul signs.

#include <set>
#include <string>
#include <vector>

#include "toruscalc/cdga.hpp"

namespace toruscalc {

/// Strictly ascending subset of {1..k}.
struct SubsetIndex {
    std::vector<int> members;

    static SubsetIndex from_mask(unsigned mask);
    unsigned mask() const;
    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    SubsetIndex complement(int k) const;
    std::string to_string() const;  // "{1,3}"
};

/// All subsets of {1..k} by increasing bitmask.
std::vector<SubsetIndex> all_subsets(int k);
/// Sign of the shuffle sorting the concatenation I J; 0 if I and J meet.
int shuffle_sign(const SubsetIndex& i, const SubsetIndex& j);

CdgaPtr exterior_torus_model(int k);
CdgaPtr boundary_model(int n, int k);    // C
CdgaPtr complement_model(int n, int k);  // B
CdgaPtr eprime_model(int k);             // E'
CdgaPtr model_A(int n, int k);

/// Label helpers for model_A.
std::string alpha_label(const SubsetIndex& i);       // s^{-1} alpha_I
std::string alpha_dual_label(const SubsetIndex& i);  // s^{-2n+1} alpha_I^#

/// E' as a quotient of Lambda(a, da) truncated above degree k+2.
struct EprimeConstruction {
    CdgaPtr truncated;  // Lambda(a_i, da_i) / (degree > k+2)
    IdealBasis ideal;   // the ideal I
    QuotientResult quotient;
    /// Closure of the monomial generators of I equals their span.
    bool ideal_is_differential = false;
    /// H(I) = 0 below the truncation degree.
    bool ideal_acyclic = false;
    /// Quotient basis is {a_J} u {da_s a_J : J > s}.
    bool basis_matches = false;
};

EprimeConstruction eprime_construction(int k);

Morphism phi(int n, int k);        // B -> C
Morphism phi_prime(int n, int k);  // B' -> C

struct PullbackResult {
    CdgaPtr product;  // X x Y
    SubalgebraResult kernel;
};

/// {(x, y) : f(x) = g(y)} inside X x Y, with the degreewise kernel basis.
PullbackResult pullback_kernel(const Morphism& f, const Morphism& g);

/// A labelled element of the pullback product, with its membership status.
struct ListedElement {
    std::string family;
    std::string printed;          // the element as written with the printed sign
    bool printed_member = false;  // printed form lies in D
    bool adjusted = false;        // sign or second component replaced by the lift
    SparseVector vector;          // in product coordinates, a member of D
};

/// Everything built for one (n, k), sharing the same algebra objects.
struct SurgeryModels {
    int n = 0;
    int k = 0;
    CdgaPtr C, B, Eprime, Bprime, P, D, DJ, A;
    EprimeConstruction eprime;
    Morphism phi, phi_prime;
    SubalgebraResult d_inclusion;  // D inside P = B' x B
    std::vector<ListedElement> gen_D;
    std::vector<ListedElement> j_list;          // as printed
    std::vector<ListedElement> j_list_amended;  // closed under products and d
    IdealBasis J_printed;                       // ideal generated by j_list
    IdealBasis J;                               // ideal generated by j_list_amended
    QuotientResult quotient;  // pi : D -> D/J
    Morphism xi;              // A -> D
    int xi_dual_signs_flipped = 0;
    Morphism pi_xi;           // A -> D/J
    GradedVectors dbar;       // D-bar in D coordinates
    std::vector<ListedElement> dbar_list;
    Morphism eta;             // A -> D, image inside D-bar
};

SurgeryModels build_surgery_models(int n, int k);

struct NamedCheck {
    std::string group;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ModelVerification {
    int n = 0;
    int k = 0;
    std::vector<NamedCheck> checks;
    BettiVector h_D, h_DJ, h_A, h_Dbar;

    bool ok() const;
};

/// Groups: axioms, models, pullback, ideal, quotient, pi-xi, eta.
const std::vector<std::string>& model_check_groups();
ModelVerification verify_models(const SurgeryModels& m, const std::set<std::string>& groups);

}  // namespace toruscalc
