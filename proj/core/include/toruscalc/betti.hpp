#pragma once

// Betti vectors of torus orbit complements in S^{2n} and of the equivariant
// connected sums S^{2n} #_{T^k} S^{2n}, each computed by a closed form and
// by an independent route.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace toruscalc {

/// Ranks by degree over a field of characteristic zero.
class BettiVector {
public:
    BettiVector() = default;
    BettiVector(std::initializer_list<long> ranks) : ranks_(ranks) {}
    explicit BettiVector(std::vector<long> ranks) : ranks_(std::move(ranks)) {}

    /// e_degree: a single one in `degree`.
    static BettiVector unit(int degree);
    static BettiVector zero(int top_degree) { return BettiVector(std::vector<long>(top_degree + 1, 0)); }

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    long operator[](int degree) const;
    void set(int degree, long rank);
    void add(int degree, long rank) { set(degree, (*this)[degree] + rank); }
    const std::vector<long>& ranks() const { return ranks_; }

    BettiVector& operator+=(const BettiVector& other);
    friend BettiVector operator+(BettiVector a, const BettiVector& b) { return a += b; }

    /// Degrees shifted up by one.
    BettiVector suspend() const;
    /// Pads with zeros (or trims trailing zeros) to the given top degree.
    BettiVector padded(int top_degree) const;

    long euler_characteristic() const;
    bool is_poincare_symmetric(int dimension) const;

    std::string to_string() const;

    /// Equality as maps degree -> rank; trailing zeros are ignored.
    friend bool operator==(const BettiVector& a, const BettiVector& b);

private:
    std::vector<long> ranks_;
};

/// A one-point union of spheres recorded as (sphere dimension, multiplicity).
struct WedgeDecomposition {
    std::vector<std::pair<int, long>> summands;

    BettiVector reduced_betti() const;
};

long binomial(long n, long k);

/// Cohomology of the torus T^k: rank C(k, i) in degree i.
BettiVector torus_betti(int k);

/// Homotopy type of the complement of a j-dimensional orbit in S^{2n}:
/// C(j, i) copies of S^{2n-1-i} for i = 1..j.
WedgeDecomposition orbit_complement_wedge(int n, int orbit_dim);

/// Reduced Betti numbers of U([n], k) by the homotopy pushout recursion,
/// starting from U([n], n) ~ S^{2n-2}. `lattice_index` is k in 1..n.
BettiVector orbit_complement_recursive(int n, int lattice_index);

/// Betti numbers of S^{2n} #_{T^k} S^{2n} transcribed from the published
/// table (n > 2) and the n = 2 table, case by case.
BettiVector conn_sum_betti_closed(int n, int k);

/// Betti numbers of S^{2n} #_{T^k} S^{2n} assembled from the Mayer-Vietoris
/// sequence of a contractible piece and the wedge (Sigma T^k) v U([n], n-k+1)
/// meeting in S^{2n-1}.
BettiVector conn_sum_betti_mv(int n, int k);

}  // namespace toruscalc
