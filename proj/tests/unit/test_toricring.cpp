#include <doctest.h>

#include "support/generators.hpp"
#include "toruscalc/cdga_models.hpp"
#include "toruscalc/charfun.hpp"
#include "toruscalc/polytope.hpp"
#include "toruscalc/toricring.hpp"

using namespace toruscalc;
using toruscalc::testing::Gen;

namespace {

CharacteristicFunction cp2_xi()
{
    return CharacteristicFunction::from_ints(2, {{0, {1, 0}}, {1, {0, 1}}, {2, {-1, -1}}});
}

FiniteGradedRing cp2()
{
    return quasitoric_ring(simplex_lattice(2), cp2_xi());
}

BettiVector even(const std::vector<long>& h)
{
    BettiVector b = BettiVector::zero(2 * (static_cast<int>(h.size()) - 1));
    for (std::size_t i = 0; i < h.size(); ++i)
        b.set(2 * static_cast<int>(i), h[i]);
    return b;
}

SparseVector e(const FiniteGradedRing& r, const std::string& label)
{
    return basis_vector(r.algebra().index(label));
}

SparseVector mu(const FiniteGradedRing& r)
{
    return basis_vector(*r.fundamental_class());
}

// Ranks of all pairing matrices, a cheap isomorphism invariant.
std::vector<std::size_t> pairing_ranks(const FiniteGradedRing& r)
{
    std::vector<std::size_t> out;
    for (int p = 0; p <= r.top_degree(); ++p)
        out.push_back(rank(pairing_matrix(r, p)));
    return out;
}

// Same structure constants after renaming x -> prefix + x (unit and mu kept).
bool same_under_prefix(const FiniteGradedRing& m, const FiniteGradedRing& r, const std::string& prefix)
{
    const Cdga& x = m.algebra();
    const Cdga& y = r.algebra();
    if (x.dimension() != y.dimension())
        return false;
    auto image = [&](int i) {
        if (i == m.unit_index())
            return r.unit_index();
        if (i == *m.fundamental_class())
            return *r.fundamental_class();
        return y.index(prefix + x.label(i));
    };
    for (int i = 0; i < x.dimension(); ++i)
        for (int j = 0; j < x.dimension(); ++j) {
            SparseVector mapped;
            for (const auto& [t, c] : x.product(i, j))
                mapped[image(t)] = c;
            if (mapped != y.product(image(i), image(j)))
                return false;
        }
    return true;
}

}  // namespace

TEST_CASE("small quasitoric rings")
{
    const FiniteGradedRing r = cp2();
    CHECK(betti_of_ring(r) == BettiVector{1, 0, 1, 0, 1});
    const auto& deg2 = r.algebra().indices_of_degree(2);
    REQUIRE(deg2.size() == 1);
    const SparseVector x = basis_vector(deg2[0]);
    CHECK(r.multiply(x, x) == mu(r));
    CHECK(pairing_matrix(r, 2)(0, 0) == 1);
    CHECK(r.augmentation(r.algebra().unit()) == 1);
    CHECK(r.augmentation(x) == 0);

    const FiniteGradedRing sq = quasitoric_ring(
        cube_lattice(2), CharacteristicFunction::from_ints(2, {{0, {1, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {0, 1}}}));
    CHECK(betti_of_ring(sq) == BettiVector{1, 0, 2, 0, 1});
    CHECK(has_nondegenerate_pairing(sq));

    const FiniteGradedRing cp1 = quasitoric_ring(simplex_lattice(1), CharacteristicFunction::from_ints(1, {{0, {1}}, {1, {-1}}}));
    CHECK(betti_of_ring(cp1) == BettiVector{1, 0, 1});

    const RingPresentation pres = ring_presentation(cube_lattice(2), CharacteristicFunction::from_ints(
                                                                         2, {{0, {1, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {0, 1}}}));
    CHECK(pres.linear_relations.size() == 2);
    CHECK(pres.minimal_non_faces == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    // invalid input
    CHECK_THROWS(quasitoric_ring(simplex_lattice(2),
                                 CharacteristicFunction::from_ints(2, {{0, {1, 0}}, {1, {0, 1}}, {2, {1, 2}}})));
    const FaceLattice q2 = orbit_space_lattice(2);
    CHECK_THROWS(quasitoric_ring(q2, standard_orbit_characteristic(2)));
}

TEST_CASE("quasitoric betti numbers follow the h-vector for any valid xi")
{
    Gen gen(31);
    const std::vector<FaceLattice> lattices{simplex_lattice(2), cube_lattice(2), simplex_lattice(3), cube_lattice(3)};
    for (const FaceLattice& p : lattices) {
        const int n = p.ambient_dim();
        int found = 0;
        for (int trial = 0; trial < 4000 && found < 5; ++trial) {
            CharacteristicFunction xi;
            xi.target_rank = n;
            for (int f : p.facets()) {
                IntVector v(static_cast<std::size_t>(n));
                do {
                    for (auto& c : v)
                        c = gen.uniform(-1, 1);
                } while (!is_primitive(v));
                xi.assignment[f] = v;
            }
            if (!validate_characteristic(p, xi).ok)
                continue;
            ++found;
            const FiniteGradedRing r = quasitoric_ring(p, xi);
            CHECK(betti_of_ring(r) == even(h_vector(p)));
            CHECK(has_nondegenerate_pairing(r));
            CHECK(check_axioms(r.algebra()).ok);
        }
        CAPTURE(n);
        CHECK(found >= 2);
    }
}

TEST_CASE("spheres and connected sums")
{
    const FiniteGradedRing s4 = sphere_ring(4);
    CHECK(betti_of_ring(s4) == BettiVector{1, 0, 0, 0, 1});
    CHECK(has_nondegenerate_pairing(s4));

    const FiniteGradedRing c = cp2();
    CHECK(same_under_prefix(c, connected_sum_ring(s4, c), "R."));
    CHECK(same_under_prefix(c, connected_sum_ring(c, s4), "L."));

    const FiniteGradedRing sum = connected_sum_ring(c, c);
    CHECK(betti_of_ring(sum) == BettiVector{1, 0, 2, 0, 1});
    const SparseVector x = e(sum, "L.v0");
    const SparseVector y = e(sum, "R.v0");
    CHECK(sum.multiply(x, x) == mu(sum));
    CHECK(sum.multiply(y, y) == mu(sum));
    CHECK(sum.multiply(x, y).empty());
    CHECK(has_nondegenerate_pairing(sum));

    CHECK_THROWS_AS(connected_sum_ring(c, sphere_ring(6)), RingError);
}

TEST_CASE("connected sums are additive, commutative and associative up to invariants")
{
    const FiniteGradedRing sq = quasitoric_ring(
        cube_lattice(2), CharacteristicFunction::from_ints(2, {{0, {1, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {0, 1}}}));
    const std::vector<FiniteGradedRing> rings{cp2(), sq, sphere_ring(4), connected_sum_ring(cp2(), sq)};
    for (const auto& a : rings)
        for (const auto& b : rings) {
            const FiniteGradedRing ab = connected_sum_ring(a, b);
            const BettiVector ba = betti_of_ring(a);
            const BettiVector bb = betti_of_ring(b);
            const BettiVector bab = betti_of_ring(ab);
            for (int i = 1; i < 4; ++i)
                CHECK(bab[i] == ba[i] + bb[i]);
            CHECK(has_nondegenerate_pairing(ab));
            CHECK(betti_of_ring(connected_sum_ring(b, a)) == bab);
            CHECK(pairing_ranks(connected_sum_ring(b, a)) == pairing_ranks(ab));
            for (const auto& c : rings) {
                const FiniteGradedRing l = connected_sum_ring(ab, c);
                const FiniteGradedRing r = connected_sum_ring(a, connected_sum_ring(b, c));
                CHECK(betti_of_ring(l) == betti_of_ring(r));
                CHECK(pairing_ranks(l) == pairing_ranks(r));
            }
        }
}

TEST_CASE("equivariant connected sums")
{
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            const FiniteGradedRing s = sphere_ring(2 * n);
            const FiniteGradedRing r = equivariant_connected_sum_ring(s, s, n, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(betti_of_ring(r) == conn_sum_betti_mv(n, k));
            CHECK(has_nondegenerate_pairing(r));
            CHECK(same_under_prefix(ring_from_cdga(model_A(n, k), "mu"), r, "R."));
        }

    const FiniteGradedRing c = cp2();
    const FiniteGradedRing r = equivariant_connected_sum_ring(c, c, 2, 1);
    CHECK(betti_of_ring(r) == BettiVector{1, 0, 4, 0, 1});
    CHECK(has_nondegenerate_pairing(r));
    const SparseVector a = e(r, "R.alpha{1}");
    const SparseVector ad = e(r, "R.alpha#{1}");
    CHECK(r.multiply(a, ad) == scaled(mu(r), -1));
    CHECK(r.multiply(e(r, "L.L.v0"), e(r, "L.L.v0")) == mu(r));
    CHECK(r.multiply(e(r, "L.R.v0"), e(r, "L.R.v0")) == mu(r));
    CHECK(r.multiply(e(r, "L.L.v0"), a).empty());

    // two successive equivariant sums of three rings
    const FiniteGradedRing l = equivariant_connected_sum_ring(equivariant_connected_sum_ring(c, c, 2, 1), c, 2, 2);
    const FiniteGradedRing rr = equivariant_connected_sum_ring(c, equivariant_connected_sum_ring(c, c, 2, 1), 2, 2);
    CHECK(betti_of_ring(l) == betti_of_ring(rr));
    // middle ranks add: 4 + 1 from the sums, (1, 4, 1) from A(2, 2)
    CHECK(betti_of_ring(l) == BettiVector{1, 1, 9, 1, 1});
    CHECK(pairing_ranks(l) == pairing_ranks(rr));
}

TEST_CASE("pairing matrices")
{
    const FiniteGradedRing a = ring_from_cdga(model_A(3, 2), "mu");
    // alpha_I in degree |I|+1 against alpha#_J in degree 5-|J|
    for (int p : {2, 3}) {
        const RatMatrix m = pairing_matrix(a, p);
        const auto& rows = a.algebra().indices_of_degree(p);
        const auto& cols = a.algebra().indices_of_degree(6 - p);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const std::string& li = a.algebra().label(rows[i]);
                const std::string& lj = a.algebra().label(cols[j]);
                const bool dual = li.starts_with("alpha{") && lj == "alpha#" + li.substr(5);
                const bool dual_rev = lj.starts_with("alpha{") && li == "alpha#" + lj.substr(5);
                const int swap = (p * (6 - p)) % 2 ? -1 : 1;
                CHECK(m(i, j) == (dual ? -1 : dual_rev ? -swap : 0));
            }
    }
    const RatMatrix s = pairing_matrix(sphere_ring(4), 0);
    CHECK(s.rows() == 1);
    CHECK(s(0, 0) == 1);
}
