#include <doctest.h>

#include <tuple>

#include "toruscalc/betti.hpp"
#include "toruscalc/polytope.hpp"

using namespace toruscalc;

namespace {

std::size_t count_dim(const FaceLattice& p, int d)
{
    std::size_t c = 0;
    for (const auto& f : p.faces())
        c += f.dim == d;
    return c;
}

std::vector<int> faces_of_dim(const FaceLattice& p, int d)
{
    std::vector<int> out;
    for (const auto& f : p.faces())
        if (f.dim == d)
            out.push_back(f.id);
    return out;
}

// h_i = sum_j (-1)^{i-j} C(n-j, i-j) f_{j-1} for the dual simplicial
// complex, whose (j-1)-faces are the faces of P of codimension j.
std::vector<long> h_from_f(const FaceLattice& p)
{
    const int n = p.ambient_dim();
    auto fm = [&](int j) { return static_cast<long>(count_dim(p, n - j)); };
    std::vector<long> h;
    for (int i = 0; i <= n; ++i) {
        long s = 0;
        for (int j = 0; j <= i; ++j)
            s += ((i - j) % 2 ? -1 : 1) * binomial(n - j, i - j) * fm(j);
        h.push_back(s);
    }
    return h;
}

void check_structure(const FaceLattice& p)
{
    CHECK(p.is_graded());
    CHECK(p.codimension_consistent());
    for (const auto& f : p.faces()) {
        CHECK(static_cast<int>(f.facets.size()) == p.ambient_dim() - f.dim);
        CHECK(std::is_sorted(f.facets.begin(), f.facets.end()));
    }
    // ids follow (dim, facet set, component)
    for (std::size_t i = 0; i + 1 < p.faces().size(); ++i) {
        const Face& a = p.faces()[i];
        const Face& b = p.faces()[i + 1];
        CHECK(a.id == static_cast<int>(i));
        CHECK(std::tie(a.dim, a.facets, a.component) < std::tie(b.dim, b.facets, b.component));
    }
}

}  // namespace

TEST_CASE("orbit space lattices")
{
    const FaceLattice q2 = orbit_space_lattice(2);
    CHECK(q2.vertex_count() == 2);
    CHECK(q2.facet_count() == 2);
    CHECK(count_dim(q2, 1) == 2);
    CHECK(count_dim(q2, 2) == 1);
    CHECK(q2.is_nice_corners());
    CHECK(q2.facets_connected());

    const FaceLattice q3 = orbit_space_lattice(3);
    CHECK(q3.f_vector() == std::vector<std::size_t>{2, 3, 3});
    CHECK(count_dim(q3, 3) == 1);
    // both vertices lie in every facet, told apart by component
    const auto v = q3.vertex_ids();
    REQUIRE(v.size() == 2);
    CHECK(q3.face(v[0]).facets == q3.face(v[1]).facets);
    CHECK(q3.face(v[0]).component != q3.face(v[1]).component);
    CHECK(q3.faces_with_facets({1, 2, 3}).size() == 2);

    const FaceLattice q1 = orbit_space_lattice(1);
    CHECK(q1.vertex_count() == 2);
    CHECK(q1.facet_count() == 1);
    CHECK_FALSE(q1.facets_connected());

    for (int n = 1; n <= 6; ++n)
        check_structure(orbit_space_lattice(n));
    CHECK_THROWS(orbit_space_lattice(0));
}

TEST_CASE("simplices and cubes")
{
    CHECK(simplex_lattice(2).f_vector() == std::vector<std::size_t>{3, 3});
    CHECK(cube_lattice(3).f_vector() == std::vector<std::size_t>{8, 12, 6});
    CHECK(simplex_lattice(3).vertices_simple());
    for (int n = 1; n <= 5; ++n) {
        const FaceLattice s = simplex_lattice(n);
        const FaceLattice c = cube_lattice(n);
        check_structure(s);
        check_structure(c);
        CHECK(s.is_simple_polytope());
        CHECK(c.is_simple_polytope());
        CHECK(s.vertices_simple());
        CHECK(c.vertices_simple());
        CHECK(s.vertex_count() == static_cast<std::size_t>(n + 1));
        CHECK(c.vertex_count() == (std::size_t{1} << n));
        CHECK(h_vector(s) == h_from_f(s));
        CHECK(h_vector(c) == h_from_f(c));
        // boundary is a sphere S^{n-1}
        CHECK(euler_char_of_boundary(s) == (n % 2 ? 2 : 0));
        CHECK(euler_char_of_boundary(c) == (n % 2 ? 2 : 0));
    }
    CHECK(h_vector(cube_lattice(3)) == std::vector<long>{1, 3, 3, 1});
    CHECK(h_vector(simplex_lattice(4)) == std::vector<long>{1, 1, 1, 1, 1});
    CHECK_THROWS(cube_lattice(0));
}

TEST_CASE("vertex connected sums")
{
    const FaceLattice d2 = simplex_lattice(2);
    const int v = d2.vertex_ids().front();
    const auto& fv = d2.face(v).facets;
    std::map<int, int> pairing;
    for (int f : fv)
        pairing[f] = f;
    const FaceLattice quad = vertex_connected_sum(d2, v, d2, v, pairing);
    CHECK(quad.facet_count() == 4);
    CHECK(quad.vertex_count() == 4);
    CHECK(quad.is_simple_polytope());
    CHECK(quad.vertices_simple());
    check_structure(quad);
    CHECK(h_vector(quad) == h_from_f(quad));

    const FaceLattice d3 = simplex_lattice(3);
    const int w = d3.vertex_ids().front();
    std::map<int, int> p3;
    for (int f : d3.face(w).facets)
        p3[f] = f;
    const FaceLattice bi = vertex_connected_sum(d3, w, d3, w, p3);
    CHECK(bi.facet_count() == 5);
    CHECK(bi.vertex_count() == 6);
    CHECK(bi.vertices_simple());

    // Gluing a triangle at a corner of a square truncates that corner: a
    // pentagon, not a square.
    const FaceLattice sq = cube_lattice(2);
    const int sv = sq.vertex_ids().front();
    std::map<int, int> ps;
    for (std::size_t i = 0; i < 2; ++i)
        ps[sq.face(sv).facets[i]] = fv[i];
    const FaceLattice pent = vertex_connected_sum(sq, sv, d2, v, ps);
    CHECK(pent.facet_count() == 5);
    CHECK(pent.vertex_count() == 5);
    CHECK(pent.f_vector() == std::vector<std::size_t>{5, 5});

    // errors
    CHECK_THROWS_AS(vertex_connected_sum(d2, d2.top_face(), d2, v, pairing), SurgeryError);
    std::map<int, int> bad = pairing;
    bad.erase(bad.begin());
    CHECK_THROWS_AS(vertex_connected_sum(d2, v, d2, v, bad), SurgeryError);
}

TEST_CASE("face connected sums of orbit spaces")
{
    const FaceLattice q3 = orbit_space_lattice(3);
    const int two_face = faces_of_dim(q3, 2).front();
    const FaceLattice c = face_connected_sum(q3, q3, ordered_surgery(q3, two_face, q3, two_face));
    CHECK(c.vertex_count() == 4);
    CHECK(c.facet_count() == 5);
    CHECK_FALSE(c.is_simple_polytope());
    CHECK(c.is_nice_corners());

    const FaceLattice inner = face_connected_sum(q3, q3, ordered_surgery(q3, q3.top_face(), q3, q3.top_face()));
    CHECK(inner.vertex_count() == 4);
    CHECK(inner.facet_count() == 6);
    CHECK(inner.hole_count() == 1);

    const FaceLattice q2 = orbit_space_lattice(2);
    const int edge = faces_of_dim(q2, 1).front();
    const FaceLattice e = face_connected_sum(q2, q2, ordered_surgery(q2, edge, q2, edge));
    CHECK(e.vertex_count() == 4);
    CHECK(e.facet_count() == 3);

    // mismatched face dimensions
    SurgerySpec bad;
    bad.left_face = two_face;
    bad.right_face = faces_of_dim(q3, 1).front();
    CHECK_THROWS_AS(face_connected_sum(q3, q3, bad), SurgeryError);
    // incomplete pairing
    SurgerySpec part = ordered_surgery(q3, faces_of_dim(q3, 1).front(), q3, faces_of_dim(q3, 1).front());
    part.facet_pairing.erase(part.facet_pairing.begin());
    CHECK_THROWS_AS(face_connected_sum(q3, q3, part), SurgeryError);
}

TEST_CASE("surgery grid on Q3 and Q4")
{
    for (int n : {3, 4}) {
        const FaceLattice q = orbit_space_lattice(n);
        for (int k = 1; k <= n; ++k)
            for (int lf : faces_of_dim(q, k))
                for (int rf : faces_of_dim(q, k)) {
                    CAPTURE(n);
                    CAPTURE(k);
                    const FaceLattice s = face_connected_sum(q, q, ordered_surgery(q, lf, q, rf));
                    CHECK(s.vertex_count() == 4);
                    CHECK(s.is_graded());
                    CHECK(s.codimension_consistent());
                    CHECK(s.is_nice_corners());
                    CHECK_FALSE(s.is_simple_polytope());
                    if (k < n) {
                        CHECK(static_cast<int>(s.facet_count()) == 2 * n - (n - k));
                        CHECK(s.hole_count() == 0);
                    } else {
                        CHECK(static_cast<int>(s.facet_count()) == 2 * n);
                        CHECK(s.hole_count() == 1);
                    }
                }
    }
}

TEST_CASE("polytopes with holes")
{
    CHECK(holes_betti(3, 1) == BettiVector{1, 0, 1, 0});
    CHECK(holes_betti(2, 2) == BettiVector{1, 2});
    for (int n = 2; n <= 6; ++n) {
        CHECK(holes_betti(n, 0) == BettiVector{1});
        // H^2 is nonzero only for n = 3
        CHECK((holes_betti(n, 2)[2] != 0) == (n == 3));
    }
}
