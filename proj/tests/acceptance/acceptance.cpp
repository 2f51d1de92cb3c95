// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "toruscalc/betti.hpp"
#include "toruscalc/cdga_models.hpp"
#include "toruscalc/charfun.hpp"
#include "toruscalc/polytope.hpp"
#include "toruscalc/registry.hpp"
#include "toruscalc/toricring.hpp"

using namespace toruscalc;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

BettiVector model_betti(int n, int k)
{
    return cohomology_betti(*model_A(n, k));
}

std::string nk(int n, int k)
{
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

Outcome betti_agreement(double& seconds)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            const BettiVector c = conn_sum_betti_closed(n, k);
            const BettiVector m = conn_sum_betti_mv(n, k);
            const BettiVector a = model_betti(n, k);
            o.expect(c == m && m == a, nk(n, k) + " closed " + c.to_string() + " mv " + m.to_string() + " model " +
                                           a.to_string());
        }
    o.expect(conn_sum_betti_closed(3, 2) == BettiVector{1, 0, 2, 2, 2, 0, 1}, "(3,2) spot value");
    o.expect(conn_sum_betti_closed(3, 3) == BettiVector{1, 0, 4, 6, 4, 0, 1}, "(3,3) spot value");
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(seconds < 60.0, "runtime " + std::to_string(seconds) + " s");
    return o;
}

Outcome n2_row()
{
    Outcome o;
    const BettiVector r21{1, 0, 2, 0, 1};
    o.expect(conn_sum_betti_closed(2, 1) == r21 && conn_sum_betti_mv(2, 1) == r21 && model_betti(2, 1) == r21,
             "(2,1) disagreement");
    const BettiVector closed = conn_sum_betti_closed(2, 2);
    const BettiVector mv = conn_sum_betti_mv(2, 2);
    const BettiVector model = model_betti(2, 2);
    o.expect(closed == BettiVector{1, 1, 2, 1, 1}, "(2,2) closed " + closed.to_string());
    o.expect(mv == BettiVector{1, 1, 4, 1, 1} && model == mv, "(2,2) mv " + mv.to_string() + " model " +
                                                                  model.to_string());
    const auto d = find_known_discrepancy(2, 2);
    o.expect(d && d->closed == closed && d->reference == mv, "(2,2) not registered as a discrepancy");
    return o;
}

Outcome euler_vs_vertices()
{
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
        const FaceLattice q = orbit_space_lattice(n);
        const auto xi = standard_orbit_characteristic(n);
        for (int k = 1; k <= n; ++k) {
            int face = -1;
            for (const auto& f : q.faces())
                if (f.dim == k) {
                    face = f.id;
                    break;
                }
            const SurgerySpec spec = ordered_surgery(q, face, q, face);
            const FaceLattice sum = face_connected_sum(q, q, spec);
            const TorusManifoldDescriptor desc(sum, merge_characteristic(q, xi, q, xi, spec));
            const long chi = conn_sum_betti_mv(n, k).euler_characteristic();
            o.expect(chi == 4 && static_cast<long>(fixed_point_count(desc)) == chi, nk(n, k) + " chi " +
                                                                                         std::to_string(chi));
        }
    }
    return o;
}

Outcome poincare()
{
    Outcome o;
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            o.expect(conn_sum_betti_mv(n, k).is_poincare_symmetric(2 * n), nk(n, k) + " mv");
            o.expect(model_betti(n, k).is_poincare_symmetric(2 * n), nk(n, k) + " model");
        }
    return o;
}

Outcome wedge_recursion()
{
    Outcome o;
    for (int n = 2; n <= 6; ++n)
        for (int j = 1; j <= n; ++j)
            o.expect(orbit_complement_wedge(n, j).reduced_betti() == orbit_complement_recursive(n, n - j + 1),
                     nk(n, j));
    return o;
}

Outcome cdga_grid(double& seconds)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::set<std::string> groups(model_check_groups().begin(), model_check_groups().end());
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2}}) {
        const ModelVerification v = verify_models(build_surgery_models(n, k), groups);
        for (const auto& c : v.checks)
            o.expect(c.ok, nk(n, k) + " " + c.group + ": " + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]"));
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(seconds < 300.0, "runtime " + std::to_string(seconds) + " s");
    return o;
}

CharacteristicFunction simplex_xi(int n, bool flipped)
{
    std::map<int, std::vector<long>> v;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        v[i] = e;
    }
    v[n] = std::vector<long>(static_cast<std::size_t>(n), flipped ? 1 : -1);
    return CharacteristicFunction::from_ints(n, v);
}

CharacteristicFunction cube_xi(int n, bool twisted)
{
    std::map<int, std::vector<long>> v;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        v[2 * i] = e;
        v[2 * i + 1] = e;
    }
    if (twisted)
        v[1] = std::vector<long>(static_cast<std::size_t>(n), 1);
    return CharacteristicFunction::from_ints(n, v);
}

BettiVector even(const std::vector<long>& h)
{
    BettiVector b = BettiVector::zero(2 * (static_cast<int>(h.size()) - 1));
    for (std::size_t i = 0; i < h.size(); ++i)
        b.set(2 * static_cast<int>(i), h[i]);
    return b;
}

Outcome quasitoric()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        const FaceLattice s = simplex_lattice(n);
        BettiVector ones = BettiVector::zero(2 * n);
        for (int i = 0; i <= n; ++i)
            ones.set(2 * i, 1);
        for (bool flipped : {false, true}) {
            const auto xi = simplex_xi(n, flipped);
            o.expect(validate_characteristic(s, xi).ok, "simplex xi invalid");
            const FiniteGradedRing r = quasitoric_ring(s, xi);
            o.expect(betti_of_ring(r) == ones && betti_of_ring(r) == even(h_vector(s)) && has_nondegenerate_pairing(r),
                     "simplex n=" + std::to_string(n) + " " + betti_of_ring(r).to_string());
        }
    }
    for (int n : {2, 3}) {
        const FaceLattice q = cube_lattice(n);
        const BettiVector expect = n == 2 ? BettiVector{1, 0, 2, 0, 1} : BettiVector{1, 0, 3, 0, 3, 0, 1};
        for (bool twisted : {false, true}) {
            const auto xi = cube_xi(n, twisted);
            o.expect(validate_characteristic(q, xi).ok, "cube xi invalid");
            const FiniteGradedRing r = quasitoric_ring(q, xi);
            o.expect(betti_of_ring(r) == expect && even(h_vector(q)) == expect && has_nondegenerate_pairing(r),
                     "cube n=" + std::to_string(n) + " " + betti_of_ring(r).to_string());
        }
    }
    return o;
}

Outcome connected_sums()
{
    Outcome o;
    const FiniteGradedRing cp2 = quasitoric_ring(simplex_lattice(2), simplex_xi(2, false));
    const FiniteGradedRing s4 = sphere_ring(4);
    for (const FiniteGradedRing& r : {connected_sum_ring(s4, cp2), connected_sum_ring(cp2, s4)}) {
        const auto& deg2 = r.algebra().indices_of_degree(2);
        bool unit = betti_of_ring(r) == betti_of_ring(cp2) && deg2.size() == 1;
        if (unit) {
            const SparseVector x = basis_vector(deg2[0]);
            unit = r.multiply(x, x) == basis_vector(*r.fundamental_class());
        }
        o.expect(unit, "sphere ring is not a unit");
    }

    const FiniteGradedRing sum = connected_sum_ring(cp2, cp2);
    const Cdga& x = sum.algebra();
    const SparseVector mu = basis_vector(*sum.fundamental_class());
    const auto& deg2 = x.indices_of_degree(2);
    bool products = deg2.size() == 2;
    if (products) {
        const SparseVector a = basis_vector(deg2[0]);
        const SparseVector b = basis_vector(deg2[1]);
        products = sum.multiply(a, a) == mu && sum.multiply(b, b) == mu && sum.multiply(a, b).empty();
    }
    o.expect(betti_of_ring(sum) == BettiVector{1, 0, 2, 0, 1}, "R(CP2,CP2) betti " + betti_of_ring(sum).to_string());
    o.expect(products, "R(CP2,CP2) products");
    o.expect(has_nondegenerate_pairing(sum), "R(CP2,CP2) pairing");

    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            const FiniteGradedRing s = sphere_ring(2 * n);
            const FiniteGradedRing r = equivariant_connected_sum_ring(s, s, n, k);
            o.expect(betti_of_ring(r) == conn_sum_betti_mv(n, k) && has_nondegenerate_pairing(r),
                     "R(S,S," + std::to_string(n) + "," + std::to_string(k) + ") " + betti_of_ring(r).to_string());
        }
    return o;
}

void report(int id, const std::string& title, const Outcome& o, const std::string& extra, bool& all)
{
    std::printf("%s %d %s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), extra.c_str());
    for (const auto& note : o.notes)
        std::printf("    %s\n", note.c_str());
    all = all && o.ok;
}

std::string secs(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2f s)", s);
    return buf;
}

}  // namespace

int main()
{
    bool all = true;
    double t1 = 0;
    double t6 = 0;
    const Outcome c1 = betti_agreement(t1);
    report(1, "betti agreement closed = mv = H(A), 3 <= n <= 6", c1, secs(t1), all);
    report(2, "n = 2 row and the registered (2,2) discrepancy", n2_row(), "", all);
    report(3, "euler characteristic = fixed points = 4, n <= 6", euler_vs_vertices(), "", all);
    report(4, "poincare symmetry of mv and model outputs", poincare(), "", all);
    report(5, "wedge = pushout recursion, 2 <= n <= 6", wedge_recursion(), "", all);
    const Outcome c6 = cdga_grid(t6);
    report(6, "cdga models, ideals and maps over the grid", c6, secs(t6), all);
    report(7, "quasitoric rings", quasitoric(), "", all);
    report(8, "connected sum rings", connected_sums(), "", all);
    return all ? 0 : 1;
}
