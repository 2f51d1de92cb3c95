#include <doctest.h>

#include <set>

#include "toruscalc/cdga_models.hpp"
#include "toruscalc/registry.hpp"
#include "toruscalc/toricring.hpp"

using namespace toruscalc;

namespace {

std::set<std::string> labels(const Cdga& x)
{
    std::set<std::string> out;
    for (int i = 0; i < x.dimension(); ++i)
        out.insert(x.label(i));
    return out;
}

struct Pairs {
    const SurgeryModels& m;

    SparseVector bprime(const std::string& e_label, const std::string& b_label) const
    {
        return tensor_element(*m.Eprime, *m.B, basis_vector(m.Eprime->index(e_label)),
                              basis_vector(m.B->index(b_label)));
    }
    SparseVector pair(const SparseVector& x, const SparseVector& y) const
    {
        return pair_element(*m.Bprime, x, y);
    }
    SparseVector right(const std::string& b_label) const
    {
        return pair({}, basis_vector(m.B->index(b_label)));
    }
    SparseVector in_d(const SparseVector& p) const
    {
        const auto c = coordinates_in(m.d_inclusion, p);
        REQUIRE(c);
        return *c;
    }
};

std::string full_word(int k)
{
    std::string s;
    for (int i = 1; i <= k; ++i)
        s += "a" + std::to_string(i);
    return s + "b'";
}

const SurgeryModels& models(int n, int k)
{
    static std::map<std::pair<int, int>, SurgeryModels> cache;
    auto it = cache.find({n, k});
    if (it == cache.end())
        it = cache.emplace(std::pair{n, k}, build_surgery_models(n, k)).first;
    return it->second;
}

}  // namespace

TEST_CASE("E' bases")
{
    const CdgaPtr e1 = eprime_model(1);
    CHECK(labels(*e1) == std::set<std::string>{"1", "a1", "da1"});
    const CdgaPtr e2 = eprime_model(2);
    CHECK(e2->dimension() == 7);
    CHECK(labels(*e2) == std::set<std::string>{"1", "a1", "a2", "a1a2", "da1", "da2", "a2da1"});
    for (int k = 1; k <= 4; ++k) {
        const EprimeConstruction c = eprime_construction(k);
        CAPTURE(k);
        CHECK(c.ideal_is_differential);
        CHECK(c.ideal_acyclic);
        CHECK(c.basis_matches);
        CHECK(check_axioms(*c.quotient.algebra).ok);
        CHECK(cohomology_betti(*c.quotient.algebra) == BettiVector{1});
    }
    const CdgaPtr e3 = eprime_model(3);
    for (int i : e3->indices_of_degree(2))
        for (int j : e3->indices_of_degree(2))
            if (e3->label(i).starts_with("da") && e3->label(j).starts_with("da"))
                CHECK(e3->product(i, j).empty());
}

TEST_CASE("boundary and complement models")
{
    const CdgaPtr c = boundary_model(3, 2);
    CHECK(c->dimension() == 8);
    CHECK(c->degree(c->index("b")) == 3);
    CHECK(c->product(c->index("b"), c->index("b")).empty());
    CHECK(cohomology_betti(*c) == BettiVector{1, 2, 1, 1, 2, 1});
    const int b = c->index("b");
    const int a1 = c->index("a1");
    CHECK(c->product(b, a1) == scaled(c->product(a1, b), -1));

    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            if (2 * n - k - 1 < 1)
                continue;
            const CdgaPtr bm = complement_model(n, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(bm->dimension() == 2 + (1 << k));
            CHECK(check_axioms(*bm).ok);
            CHECK(bm->d(basis_vector(bm->index(full_word(k)))) == basis_vector(bm->index("c")));
            CHECK(bm->differential(bm->index("b'")).empty());
            BettiVector w = orbit_complement_wedge(n, k).reduced_betti();
            w.add(0, 1);
            CHECK(cohomology_betti(*bm) == w);
        }
}

TEST_CASE("phi and phi'")
{
    const int n = 3;
    const int k = 2;
    Morphism f = phi(n, k);
    CHECK(verify_morphism(f).ok);
    const CdgaPtr bm = f.source;
    const CdgaPtr cm = f.target;
    CHECK(f.apply(basis_vector(bm->index("a1b'"))) == basis_vector(cm->index("a1b")));
    CHECK(f.apply(basis_vector(bm->index("c"))).empty());

    Morphism g = phi_prime(n, k);
    CHECK(verify_morphism(g).ok);
    CHECK(g.surjective);
}

TEST_CASE("pullback and the ideal J")
{
    const SurgeryModels& m = models(3, 2);
    const Pairs p{m};
    const SparseVector cc_left = p.bprime("1", "c");
    const SparseVector c0 = p.pair(cc_left, {});
    const SparseVector zc = p.right("c");
    const SparseVector cc = p.pair(cc_left, basis_vector(m.B->index("c")));
    CHECK(coordinates_in(m.d_inclusion, m.P->unit()));
    CHECK(coordinates_in(m.d_inclusion, c0));
    CHECK(coordinates_in(m.d_inclusion, zc));
    for (const auto& e : m.gen_D)
        CHECK(coordinates_in(m.d_inclusion, e.vector));

    // d(b'a1a2, b'a1a2) = (c, c), and (c, c) lies in J
    const SparseVector top = p.pair(p.bprime("1", "a1a2b'"), basis_vector(m.B->index("a1a2b'")));
    CHECK(m.P->d(top) == cc);
    const SparseVector cc_d = p.in_d(cc);
    const int deg = 2 * m.n;
    Subspace j(static_cast<std::size_t>(m.D->dimension_in_degree(deg)));
    for (const auto& v : m.J.span.at(deg))
        j.add(m.D->to_dense(v, deg));
    CHECK(j.contains(m.D->to_dense(cc_d, deg)));

    CHECK(m.J.closed);
    CHECK(m.J.acyclic);
    CHECK(m.quotient.projection.apply(cc_d).empty());
    CHECK(m.quotient.projection.apply(m.D->unit()) == m.DJ->unit());
    CHECK(cohomology_betti(*m.DJ) == conn_sum_betti_mv(3, 2));
    CHECK(m.DJ->dimension() == 1 << (m.k + 1));
}

TEST_CASE("the printed J' list is not closed")
{
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}}) {
        const SurgeryModels& m = models(n, k);
        const ModelVerification v = verify_models(m, {"ideal"});
        for (const auto& c : v.checks) {
            CAPTURE(c.name);
            if (c.name == "closure of printed J' list = its span") {
                CHECK_FALSE(c.ok);
                CHECK(c.detail.find("escapes in degree") != std::string::npos);
                CHECK(find_known_check_failure(c.group, c.name, k));
            } else if (c.name == "H(printed J) = 0") {
                CHECK(c.ok == (k == 1));
            } else {
                CHECK(c.ok);
            }
        }
    }
}

TEST_CASE("the model A")
{
    const CdgaPtr a = model_A(3, 2);
    CHECK(a->dimension() == 8);
    CHECK(check_axioms(*a).ok);
    CHECK(a->has_zero_differential());
    CHECK(cohomology_betti(*a) == BettiVector{1, 0, 2, 2, 2, 0, 1});
    const SparseVector minus_mu = scaled(basis_vector(a->index("mu")), -1);
    const auto subsets = all_subsets(2);
    for (const auto& i : subsets) {
        if (i.empty())
            continue;
        for (const auto& j : subsets) {
            if (j.empty())
                continue;
            const int x = a->index(alpha_label(i));
            CHECK(a->product(x, a->index(alpha_dual_label(j))) == (i.mask() == j.mask() ? minus_mu : SparseVector{}));
            CHECK(a->product(x, a->index(alpha_label(j))).empty());
        }
    }
    CHECK(alpha_label(SubsetIndex{{1}}) == "alpha{1}");

    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            const CdgaPtr m = model_A(n, k);
            CHECK(m->dimension() == 1 << (k + 1));
            CHECK(check_axioms(*m).ok);
            CHECK(has_nondegenerate_pairing(ring_from_cdga(m, "mu")));
        }
}

TEST_CASE("pi xi and eta")
{
    const SurgeryModels& m = models(3, 2);
    const CdgaPtr a = m.A;
    for (const auto& i : all_subsets(2)) {
        if (i.empty())
            continue;
        const SparseVector x = m.pi_xi.apply(basis_vector(a->index(alpha_label(i))));
        const SparseVector y = m.pi_xi.apply(basis_vector(a->index(alpha_dual_label(i))));
        CHECK(m.DJ->multiply(x, y) == scaled(m.pi_xi.apply(basis_vector(a->index("mu"))), -1));
    }
    CHECK(m.pi_xi.chain_map);
    CHECK(m.pi_xi.algebra_map);
    CHECK(is_quasi_iso(m.pi_xi));

    const Pairs p{m};
    CHECK(m.d_inclusion.inclusion.apply(m.eta.apply(basis_vector(a->index("mu")))) == p.right("c"));
    CHECK(m.eta.injective);
    CHECK(m.eta.chain_map);
    CHECK(graded_dimensions(m.dbar).at(2 * m.n) == 2);

    const SurgeryModels& m33 = models(3, 3);
    CHECK(subcomplex_betti(*m33.D, m33.dbar) == cohomology_betti(*m33.A));

    const SurgeryModels& m21 = models(2, 1);
    CHECK(cohomology_betti(*m21.A) == cohomology_betti(*m21.DJ));
}

TEST_CASE("model verification over the grid")
{
    const std::set<std::string> groups(model_check_groups().begin(), model_check_groups().end());
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2}}) {
        const ModelVerification v = verify_models(models(n, k), groups);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(v.h_D == conn_sum_betti_mv(n, k));
        CHECK(v.h_DJ == v.h_D);
        CHECK(v.h_A == v.h_D);
        CHECK(v.h_Dbar == v.h_A);
        for (const auto& c : v.checks) {
            CAPTURE(c.group);
            CAPTURE(c.name);
            CAPTURE(c.detail);
            if (!c.ok)
                CHECK(find_known_check_failure(c.group, c.name, k));
        }
    }
}
