#include "toruscalc/toricring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "toruscalc/cdga_models.hpp"

namespace toruscalc {

FiniteGradedRing::FiniteGradedRing(CdgaPtr algebra, std::optional<int> fundamental_class)
    : algebra_(std::move(algebra)), fundamental_(fundamental_class)
{
    if (!algebra_->has_zero_differential())
        throw RingError("FiniteGradedRing: differential must vanish");
    const auto& u = algebra_->unit();
    if (u.size() != 1 || u.begin()->second != 1)
        throw RingError("FiniteGradedRing: unit must be a basis element");
    unit_ = u.begin()->first;
    if (fundamental_ && algebra_->degree(*fundamental_) != algebra_->max_degree())
        throw RingError("FiniteGradedRing: fundamental class must lie in the top degree");
}

Rational FiniteGradedRing::augmentation(const SparseVector& x) const
{
    auto it = x.find(unit_);
    return it == x.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------- quasitoric rings

namespace {

using Monomial = std::vector<int>;  // exponent per facet position

std::string monomial_label(const Monomial& m, const std::vector<int>& facets)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "v" + std::to_string(facets[i]);
        if (m[i] > 1)
            s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_of_degree(std::size_t vars, int degree)
{
    std::vector<Monomial> out;
    Monomial m(vars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == vars) {
            m[i] = left;
            out.push_back(m);
            m[i] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[i] = e;
            rec(i + 1, left - e);
        }
        m[i] = 0;
    };
    if (vars == 0) {
        if (degree == 0)
            out.push_back(m);
        return out;
    }
    rec(0, degree);
    return out;
}

}  // namespace

RingPresentation ring_presentation(const FaceLattice& p, const CharacteristicFunction& xi)
{
    RingPresentation r;
    r.facets = p.facets();
    std::set<std::vector<int>> face_sets;
    for (const auto& f : p.faces())
        face_sets.insert(f.facets);
    auto is_face = [&](const std::vector<int>& s) {
        for (const auto& f : face_sets)
            if (std::includes(f.begin(), f.end(), s.begin(), s.end()))
                return true;
        return false;
    };
    // Minimal non-faces: every proper subset is a face.
    const std::size_t m = r.facets.size();
    for (std::size_t size = 1; size <= std::min<std::size_t>(m, 20); ++size) {
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<int> s;
            for (std::size_t i = 0; i < m; ++i)
                if (pick[i])
                    s.push_back(r.facets[i]);
            if (is_face(s))
                continue;
            bool minimal = true;
            for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
                auto t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
                minimal = is_face(t);
            }
            if (minimal)
                r.minimal_non_faces.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    for (int j = 0; j < xi.target_rank; ++j) {
        std::vector<Integer> row;
        for (int f : r.facets)
            row.push_back(xi[f].at(static_cast<std::size_t>(j)));
        r.linear_relations.push_back(std::move(row));
    }
    return r;
}

FiniteGradedRing quasitoric_ring(const FaceLattice& p, const CharacteristicFunction& xi)
{
    if (!p.is_simple_polytope() || !p.vertices_simple())
        throw RingError("quasitoric_ring: lattice is not a simple polytope");
    ValidationReport report;
    try {
        report = validate_characteristic(p, xi);
    } catch (const std::invalid_argument& e) {
        throw RingError(std::string("quasitoric_ring: ") + e.what());
    }
    if (!report.ok)
        throw RingError("quasitoric_ring: characteristic function fails the direct-summand condition");

    const int n = p.ambient_dim();
    const std::vector<int>& facets = p.facets();
    const std::size_t m = facets.size();
    std::vector<std::vector<std::size_t>> face_supports;  // facet positions of each face
    for (const auto& f : p.faces()) {
        std::vector<std::size_t> s;
        for (int id : f.facets)
            s.push_back(static_cast<std::size_t>(std::lower_bound(facets.begin(), facets.end(), id) - facets.begin()));
        face_supports.push_back(std::move(s));
    }
    auto supported = [&](const Monomial& mono) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i)
            if (mono[i] > 0)
                s.push_back(i);
        if (s.empty())
            return true;
        for (const auto& f : face_supports)
            if (std::includes(f.begin(), f.end(), s.begin(), s.end()))
                return true;
        return false;
    };

    // Designated vertex: lexicographically smallest facet set among vertices.
    std::vector<int> vertex_facets;
    for (int v : p.vertex_ids())
        if (vertex_facets.empty() || p.face(v).facets < vertex_facets)
            vertex_facets = p.face(v).facets;
    Monomial vertex_monomial(m);
    for (int id : vertex_facets)
        vertex_monomial[static_cast<std::size_t>(std::lower_bound(facets.begin(), facets.end(), id) - facets.begin())] = 1;

    // Per degree d: supported monomials, a solver holding the linear
    // relations followed by the chosen basis monomials, and the generator
    // index and ring index of each basis monomial.
    struct Piece {
        std::vector<Monomial> monomials;
        std::map<Monomial, std::size_t> position;
        Subspace solver;
        std::vector<std::pair<std::size_t, int>> basis;  // (generator index, ring index)
    };
    std::vector<Piece> pieces;
    CdgaBuilder builder;
    std::vector<Monomial> basis;

    for (int d = 0; d <= n; ++d) {
        Piece piece;
        for (auto& mono : monomials_of_degree(m, d))
            if (supported(mono)) {
                piece.position.emplace(mono, piece.monomials.size());
                piece.monomials.push_back(std::move(mono));
            }
        piece.solver = Subspace(piece.monomials.size());
        if (d > 0)
            for (int j = 0; j < n; ++j)
                for (const auto& u : pieces[static_cast<std::size_t>(d - 1)].monomials) {
                    RatVector rel(piece.monomials.size());
                    for (std::size_t i = 0; i < m; ++i) {
                        const Integer& c = xi[facets[i]].at(static_cast<std::size_t>(j));
                        if (c == 0)
                            continue;
                        Monomial w = u;
                        ++w[i];
                        if (auto it = piece.position.find(w); it != piece.position.end())
                            rel[it->second] += Rational(c);
                    }
                    piece.solver.add(rel);
                }

        std::vector<std::size_t> order(piece.monomials.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        if (d == n) {
            auto it = piece.position.find(vertex_monomial);
            if (it == piece.position.end())
                throw RingError("quasitoric_ring: designated vertex monomial missing");
            std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return i == it->second; });
        }
        for (std::size_t i : order) {
            RatVector e(piece.monomials.size());
            e[i] = 1;
            const std::size_t g = piece.solver.generator_count();
            if (piece.solver.add(e)) {
                const int idx = builder.add_basis(monomial_label(piece.monomials[i], facets), 2 * d);
                piece.basis.emplace_back(g, idx);
                basis.push_back(piece.monomials[i]);
            }
        }
        pieces.push_back(std::move(piece));
    }
    if (pieces[static_cast<std::size_t>(n)].basis.size() != 1)
        throw RingError("quasitoric_ring: top degree is not one dimensional");
    const int fundamental = pieces[static_cast<std::size_t>(n)].basis.front().second;

    auto to_ring = [&](const Monomial& mono, int d) -> SparseVector {
        if (d > n || !supported(mono))
            return {};
        const Piece& piece = pieces[static_cast<std::size_t>(d)];
        RatVector e(piece.monomials.size());
        e[piece.position.at(mono)] = 1;
        const auto c = piece.solver.coordinates(e);
        SparseVector out;
        for (const auto& [g, idx] : piece.basis)
            if ((*c)[g] != 0)
                out.emplace(idx, (*c)[g]);
        return out;
    };

    const int size = builder.size();
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            Monomial w(m);
            for (std::size_t i = 0; i < m; ++i)
                w[i] = basis[static_cast<std::size_t>(a)][i] + basis[static_cast<std::size_t>(b)][i];
            builder.set_product(a, b, to_ring(w, (builder.degree(a) + builder.degree(b)) / 2));
        }
    builder.set_unit(basis_vector(0));
    return FiniteGradedRing(std::move(builder).build(), fundamental);
}

// ---------------------------------------------------------------- spheres and connected sums

FiniteGradedRing sphere_ring(int dimension)
{
    if (dimension < 1)
        throw RingError("sphere_ring: dimension must be positive");
    CdgaBuilder b;
    const int one = b.add_basis("1", 0);
    const int mu = b.add_basis("mu", dimension);
    b.set_unit(basis_vector(one));
    b.set_product(one, one, basis_vector(one));
    b.set_product(one, mu, basis_vector(mu));
    b.set_product(mu, one, basis_vector(mu));
    return FiniteGradedRing(std::move(b).build(), mu);
}

namespace {

void require_closed(const FiniteGradedRing& r, const char* who)
{
    const Cdga& x = r.algebra();
    if (!r.fundamental_class())
        throw RingError(std::string(who) + ": ring has no fundamental class");
    if (x.dimension_in_degree(0) != 1 || x.dimension_in_degree(r.top_degree()) != 1)
        throw RingError(std::string(who) + ": ring must be connected with one-dimensional top degree");
}

}  // namespace

FiniteGradedRing connected_sum_ring(const FiniteGradedRing& r1, const FiniteGradedRing& r2)
{
    require_closed(r1, "connected_sum_ring");
    require_closed(r2, "connected_sum_ring");
    if (r1.top_degree() != r2.top_degree())
        throw RingError("connected_sum_ring: top degrees differ");

    CdgaBuilder b;
    const int one = b.add_basis("1", 0);
    std::vector<int> map1(static_cast<std::size_t>(r1.algebra().dimension()), -1);
    std::vector<int> map2(static_cast<std::size_t>(r2.algebra().dimension()), -1);
    auto add_side = [&](const FiniteGradedRing& r, std::vector<int>& map, const std::string& prefix) {
        const Cdga& x = r.algebra();
        for (int p = 1; p < r.top_degree(); ++p)
            for (int i : x.indices_of_degree(p))
                map[static_cast<std::size_t>(i)] = b.add_basis(prefix + x.label(i), p);
    };
    add_side(r1, map1, "L.");
    add_side(r2, map2, "R.");
    const int mu = b.add_basis("mu", r1.top_degree());
    map1[static_cast<std::size_t>(r1.unit_index())] = one;
    map2[static_cast<std::size_t>(r2.unit_index())] = one;
    map1[static_cast<std::size_t>(*r1.fundamental_class())] = mu;
    map2[static_cast<std::size_t>(*r2.fundamental_class())] = mu;

    auto transport = [](const SparseVector& v, const std::vector<int>& map) {
        SparseVector out;
        for (const auto& [i, c] : v)
            add_scaled(out, c, basis_vector(map[static_cast<std::size_t>(i)]));
        return out;
    };
    auto copy_products = [&](const FiniteGradedRing& r, const std::vector<int>& map) {
        const Cdga& x = r.algebra();
        for (int i = 0; i < x.dimension(); ++i)
            for (const auto& [j, v] : x.product_row(i))
                b.set_product(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)], transport(v, map));
    };
    copy_products(r1, map1);
    copy_products(r2, map2);
    b.set_unit(basis_vector(one));
    return FiniteGradedRing(std::move(b).build(), mu);
}

FiniteGradedRing equivariant_connected_sum_ring(const FiniteGradedRing& r1, const FiniteGradedRing& r2, int n, int k)
{
    if (r1.top_degree() != 2 * n || r2.top_degree() != 2 * n)
        throw RingError("equivariant_connected_sum_ring: rings must have top degree 2n");
    return connected_sum_ring(connected_sum_ring(r1, r2), ring_from_cdga(model_A(n, k), "mu"));
}

FiniteGradedRing ring_from_cdga(CdgaPtr x, const std::string& fundamental_label)
{
    std::optional<int> mu;
    if (!fundamental_label.empty()) {
        mu = x->index_of(fundamental_label);
        if (!mu)
            throw RingError("ring_from_cdga: no basis element " + fundamental_label);
    } else if (x->dimension_in_degree(x->max_degree()) == 1) {
        mu = x->indices_of_degree(x->max_degree()).front();
    }
    return FiniteGradedRing(std::move(x), mu);
}

RatMatrix pairing_matrix(const FiniteGradedRing& r, int degree)
{
    const Cdga& x = r.algebra();
    const auto& rows = x.indices_of_degree(degree);
    const auto& cols = x.indices_of_degree(r.top_degree() - degree);
    RatMatrix m(rows.size(), cols.size());
    if (!r.fundamental_class())
        return m;
    const int mu = *r.fundamental_class();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& prod = x.product(rows[i], cols[j]);
            if (auto it = prod.find(mu); it != prod.end())
                m(i, j) = it->second;
        }
    return m;
}

bool has_nondegenerate_pairing(const FiniteGradedRing& r)
{
    if (!r.fundamental_class())
        return false;
    for (int p = 0; p <= r.top_degree(); ++p) {
        const RatMatrix m = pairing_matrix(r, p);
        if (m.rows() != m.cols() || rank(m) != m.rows())
            return false;
    }
    return true;
}

BettiVector betti_of_ring(const FiniteGradedRing& r)
{
    const Cdga& x = r.algebra();
    BettiVector b = BettiVector::zero(x.max_degree());
    for (int p = 0; p <= x.max_degree(); ++p)
        b.set(p, x.dimension_in_degree(p));
    return b;
}

}  // namespace toruscalc
