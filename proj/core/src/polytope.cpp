#include "toruscalc/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace toruscalc {

namespace {

bool is_subset(const std::vector<int>& small, const std::vector<int>& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void require_dim(int n, const char* who)
{
    if (n < 1)
        throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
}

}  // namespace

const Face& FaceLattice::face(int id) const
{
    if (id < 0 || static_cast<std::size_t>(id) >= faces_.size())
        throw std::out_of_range("FaceLattice: no face with id " + std::to_string(id));
    return faces_[static_cast<std::size_t>(id)];
}

std::vector<int> FaceLattice::vertex_ids() const
{
    std::vector<int> ids;
    for (const auto& f : faces_)
        if (f.dim == 0)
            ids.push_back(f.id);
    return ids;
}

std::size_t FaceLattice::vertex_count() const
{
    return static_cast<std::size_t>(
        std::count_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.dim == 0; }));
}

std::vector<int> FaceLattice::faces_with_facets(const std::vector<int>& facet_set) const
{
    const auto key = sorted(facet_set);
    std::vector<int> ids;
    for (const auto& f : faces_)
        if (f.facets == key)
            ids.push_back(f.id);
    return ids;
}

int FaceLattice::top_face() const
{
    for (const auto& f : faces_)
        if (f.dim == ambient_dim_)
            return f.id;
    throw std::logic_error("FaceLattice: no top face");
}

bool FaceLattice::contains(int upper, int lower) const
{
    if (upper == lower)
        return true;
    const Face& u = face(upper);
    const Face& l = face(lower);
    if (l.dim >= u.dim || !is_subset(u.facets, l.facets))
        return false;
    if (l.vertices.empty())
        return true;
    return is_subset(l.vertices, u.vertices);
}

bool FaceLattice::vertices_simple() const
{
    return std::all_of(faces_.begin(), faces_.end(), [&](const Face& f) {
        return f.dim != 0 || static_cast<int>(f.facets.size()) == ambient_dim_;
    });
}

bool FaceLattice::codimension_consistent() const
{
    return std::all_of(faces_.begin(), faces_.end(), [&](const Face& f) {
        return static_cast<int>(f.facets.size()) == ambient_dim_ - f.dim;
    });
}

bool FaceLattice::facets_connected() const
{
    for (int facet : facets_)
        if (faces_with_facets({facet}).size() != 1)
            return false;
    return true;
}

bool FaceLattice::is_graded() const
{
    const std::size_t count = faces_.size();
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b || !contains(static_cast<int>(a), static_cast<int>(b)))
                continue;
            bool covering = true;
            for (std::size_t c = 0; c < count && covering; ++c) {
                if (c == a || c == b)
                    continue;
                if (contains(static_cast<int>(a), static_cast<int>(c)) &&
                    contains(static_cast<int>(c), static_cast<int>(b)))
                    covering = false;
            }
            if (covering && faces_[a].dim - faces_[b].dim != 1)
                return false;
        }
    return true;
}

std::vector<std::size_t> FaceLattice::f_vector() const
{
    std::vector<std::size_t> f(static_cast<std::size_t>(ambient_dim_), 0);
    for (const auto& face : faces_)
        if (face.dim < ambient_dim_)
            ++f[static_cast<std::size_t>(face.dim)];
    return f;
}

FaceLattice FaceLattice::assemble(int ambient_dim, std::vector<int> facets, std::vector<Face> raw,
                                  Flags flags)
{
    for (auto& f : raw)
        f.facets = sorted(f.facets);

    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(raw[a].dim, raw[a].facets) < std::tie(raw[b].dim, raw[b].facets);
    });

    std::vector<int> new_id(raw.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        new_id[order[pos]] = static_cast<int>(pos);

    FaceLattice lattice;
    lattice.ambient_dim_ = ambient_dim;
    lattice.facets_ = sorted(std::move(facets));
    lattice.holes_ = flags.holes;
    lattice.simple_polytope_ = flags.simple_polytope;
    lattice.nice_corners_ = flags.nice_corners;
    lattice.faces_.reserve(raw.size());

    const std::vector<int>* previous = nullptr;
    int component = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        Face f = raw[order[pos]];
        component = (previous && *previous == f.facets) ? component + 1 : 0;
        previous = &raw[order[pos]].facets;
        f.id = static_cast<int>(pos);
        f.component = component;
        std::vector<int> vertices;
        for (int v : f.vertices)
            vertices.push_back(new_id[static_cast<std::size_t>(v)]);
        f.vertices = sorted(std::move(vertices));
        lattice.faces_.push_back(std::move(f));
    }
    return lattice;
}

FaceLattice orbit_space_lattice(int n)
{
    require_dim(n, "orbit_space_lattice");
    std::vector<int> facets(static_cast<std::size_t>(n));
    std::iota(facets.begin(), facets.end(), 1);

    // Raw positions 0 and 1 are the vertices (0,...,0,-1) and (0,...,0,+1).
    std::vector<Face> raw;
    for (int c = 0; c < 2; ++c)
        raw.push_back(Face{0, 0, facets, 0, {c}});
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        Face f;
        f.dim = n - std::popcount(mask);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                f.facets.push_back(i + 1);
        f.vertices = {0, 1};
        raw.push_back(std::move(f));
    }
    return FaceLattice::assemble(n, facets, std::move(raw), {false, true, 0});
}

FaceLattice simplex_lattice(int n)
{
    require_dim(n, "simplex_lattice");
    const int m = n + 1;
    std::vector<int> facets(static_cast<std::size_t>(m));
    std::iota(facets.begin(), facets.end(), 0);

    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) <= n)
            masks.push_back(mask);
    // Vertex positions are those masks with n facets.
    std::vector<int> vertex_pos;
    for (std::size_t i = 0; i < masks.size(); ++i)
        if (std::popcount(masks[i]) == n)
            vertex_pos.push_back(static_cast<int>(i));

    std::vector<Face> raw;
    for (unsigned mask : masks) {
        Face f;
        f.dim = n - std::popcount(mask);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i))
                f.facets.push_back(i);
        for (int vp : vertex_pos)
            if ((masks[static_cast<std::size_t>(vp)] & mask) == mask)
                f.vertices.push_back(vp);
        raw.push_back(std::move(f));
    }
    return FaceLattice::assemble(n, facets, std::move(raw), {true, true, 0});
}

FaceLattice cube_lattice(int n)
{
    require_dim(n, "cube_lattice");
    // Facet 2i is {x_i = 0}, facet 2i+1 is {x_i = 1}. A face assigns each
    // coordinate one of free / 0 / 1.
    std::vector<int> facets(static_cast<std::size_t>(2 * n));
    std::iota(facets.begin(), facets.end(), 0);

    int total = 1;
    for (int i = 0; i < n; ++i)
        total *= 3;
    auto digits = [n](int code) {
        std::vector<int> d(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i, code /= 3)
            d[static_cast<std::size_t>(i)] = code % 3;
        return d;
    };

    std::vector<int> vertex_codes;
    for (int code = 0; code < total; ++code) {
        auto d = digits(code);
        if (std::none_of(d.begin(), d.end(), [](int x) { return x == 0; }))
            vertex_codes.push_back(code);
    }

    std::vector<Face> raw;
    for (int code = 0; code < total; ++code) {
        auto d = digits(code);
        Face f;
        for (int i = 0; i < n; ++i) {
            const int x = d[static_cast<std::size_t>(i)];
            if (x == 0)
                ++f.dim;
            else
                f.facets.push_back(2 * i + (x - 1));
        }
        for (int vc : vertex_codes) {
            auto vd = digits(vc);
            bool inside = true;
            for (int i = 0; i < n; ++i)
                if (d[static_cast<std::size_t>(i)] != 0 && d[static_cast<std::size_t>(i)] != vd[static_cast<std::size_t>(i)])
                    inside = false;
            if (inside)
                f.vertices.push_back(vc);
        }
        raw.push_back(std::move(f));
    }
    return FaceLattice::assemble(n, facets, std::move(raw), {true, true, 0});
}

namespace {

/// Shared gluing for the vertex case (glued vertices disappear) and the
/// 0 < k < n case (faces containing the glued faces merge pairwise).
ConnectedSum glue_along_faces(const FaceLattice& p, int left, const FaceLattice& q, int right,
                              const std::map<int, int>& pairing, FaceLattice::Flags flags)
{
    const Face& lf = p.face(left);
    const bool vertex_case = lf.dim == 0;

    ConnectedSum result;
    int next = 0;
    for (int facet : p.facets())
        result.left_facet_map[facet] = next++;
    std::set<int> paired_right;
    for (const auto& [l, r] : pairing) {
        result.right_facet_map[r] = result.left_facet_map.at(l);
        paired_right.insert(r);
    }
    for (int facet : q.facets())
        if (!paired_right.count(facet))
            result.right_facet_map[facet] = next++;
    std::vector<int> all_facets(static_cast<std::size_t>(next));
    std::iota(all_facets.begin(), all_facets.end(), 0);

    auto map_facets = [](const std::vector<int>& fs, const std::map<int, int>& m) {
        std::vector<int> out;
        for (int f : fs)
            out.push_back(m.at(f));
        return sorted(std::move(out));
    };

    // Raw vertex positions: surviving vertices of p, then of q.
    std::vector<Face> raw;
    std::map<int, int> left_vertex_pos, right_vertex_pos;
    for (int v : p.vertex_ids()) {
        if (vertex_case && v == left)
            continue;
        left_vertex_pos[v] = static_cast<int>(raw.size());
        raw.push_back(Face{0, 0, map_facets(p.face(v).facets, result.left_facet_map), 0,
                           {static_cast<int>(raw.size())}});
    }
    for (int v : q.vertex_ids()) {
        if (vertex_case && v == right)
            continue;
        right_vertex_pos[v] = static_cast<int>(raw.size());
        raw.push_back(Face{0, 0, map_facets(q.face(v).facets, result.right_facet_map), 0,
                           {static_cast<int>(raw.size())}});
    }
    auto map_vertices = [](const std::vector<int>& vs, const std::map<int, int>& pos) {
        std::vector<int> out;
        for (int v : vs)
            if (auto it = pos.find(v); it != pos.end())
                out.push_back(it->second);
        return out;
    };

    for (const auto& f : p.faces()) {
        if (f.dim == 0 || p.contains(f.id, left))
            continue;
        raw.push_back(Face{0, f.dim, map_facets(f.facets, result.left_facet_map), 0,
                           map_vertices(f.vertices, left_vertex_pos)});
    }
    for (const auto& f : q.faces()) {
        if (f.dim == 0 || q.contains(f.id, right))
            continue;
        raw.push_back(Face{0, f.dim, map_facets(f.facets, result.right_facet_map), 0,
                           map_vertices(f.vertices, right_vertex_pos)});
    }

    for (const auto& f : p.faces()) {
        if (!p.contains(f.id, left) || (vertex_case && f.id == left))
            continue;
        std::vector<int> partner_facets;
        for (int facet : f.facets)
            partner_facets.push_back(pairing.at(facet));
        partner_facets = sorted(std::move(partner_facets));
        std::vector<int> partners;
        for (int g : q.faces_with_facets(partner_facets))
            if (q.contains(g, right))
                partners.push_back(g);
        if (partners.size() != 1)
            throw SurgeryError("connected sum: face around the left face has no unique partner");
        const Face& g = q.face(partners.front());
        if (g.dim != f.dim)
            throw SurgeryError("connected sum: paired faces differ in dimension");

        auto lv = map_vertices(f.vertices, left_vertex_pos);
        auto rv = map_vertices(g.vertices, right_vertex_pos);
        const auto facets = map_facets(f.facets, result.left_facet_map);
        if (f.id == left && f.dim == 1) {
            // Gluing two arcs at interior points leaves two arcs; endpoints are
            // matched in id order.
            if (lv.size() != 2 || rv.size() != 2)
                throw SurgeryError("connected sum along an edge needs edges with two vertices");
            for (int s = 0; s < 2; ++s)
                raw.push_back(Face{0, 1, facets, 0,
                                   {lv[static_cast<std::size_t>(s)], rv[static_cast<std::size_t>(s)]}});
            continue;
        }
        lv.insert(lv.end(), rv.begin(), rv.end());
        raw.push_back(Face{0, f.dim, facets, 0, std::move(lv)});
    }

    result.lattice = FaceLattice::assemble(p.ambient_dim(), all_facets, std::move(raw), flags);
    return result;
}

void check_pairing(const FaceLattice& p, int left, const FaceLattice& q, int right,
                   const std::map<int, int>& pairing)
{
    const auto& lf = p.face(left).facets;
    const auto& rf = q.face(right).facets;
    std::vector<int> keys, values;
    for (const auto& [l, r] : pairing) {
        keys.push_back(l);
        values.push_back(r);
    }
    if (sorted(keys) != lf || sorted(values) != rf || sorted(values).size() != values.size())
        throw SurgeryError("connected sum: pairing is not a bijection between the incident facets");
}

}  // namespace

ConnectedSum vertex_connected_sum_detailed(const FaceLattice& p, int v, const FaceLattice& q, int w,
                                           const std::map<int, int>& pairing)
{
    if (p.ambient_dim() != q.ambient_dim())
        throw SurgeryError("vertex_connected_sum: ambient dimensions differ");
    if (p.face(v).dim != 0 || q.face(w).dim != 0)
        throw SurgeryError("vertex_connected_sum: chosen faces are not vertices");
    check_pairing(p, v, q, w, pairing);
    FaceLattice::Flags flags{p.is_simple_polytope() && q.is_simple_polytope(),
                             p.is_nice_corners() && q.is_nice_corners(),
                             p.hole_count() + q.hole_count()};
    return glue_along_faces(p, v, q, w, pairing, flags);
}

FaceLattice vertex_connected_sum(const FaceLattice& p, int v, const FaceLattice& q, int w,
                                 const std::map<int, int>& pairing)
{
    return vertex_connected_sum_detailed(p, v, q, w, pairing).lattice;
}

ConnectedSum face_connected_sum_detailed(const FaceLattice& p, const FaceLattice& q,
                                         const SurgerySpec& spec)
{
    const int n = p.ambient_dim();
    if (q.ambient_dim() != n)
        throw SurgeryError("face_connected_sum: ambient dimensions differ");
    const Face& lf = p.face(spec.left_face);
    const Face& rf = q.face(spec.right_face);
    if (lf.dim != rf.dim)
        throw SurgeryError("face_connected_sum: chosen faces differ in dimension");
    const int k = lf.dim;

    if (k == 0)
        return vertex_connected_sum_detailed(p, spec.left_face, q, spec.right_face, spec.facet_pairing);

    if (k < n) {
        check_pairing(p, spec.left_face, q, spec.right_face, spec.facet_pairing);
        FaceLattice::Flags flags{false, true, p.hole_count() + q.hole_count()};
        return glue_along_faces(p, spec.left_face, q, spec.right_face, spec.facet_pairing, flags);
    }

    // Interior points: a ball is removed from each side and the spheres are
    // identified. No facets merge; the tops merge and a hole appears.
    if (!spec.facet_pairing.empty())
        throw SurgeryError("face_connected_sum: interior sums take an empty pairing");
    ConnectedSum result;
    int next = 0;
    for (int facet : p.facets())
        result.left_facet_map[facet] = next++;
    for (int facet : q.facets())
        result.right_facet_map[facet] = next++;

    std::vector<Face> raw;
    std::map<int, int> left_pos, right_pos;
    auto copy_side = [&](const FaceLattice& side, const std::map<int, int>& facet_map,
                         std::map<int, int>& pos) {
        // Vertices first so that vertex references can be resolved.
        for (int v : side.vertex_ids()) {
            pos[v] = static_cast<int>(raw.size());
            std::vector<int> fs;
            for (int f : side.face(v).facets)
                fs.push_back(facet_map.at(f));
            raw.push_back(Face{0, 0, fs, 0, {pos[v]}});
        }
        for (const auto& f : side.faces()) {
            if (f.dim == 0 || f.dim == n)
                continue;
            std::vector<int> fs, vs;
            for (int x : f.facets)
                fs.push_back(facet_map.at(x));
            for (int v : f.vertices)
                vs.push_back(pos.at(v));
            raw.push_back(Face{0, f.dim, fs, 0, vs});
        }
    };
    copy_side(p, result.left_facet_map, left_pos);
    copy_side(q, result.right_facet_map, right_pos);
    Face top{0, n, {}, 0, {}};
    for (const auto& [v, position] : left_pos)
        top.vertices.push_back(position);
    for (const auto& [v, position] : right_pos)
        top.vertices.push_back(position);
    raw.push_back(std::move(top));

    std::vector<int> all_facets(static_cast<std::size_t>(next));
    std::iota(all_facets.begin(), all_facets.end(), 0);
    FaceLattice::Flags flags{false, p.is_nice_corners() && q.is_nice_corners(),
                             p.hole_count() + q.hole_count() + 1};
    result.lattice = FaceLattice::assemble(n, all_facets, std::move(raw), flags);
    return result;
}

FaceLattice face_connected_sum(const FaceLattice& p, const FaceLattice& q, const SurgerySpec& spec)
{
    return face_connected_sum_detailed(p, q, spec).lattice;
}

SurgerySpec ordered_surgery(const FaceLattice& p, int left_face, const FaceLattice& q, int right_face)
{
    const auto& lf = p.face(left_face).facets;
    const auto& rf = q.face(right_face).facets;
    if (lf.size() != rf.size())
        throw SurgeryError("ordered_surgery: faces lie in different numbers of facets");
    SurgerySpec spec{left_face, right_face, {}};
    if (p.face(left_face).dim == p.ambient_dim())
        return spec;
    for (std::size_t i = 0; i < lf.size(); ++i)
        spec.facet_pairing[lf[i]] = rf[i];
    return spec;
}

BettiVector holes_betti(int n, int s)
{
    if (n < 2 || s < 0)
        throw std::invalid_argument("holes_betti: need n >= 2 and s >= 0");
    BettiVector b = BettiVector::zero(n);
    b.set(0, 1);
    b.add(n - 1, s);
    return b;
}

long euler_char_of_boundary(const FaceLattice& p)
{
    long chi = 0;
    const auto f = p.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
    return chi;
}

std::vector<long> h_vector(const FaceLattice& p)
{
    // sum_i h_i t^{n-i} = sum_i g_i (t-1)^{n-i}, g_i = number of codimension-i faces.
    const int n = p.ambient_dim();
    std::vector<long> codim_count(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& face : p.faces())
        ++codim_count[static_cast<std::size_t>(n - face.dim)];

    std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);  // coefficient of t^j
    for (int i = 0; i <= n; ++i) {
        const int e = n - i;
        for (int j = 0; j <= e; ++j) {
            const long sign = ((e - j) % 2 == 0) ? 1 : -1;
            poly[static_cast<std::size_t>(j)] += codim_count[static_cast<std::size_t>(i)] * sign * binomial(e, j);
        }
    }
    std::vector<long> h(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        h[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(n - i)];
    return h;
}

}  // namespace toruscalc
