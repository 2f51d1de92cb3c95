#include "toruscalc/json_io.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace toruscalc {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(what + ": missing field \"" + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer())
        throw FormatError(what + ": expected an integer");
    return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& what)
{
    if (!j.is_array())
        throw FormatError(what + ": expected an array");
    std::vector<int> out;
    for (const auto& x : j)
        out.push_back(as_int(x, what));
    return out;
}

Rational as_rational(const Json& j, const std::string& what)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw FormatError(what + ": expected a rational string or an integer");
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw FormatError(what + ": bad rational \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return q;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(what + ": " + e.what());
    }
}

Json lattice_to_json(const FaceLattice& p)
{
    Json j;
    j["ambient_dim"] = p.ambient_dim();
    j["facets"] = p.facets();
    Json faces = Json::array();
    for (const auto& f : p.faces())
        faces.push_back({{"id", f.id}, {"dim", f.dim}, {"facets", f.facets}, {"component", f.component},
                         {"vertices", f.vertices}});
    j["faces"] = std::move(faces);
    j["holes"] = p.hole_count();
    j["is_simple_polytope"] = p.is_simple_polytope();
    j["is_nice_corners"] = p.is_nice_corners();
    return j;
}

FaceLattice lattice_from_json(const Json& j)
{
    const std::string what = "lattice";
    const int n = as_int(field(j, "ambient_dim", what), what + ".ambient_dim");
    if (n < 1)
        throw FormatError("lattice: ambient_dim must be positive");
    std::vector<int> facets = int_list(field(j, "facets", what), what + ".facets");
    const Json& faces = field(j, "faces", what);
    if (!faces.is_array())
        throw FormatError("lattice.faces: expected an array");

    std::map<int, std::size_t> position;  // input id -> raw position
    std::vector<Face> raw;
    std::vector<bool> has_vertices;
    for (const auto& fj : faces) {
        Face f;
        f.id = as_int(field(fj, "id", "face"), "face.id");
        f.dim = as_int(field(fj, "dim", "face"), "face.dim");
        f.facets = int_list(field(fj, "facets", "face"), "face.facets");
        f.component = fj.contains("component") ? as_int(fj.at("component"), "face.component") : 0;
        if (f.dim < 0 || f.dim > n)
            throw FormatError("face " + std::to_string(f.id) + ": dimension out of range");
        for (int x : f.facets)
            if (!std::binary_search(facets.begin(), facets.end(), x) &&
                std::find(facets.begin(), facets.end(), x) == facets.end())
                throw FormatError("face " + std::to_string(f.id) + ": unknown facet " + std::to_string(x));
        if (!position.emplace(f.id, raw.size()).second)
            throw FormatError("lattice: duplicate face id " + std::to_string(f.id));
        has_vertices.push_back(fj.contains("vertices"));
        if (fj.contains("vertices"))
            f.vertices = int_list(fj.at("vertices"), "face.vertices");
        raw.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (has_vertices[i]) {
            for (int& v : raw[i].vertices) {
                auto it = position.find(v);
                if (it == position.end() || raw[it->second].dim != 0)
                    throw FormatError("face " + std::to_string(raw[i].id) + ": vertex list names a non-vertex");
                v = static_cast<int>(it->second);
            }
        } else {
            // Without vertex lists, vertices are matched by facet inclusion.
            for (std::size_t t = 0; t < raw.size(); ++t)
                if (raw[t].dim == 0 &&
                    std::all_of(raw[i].facets.begin(), raw[i].facets.end(), [&](int x) {
                        return std::find(raw[t].facets.begin(), raw[t].facets.end(), x) != raw[t].facets.end();
                    }))
                    raw[i].vertices.push_back(static_cast<int>(t));
        }
    }
    FaceLattice::Flags flags;
    flags.simple_polytope = j.value("is_simple_polytope", false);
    flags.nice_corners = j.value("is_nice_corners", true);
    flags.holes = j.value("holes", 0);
    return FaceLattice::assemble(n, std::move(facets), std::move(raw), flags);
}

Json charfun_to_json(const CharacteristicFunction& xi)
{
    Json j;
    j["n"] = xi.target_rank;
    Json map = Json::object();
    for (const auto& [facet, v] : xi.assignment) {
        Json arr = Json::array();
        for (const auto& x : v)
            arr.push_back(x.get_si());
        map[std::to_string(facet)] = std::move(arr);
    }
    j["xi"] = std::move(map);
    return j;
}

CharacteristicFunction charfun_from_json(const Json& j)
{
    const int n = as_int(field(j, "n", "charfun"), "charfun.n");
    const Json& map = field(j, "xi", "charfun");
    if (!map.is_object())
        throw FormatError("charfun.xi: expected an object keyed by facet id");
    std::map<int, std::vector<long>> values;
    for (const auto& [key, arr] : map.items()) {
        int facet = 0;
        try {
            std::size_t used = 0;
            facet = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw FormatError("charfun.xi: facet key \"" + key + "\" is not an integer");
        }
        if (!arr.is_array())
            throw FormatError("charfun.xi: expected integer arrays");
        std::vector<long> v;
        for (const auto& x : arr) {
            if (!x.is_number_integer())
                throw FormatError("charfun.xi: expected integer arrays");
            v.push_back(x.get<long>());
        }
        values.emplace(facet, std::move(v));
    }
    return CharacteristicFunction::from_ints(n, values);
}

Json surgery_to_json(const SurgerySpec& s)
{
    Json pairs = Json::array();
    for (const auto& [l, r] : s.facet_pairing)
        pairs.push_back({l, r});
    return {{"left_face", s.left_face}, {"right_face", s.right_face}, {"pairing", pairs}};
}

SurgerySpec surgery_from_json(const Json& j)
{
    SurgerySpec s;
    s.left_face = as_int(field(j, "left_face", "pairing"), "pairing.left_face");
    s.right_face = as_int(field(j, "right_face", "pairing"), "pairing.right_face");
    const Json& pairs = field(j, "pairing", "pairing");
    if (!pairs.is_array())
        throw FormatError("pairing.pairing: expected an array of [left, right]");
    for (const auto& p : pairs) {
        const auto lr = int_list(p, "pairing entry");
        if (lr.size() != 2)
            throw FormatError("pairing entry: expected [left, right]");
        if (!s.facet_pairing.emplace(lr[0], lr[1]).second)
            throw FormatError("pairing: facet " + std::to_string(lr[0]) + " paired twice");
    }
    return s;
}

Json betti_array(const BettiVector& b)
{
    Json arr = Json::array();
    for (long x : b.ranks())
        arr.push_back(x);
    return arr;
}

Json betti_to_json(int n, int k, const std::string& method, const BettiVector& b)
{
    return {{"n", n}, {"k", k}, {"method", method}, {"betti", betti_array(b)}};
}

std::string rational_string(const Rational& q)
{
    return q.get_str();
}

Json cdga_to_json(const Cdga& x)
{
    Json j;
    Json basis = Json::array();
    for (int i = 0; i < x.dimension(); ++i)
        basis.push_back({{"label", x.label(i)}, {"degree", x.degree(i)}});
    j["basis"] = std::move(basis);
    Json d = Json::array();
    for (int i = 0; i < x.dimension(); ++i)
        for (const auto& [t, c] : x.differential(i))
            d.push_back({i, t, rational_string(c)});
    j["d"] = std::move(d);
    Json prod = Json::array();
    for (int i = 0; i < x.dimension(); ++i)
        for (const auto& [jdx, v] : x.product_row(i))
            for (const auto& [t, c] : v)
                prod.push_back({i, jdx, t, rational_string(c)});
    j["product"] = std::move(prod);
    return j;
}

CdgaPtr cdga_from_json(const Json& j)
{
    const Json& basis = field(j, "basis", "cdga");
    if (!basis.is_array() || basis.empty())
        throw FormatError("cdga.basis: expected a nonempty array");
    CdgaBuilder b;
    std::vector<int> degree_zero;
    std::optional<int> labelled_one;
    for (const auto& e : basis) {
        const Json& label = field(e, "label", "cdga.basis entry");
        if (!label.is_string())
            throw FormatError("cdga.basis entry: label must be a string");
        const int deg = as_int(field(e, "degree", "cdga.basis entry"), "cdga.basis entry degree");
        if (deg < 0)
            throw FormatError("cdga.basis entry: negative degree");
        const int i = b.add_basis(label.get<std::string>(), deg);
        if (deg == 0)
            degree_zero.push_back(i);
        if (label.get<std::string>() == "1")
            labelled_one = i;
    }
    const int dim = b.size();
    auto index = [&](const Json& x, const std::string& what) {
        const int i = as_int(x, what);
        if (i < 0 || i >= dim)
            throw FormatError(what + ": basis index out of range");
        return i;
    };
    std::map<int, SparseVector> d;
    for (const auto& e : field(j, "d", "cdga")) {
        if (!e.is_array() || e.size() != 3)
            throw FormatError("cdga.d entry: expected [i, j, q]");
        add_scaled(d[index(e[0], "cdga.d")], as_rational(e[2], "cdga.d"), basis_vector(index(e[1], "cdga.d")));
    }
    std::map<std::pair<int, int>, SparseVector> prod;
    for (const auto& e : field(j, "product", "cdga")) {
        if (!e.is_array() || e.size() != 4)
            throw FormatError("cdga.product entry: expected [i, j, k, q]");
        add_scaled(prod[{index(e[0], "cdga.product"), index(e[1], "cdga.product")}],
                   as_rational(e[3], "cdga.product"), basis_vector(index(e[2], "cdga.product")));
    }
    for (auto& [i, v] : d)
        b.set_differential(i, std::move(v));
    for (auto& [ij, v] : prod)
        b.set_product(ij.first, ij.second, std::move(v));
    int unit = 0;
    if (labelled_one)
        unit = *labelled_one;
    else if (degree_zero.size() == 1)
        unit = degree_zero.front();
    else
        throw FormatError("cdga: cannot identify the unit (label it \"1\")");
    b.set_unit(basis_vector(unit));
    CdgaPtr x;
    try {
        x = std::move(b).build();
    } catch (const std::exception& e) {
        throw FormatError(std::string("cdga: ") + e.what());
    }
    const CheckReport r = check_axioms(*x);
    if (!r.ok)
        throw FormatError("cdga: axioms fail: " + r.failures.front());
    return x;
}

FiniteGradedRing ring_from_json(const Json& j)
{
    CdgaPtr x = cdga_from_json(j);
    std::string fundamental;
    if (j.contains("fundamental_class") && !j.at("fundamental_class").is_null()) {
        if (!j.at("fundamental_class").is_string())
            throw FormatError("ring.fundamental_class: expected a label");
        fundamental = j.at("fundamental_class").get<std::string>();
        if (!x->index_of(fundamental))
            throw FormatError("ring.fundamental_class: unknown label " + fundamental);
    }
    try {
        return ring_from_cdga(std::move(x), fundamental);
    } catch (const RingError& e) {
        throw FormatError(std::string("ring: ") + e.what());
    }
}

Json ring_to_json(const FiniteGradedRing& r)
{
    Json j = cdga_to_json(r.algebra());
    if (r.fundamental_class())
        j["fundamental_class"] = r.algebra().label(*r.fundamental_class());
    else
        j["fundamental_class"] = nullptr;
    j["top_degree"] = r.top_degree();
    return j;
}

}  // namespace toruscalc
