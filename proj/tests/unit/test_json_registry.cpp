#include <doctest.h>

#include "toruscalc/cdga_models.hpp"
#include "toruscalc/json_io.hpp"
#include "toruscalc/registry.hpp"

using namespace toruscalc;

namespace {

bool same_algebra(const Cdga& x, const Cdga& y)
{
    if (x.dimension() != y.dimension() || x.unit() != y.unit())
        return false;
    for (int i = 0; i < x.dimension(); ++i) {
        if (x.label(i) != y.label(i) || x.degree(i) != y.degree(i) || x.differential(i) != y.differential(i))
            return false;
        for (int j = 0; j < x.dimension(); ++j)
            if (x.product(i, j) != y.product(i, j))
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("lattice and characteristic function round trips")
{
    const FaceLattice q3 = orbit_space_lattice(3);
    const int f = q3.faces_with_facets({2}).front();
    for (const FaceLattice& p : {q3, simplex_lattice(3), cube_lattice(2),
                                 face_connected_sum(q3, q3, ordered_surgery(q3, f, q3, f))}) {
        const Json j = lattice_to_json(p);
        CHECK(j.at("ambient_dim") == p.ambient_dim());
        CHECK(lattice_from_json(j) == p);
        CHECK(lattice_from_json(parse_json(j.dump(), "lattice")) == p);
    }

    const CharacteristicFunction xi = standard_orbit_characteristic(4);
    const CharacteristicFunction back = charfun_from_json(charfun_to_json(xi));
    CHECK(back.target_rank == 4);
    CHECK(back.assignment == xi.assignment);

    const SurgerySpec s = ordered_surgery(q3, f, q3, f);
    const SurgerySpec s2 = surgery_from_json(surgery_to_json(s));
    CHECK(s2.left_face == s.left_face);
    CHECK(s2.right_face == s.right_face);
    CHECK(s2.facet_pairing == s.facet_pairing);
}

TEST_CASE("malformed json is rejected")
{
    CHECK_THROWS_AS(parse_json("{not json", "x"), FormatError);
    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"ambient_dim": 2})")), FormatError);
    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"([1, 2])")), FormatError);
    CHECK_THROWS_AS(charfun_from_json(Json::parse(R"({"n": 2, "xi": {"a": [1, 0]}})")), FormatError);
    CHECK_THROWS_AS(charfun_from_json(Json::parse(R"({"n": 2, "xi": {"0": "e1"}})")), FormatError);
    CHECK_THROWS_AS(surgery_from_json(Json::parse(R"({"left_face": 1})")), FormatError);
    CHECK_THROWS_AS(cdga_from_json(Json::parse(R"({"basis": [{"label": "x", "degree": 1}]})")), FormatError);
}

TEST_CASE("cdga and ring round trips")
{
    for (const CdgaPtr& x : {model_A(3, 2), eprime_model(2), complement_model(3, 3)}) {
        const Json j = cdga_to_json(*x);
        CHECK(j.contains("basis"));
        CHECK(j.contains("d"));
        CHECK(j.contains("product"));
        CHECK(same_algebra(*x, *cdga_from_json(j)));
        CHECK(same_algebra(*x, *cdga_from_json(parse_json(j.dump(), "cdga"))));
        // dumping is deterministic
        CHECK(cdga_to_json(*x).dump() == j.dump());
    }

    // a CDGA that violates Leibniz is refused: flip d(a1a2) in E'(2)
    const CdgaPtr e2 = eprime_model(2);
    Json bad = cdga_to_json(*e2);
    bool flipped = false;
    for (auto& entry : bad["d"])
        if (entry[0] == e2->index("a1a2")) {
            entry[2] = "-" + entry[2].get<std::string>();
            flipped = true;
        }
    REQUIRE(flipped);
    CHECK_THROWS_AS(cdga_from_json(bad), FormatError);

    const FiniteGradedRing r = ring_from_cdga(model_A(2, 2), "mu");
    const Json rj = ring_to_json(r);
    CHECK(rj.at("fundamental_class") == "mu");
    CHECK(rj.at("top_degree") == 4);
    const FiniteGradedRing back = ring_from_json(rj);
    CHECK(same_algebra(r.algebra(), back.algebra()));
    CHECK(back.fundamental_class() == r.fundamental_class());

    CHECK(rational_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_string(Rational(2)) == "2");
}

TEST_CASE("betti json")
{
    const Json j = betti_to_json(3, 2, "mv", conn_sum_betti_mv(3, 2));
    CHECK(j.at("n") == 3);
    CHECK(j.at("k") == 2);
    CHECK(j.at("method") == "mv");
    CHECK(j.at("betti") == Json::array({1, 0, 2, 2, 2, 0, 1}));
}

TEST_CASE("discrepancy registry")
{
    const auto& reg = discrepancy_registry();
    REQUIRE(reg.betti.size() == 1);
    const auto d = find_known_discrepancy(2, 2);
    REQUIRE(d);
    CHECK(d->closed == conn_sum_betti_closed(2, 2));
    CHECK(d->reference == conn_sum_betti_mv(2, 2));
    CHECK(d->method == "closed");
    CHECK_FALSE(find_known_discrepancy(2, 1));
    CHECK_FALSE(find_known_discrepancy(3, 2));
    // every registered betti entry is a genuine disagreement
    for (const auto& e : reg.betti)
        CHECK(conn_sum_betti_closed(e.n, e.k) != conn_sum_betti_mv(e.n, e.k));

    CHECK(find_known_check_failure("ideal", "closure of printed J' list = its span", 1));
    CHECK_FALSE(find_known_check_failure("ideal", "H(printed J) = 0", 1));
    CHECK(find_known_check_failure("ideal", "H(printed J) = 0", 2));
    CHECK_FALSE(find_known_check_failure("ideal", "H(J) = 0", 2));

    const auto parsed = parse_discrepancy_registry(R"({"entries": [], "check_entries": [
        {"id": "x", "group": "g", "check": "c", "min_k": 3}]})");
    CHECK(parsed.betti.empty());
    REQUIRE(parsed.checks.size() == 1);
    CHECK(parsed.checks[0].min_k == 3);
    CHECK_THROWS_AS(parse_discrepancy_registry("{}"), FormatError);
    CHECK_THROWS_AS(parse_discrepancy_registry(R"({"entries": [{"id": "x"}]})"), FormatError);
}
