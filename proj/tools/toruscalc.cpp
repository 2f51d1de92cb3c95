// toruscalc: command-line front end to the toruscalc library.
//
// Exit codes: 0 success, 1 failed verification (report on stdout),
// 2 malformed input or usage (message on stderr).

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "suite.hpp"
#include "toruscalc/betti.hpp"
#include "toruscalc/cdga_models.hpp"
#include "toruscalc/charfun.hpp"
#include "toruscalc/json_io.hpp"
#include "toruscalc/polytope.hpp"
#include "toruscalc/registry.hpp"
#include "toruscalc/toricring.hpp"

namespace {

using namespace toruscalc;
using Row = std::vector<std::string>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One command's result: a JSON document, its TSV rows and the exit code.
struct Result {
    Json json;
    std::vector<Row> rows;
    int exit_code = 0;
};

std::string csv(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string csv(const BettiVector& b)
{
    std::string s;
    for (std::size_t i = 0; i < b.ranks().size(); ++i)
        s += (i ? "," : "") + std::to_string(b.ranks()[i]);
    return s;
}

Json read_json_file(const std::string& path, const std::string& what)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + what + " file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), what + " " + path);
}

// ---------------------------------------------------------------- polytope

Result lattice_result(const FaceLattice& p)
{
    Result r;
    r.json = lattice_to_json(p);
    r.rows.push_back({"id", "dim", "facets", "component", "vertices"});
    for (const auto& f : p.faces())
        r.rows.push_back({std::to_string(f.id), std::to_string(f.dim), csv(f.facets), std::to_string(f.component),
                          csv(f.vertices)});
    return r;
}

Result polytope_build(const std::string& type, int n)
{
    if (type == "qn")
        return lattice_result(orbit_space_lattice(n));
    if (type == "simplex")
        return lattice_result(simplex_lattice(n));
    return lattice_result(cube_lattice(n));
}

Result polytope_connect(const std::string& lhs, const std::string& rhs, int face_dim, const std::string& pairing)
{
    const FaceLattice p = lattice_from_json(read_json_file(lhs, "lattice"));
    const FaceLattice q = lattice_from_json(read_json_file(rhs, "lattice"));
    const SurgerySpec spec = surgery_from_json(read_json_file(pairing, "pairing"));
    for (const auto& [lattice, face] : {std::pair{&p, spec.left_face}, std::pair{&q, spec.right_face}}) {
        if (face < 0 || face >= static_cast<int>(lattice->faces().size()))
            throw InputError("pairing names face " + std::to_string(face) + ", which does not exist");
        if (lattice->face(face).dim != face_dim)
            throw InputError("face " + std::to_string(face) + " has dimension " +
                             std::to_string(lattice->face(face).dim) + ", not " + std::to_string(face_dim));
    }
    return lattice_result(face_connected_sum(p, q, spec));
}

// ---------------------------------------------------------------- charfun

Result charfun_validate(const std::string& polytope, const std::string& xi_path)
{
    const FaceLattice p = lattice_from_json(read_json_file(polytope, "lattice"));
    const CharacteristicFunction xi = charfun_from_json(read_json_file(xi_path, "characteristic function"));
    const ValidationReport report = validate_characteristic(p, xi);
    Result r;
    r.json = {{"ok", report.ok}, {"violating_faces", report.violating_faces}};
    r.rows.push_back({"ok", report.ok ? "true" : "false"});
    for (int f : report.violating_faces)
        r.rows.push_back({"violating_face", std::to_string(f)});
    r.exit_code = report.ok ? 0 : 1;
    return r;
}

// ---------------------------------------------------------------- betti

BettiVector conn_sum_by(const std::string& method, int n, int k)
{
    if (method == "closed")
        return conn_sum_betti_closed(n, k);
    if (method == "mv")
        return conn_sum_betti_mv(n, k);
    return cohomology_betti(*model_A(n, k));
}

Result betti_conn_sum(int n, int k, const std::string& method, bool allow_known)
{
    Result r;
    r.rows.push_back({"n", "k", "method", "betti"});
    if (method != "all") {
        const BettiVector b = conn_sum_by(method, n, k);
        r.json = betti_to_json(n, k, method, b.padded(2 * n));
        r.rows.push_back({std::to_string(n), std::to_string(k), method, csv(b.padded(2 * n))});
        return r;
    }
    Json results = Json::array();
    std::map<std::string, BettiVector> by;
    for (const std::string m : {"closed", "mv", "model"}) {
        by[m] = conn_sum_by(m, n, k).padded(2 * n);
        results.push_back(betti_to_json(n, k, m, by[m]));
        r.rows.push_back({std::to_string(n), std::to_string(k), m, csv(by[m])});
    }
    std::string status = "agree";
    Json discrepancy = nullptr;
    if (!(by["mv"] == by["model"])) {
        status = "mismatch";
    } else if (!(by["closed"] == by["mv"])) {
        const auto d = find_known_discrepancy(n, k);
        if (d && d->closed == by["closed"] && d->reference == by["mv"]) {
            status = "known-discrepancy";
            discrepancy = {{"id", d->id}, {"method", d->method}, {"reference_methods", d->reference_methods},
                           {"description", d->description}};
            r.rows.push_back({"discrepancy", d->id, d->method, d->description});
        } else {
            status = "mismatch";
        }
    }
    r.json = {{"n", n}, {"k", k}, {"results", results}, {"status", status}, {"discrepancy", discrepancy}};
    r.rows.push_back({"status", status});
    r.exit_code = status == "agree" || (status == "known-discrepancy" && allow_known) ? 0 : 1;
    return r;
}

Result betti_complement(int n, int j, const std::string& method)
{
    // Complement of a j-dimensional orbit is U([n], n - j + 1).
    BettiVector reduced;
    Json extra = nullptr;
    if (method == "wedge") {
        const WedgeDecomposition w = orbit_complement_wedge(n, j);
        reduced = w.reduced_betti();
        extra = Json::array();
        for (const auto& [dim, mult] : w.summands)
            extra.push_back({dim, mult});
    } else {
        reduced = orbit_complement_recursive(n, n - j + 1);
    }
    BettiVector b = reduced;
    b.add(0, 1);
    Result r;
    r.json = {{"n", n}, {"orbit_dim", j}, {"method", method}, {"betti", betti_array(b)}};
    if (!extra.is_null())
        r.json["wedge"] = extra;
    r.rows.push_back({"n", "orbit_dim", "method", "betti"});
    r.rows.push_back({std::to_string(n), std::to_string(j), method, csv(b)});
    return r;
}

// ---------------------------------------------------------------- cdga and rings

void cdga_rows(const Cdga& x, std::vector<Row>& rows)
{
    for (int i = 0; i < x.dimension(); ++i)
        rows.push_back({"basis", std::to_string(i), x.label(i), std::to_string(x.degree(i))});
    for (int i = 0; i < x.dimension(); ++i)
        for (const auto& [t, c] : x.differential(i))
            rows.push_back({"d", std::to_string(i), std::to_string(t), rational_string(c)});
    for (int i = 0; i < x.dimension(); ++i)
        for (const auto& [j, v] : x.product_row(i))
            for (const auto& [t, c] : v)
                rows.push_back({"product", std::to_string(i), std::to_string(j), std::to_string(t), rational_string(c)});
}

Result cdga_verify(int n, int k, const std::vector<std::string>& checks, bool allow_known)
{
    const std::set<std::string> groups(checks.begin(), checks.end());
    const ModelVerification v = verify_models(build_surgery_models(n, k), groups);
    Result r;
    Json list = Json::array();
    bool ok = true;
    r.rows.push_back({"group", "check", "status", "detail"});
    for (const auto& c : v.checks) {
        std::string status = c.ok ? "pass" : "fail";
        Json entry = {{"group", c.group}, {"check", c.name}, {"status", status}, {"detail", c.detail}};
        if (!c.ok) {
            if (const auto known = find_known_check_failure(c.group, c.name, k)) {
                status = "known-discrepancy";
                entry["status"] = status;
                entry["registry_id"] = known->id;
                ok = ok && allow_known;
            } else {
                ok = false;
            }
        }
        list.push_back(std::move(entry));
        r.rows.push_back({c.group, c.name, status, c.detail});
    }
    r.json = {{"n", n}, {"k", k}, {"ok", ok}, {"checks", list}};
    r.exit_code = ok ? 0 : 1;
    return r;
}

Result cdga_dump(int n, int k, const std::string& which)
{
    const SurgeryModels m = build_surgery_models(n, k);
    const std::map<std::string, CdgaPtr> by{{"A", m.A},  {"B", m.B}, {"C", m.C},  {"E'", m.Eprime},
                                            {"B'", m.Bprime}, {"D", m.D}, {"D/J", m.DJ}};
    const Cdga& x = *by.at(which);
    Result r;
    r.json = cdga_to_json(x);
    cdga_rows(x, r.rows);
    return r;
}

Result ring_result(const FiniteGradedRing& ring)
{
    Result r;
    r.json = ring_to_json(ring);
    cdga_rows(ring.algebra(), r.rows);
    r.rows.push_back({"fundamental_class",
                      ring.fundamental_class() ? ring.algebra().label(*ring.fundamental_class()) : ""});
    r.rows.push_back({"top_degree", std::to_string(ring.top_degree())});
    return r;
}

FiniteGradedRing read_ring(const std::string& path)
{
    return ring_from_json(read_json_file(path, "ring"));
}

Result ring_info(const std::string& path)
{
    const FiniteGradedRing ring = read_ring(path);
    const BettiVector b = betti_of_ring(ring);
    const bool nondegenerate = has_nondegenerate_pairing(ring);
    Result r;
    r.json = {{"betti", betti_array(b)},
              {"top_degree", ring.top_degree()},
              {"fundamental_class",
               ring.fundamental_class() ? Json(ring.algebra().label(*ring.fundamental_class())) : Json(nullptr)},
              {"nondegenerate_pairing", nondegenerate}};
    r.rows.push_back({"betti", csv(b)});
    r.rows.push_back({"top_degree", std::to_string(ring.top_degree())});
    r.rows.push_back({"nondegenerate_pairing", nondegenerate ? "true" : "false"});
    return r;
}

// ---------------------------------------------------------------- verify all

Result verify_all(int max_n, bool allow_known)
{
    const auto entries = tool::run_suite(max_n);
    Result r;
    Json list = Json::array();
    std::size_t failed = 0, known = 0;
    r.rows.push_back({"check", "n", "k", "status", "detail", "registry_id"});
    for (const auto& e : entries) {
        failed += e.status == tool::Status::fail ? 1 : 0;
        known += e.status == tool::Status::known ? 1 : 0;
        Json j = {{"check", e.check}, {"n", e.n}, {"k", e.k}, {"status", tool::status_name(e.status)},
                  {"detail", e.detail}};
        if (!e.registry_id.empty())
            j["registry_id"] = e.registry_id;
        list.push_back(std::move(j));
        r.rows.push_back({e.check, std::to_string(e.n), std::to_string(e.k), tool::status_name(e.status), e.detail,
                          e.registry_id});
    }
    const bool ok = tool::suite_passed(entries, allow_known);
    r.json = {{"max_n", max_n},
              {"ok", ok},
              {"checks", entries.size()},
              {"failed", failed},
              {"known_discrepancies", known},
              {"allow_known_discrepancies", allow_known},
              {"results", list}};
    r.exit_code = ok ? 0 : 1;
    return r;
}

// ---------------------------------------------------------------- output

std::string tsv_field(std::string s)
{
    for (char& c : s)
        if (c == '\t' || c == '\n')
            c = ' ';
    return s;
}

void emit(const Result& r, const std::string& format)
{
    if (format == "json") {
        std::cout << r.json.dump(2) << '\n';
        return;
    }
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? "\t" : "") << tsv_field(row[i]);
        std::cout << '\n';
    }
}

std::vector<std::string> split_checks(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    const auto& valid = model_check_groups();
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        if (std::find(valid.begin(), valid.end(), item) == valid.end())
            throw InputError("unknown check group " + item);
        out.push_back(item);
    }
    if (out.empty())
        throw InputError("no check groups given");
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Torus manifolds, equivariant connected sums and their rational models.\n"
                 "Output is deterministic; the TORUSCALC_SEED environment variable is not used."};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    std::function<Result()> action;

    // polytope
    auto* polytope = app.add_subcommand("polytope", "Face lattices and connected sums");
    polytope->require_subcommand(1);
    std::string type;
    int n = 0, k = 0, face_dim = 0, orbit_dim = 0, max_n = 6, dim = 0;
    auto* build = polytope->add_subcommand("build", "Standard lattices");
    build->add_option("--type", type)->required()->check(CLI::IsMember({"qn", "simplex", "cube"}));
    build->add_option("--n", n)->required();
    build->callback([&] { action = [&] { return polytope_build(type, n); }; });

    std::string lhs, rhs, pairing;
    auto* connect = polytope->add_subcommand("connect", "Connected sum along a face");
    connect->add_option("--lhs", lhs)->required();
    connect->add_option("--rhs", rhs)->required();
    connect->add_option("--face-dim", face_dim)->required();
    connect->add_option("--pairing", pairing, "JSON {left_face, right_face, pairing: [[l, r], ...]}")->required();
    connect->callback([&] { action = [&] { return polytope_connect(lhs, rhs, face_dim, pairing); }; });

    // charfun
    auto* charfun = app.add_subcommand("charfun", "Characteristic functions");
    charfun->require_subcommand(1);
    std::string xi;
    auto* validate = charfun->add_subcommand("validate", "Check the direct-summand condition on every face");
    validate->add_option("--polytope", lhs)->required();
    validate->add_option("--xi", xi)->required();
    validate->callback([&] { action = [&] { return charfun_validate(lhs, xi); }; });

    // betti
    auto* betti = app.add_subcommand("betti", "Betti numbers");
    betti->require_subcommand(1);
    std::string method;
    bool allow_known = false;
    auto* conn_sum = betti->add_subcommand("conn-sum", "S^2n #_{T^k} S^2n");
    conn_sum->add_option("--n", n)->required();
    conn_sum->add_option("--k", k)->required();
    conn_sum->add_option("--method", method)->required()->check(CLI::IsMember({"closed", "mv", "model", "all"}));
    conn_sum->add_flag("--allow-known-discrepancies", allow_known);
    conn_sum->callback([&] { action = [&] { return betti_conn_sum(n, k, method, allow_known); }; });

    auto* complement = betti->add_subcommand("complement", "Complement of a torus orbit in S^2n");
    complement->add_option("--n", n)->required();
    complement->add_option("--orbit-dim", orbit_dim)->required();
    complement->add_option("--method", method)->required()->check(CLI::IsMember({"wedge", "recursive"}));
    complement->callback([&] { action = [&] { return betti_complement(n, orbit_dim, method); }; });

    // cdga
    auto* cdga = app.add_subcommand("cdga", "Rational models of S^2n #_{T^k} S^2n");
    cdga->require_subcommand(1);
    std::string checks = "axioms,models,pullback,ideal,quotient,pi-xi,eta";
    auto* verify = cdga->add_subcommand("verify", "Machine-check the models");
    verify->add_option("--n", n)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--checks", checks, "Comma-separated check groups");
    verify->add_flag("--allow-known-discrepancies", allow_known);
    verify->callback([&] { action = [&] { return cdga_verify(n, k, split_checks(checks), allow_known); }; });

    std::string model;
    auto* dump = cdga->add_subcommand("dump", "Print one of the models");
    dump->add_option("--n", n)->required();
    dump->add_option("--k", k)->required();
    dump->add_option("--model", model)->required()->check(CLI::IsMember({"A", "B", "C", "E'", "B'", "D", "D/J"}));
    dump->callback([&] { action = [&] { return cdga_dump(n, k, model); }; });

    // ring
    auto* ring = app.add_subcommand("ring", "Rational cohomology rings");
    ring->require_subcommand(1);
    auto* quasitoric = ring->add_subcommand("quasitoric", "Ring of M(P, xi)");
    quasitoric->add_option("--polytope", lhs)->required();
    quasitoric->add_option("--xi", xi)->required();
    quasitoric->callback([&] {
        action = [&] {
            return ring_result(quasitoric_ring(lattice_from_json(read_json_file(lhs, "lattice")),
                                               charfun_from_json(read_json_file(xi, "characteristic function"))));
        };
    });
    auto* sphere = ring->add_subcommand("sphere", "Ring of a sphere");
    sphere->add_option("--dim", dim)->required();
    sphere->callback([&] { action = [&] { return ring_result(sphere_ring(dim)); }; });
    auto* ring_model = ring->add_subcommand("model", "Ring of S^2n #_{T^k} S^2n");
    ring_model->add_option("--n", n)->required();
    ring_model->add_option("--k", k)->required();
    ring_model->callback([&] { action = [&] { return ring_result(ring_from_cdga(model_A(n, k), "mu")); }; });
    auto* rconnect = ring->add_subcommand("connect", "R(M, N) of a connected sum");
    rconnect->add_option("--lhs", lhs)->required();
    rconnect->add_option("--rhs", rhs)->required();
    rconnect->callback([&] { action = [&] { return ring_result(connected_sum_ring(read_ring(lhs), read_ring(rhs))); }; });
    auto* requi = ring->add_subcommand("equivariant-connect", "R(M, N, T^k)");
    requi->add_option("--lhs", lhs)->required();
    requi->add_option("--rhs", rhs)->required();
    requi->add_option("--n", n)->required();
    requi->add_option("--k", k)->required();
    requi->callback([&] {
        action = [&] { return ring_result(equivariant_connected_sum_ring(read_ring(lhs), read_ring(rhs), n, k)); };
    });
    auto* info = ring->add_subcommand("info", "Betti numbers and pairing of a ring");
    info->add_option("--ring", lhs)->required();
    info->callback([&] { action = [&] { return ring_info(lhs); }; });

    // verify
    auto* verify_group = app.add_subcommand("verify", "Invariant suite");
    verify_group->require_subcommand(1);
    auto* all = verify_group->add_subcommand("all", "Run every invariant check");
    all->add_option("--max-n", max_n)->check(CLI::Range(2, 8));
    all->add_flag("--allow-known-discrepancies", allow_known);
    all->callback([&] { action = [&] { return verify_all(max_n, allow_known); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Result r = action();
        emit(r, format);
        return r.exit_code;
    } catch (const std::invalid_argument& e) {
        // Format, surgery, characteristic and ring errors.
        std::cerr << Json{{"error", e.what()}, {"kind", "malformed-input"}}.dump() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << Json{{"error", e.what()}, {"kind", "malformed-input"}}.dump() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << Json{{"error", e.what()}, {"kind", "malformed-input"}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", e.what()}, {"kind", "internal-error"}}.dump(2) << '\n';
        return 1;
    }
}
