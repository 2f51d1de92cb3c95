#include "toruscalc/charfun.hpp"

#include <string>

namespace toruscalc {

CharacteristicFunction CharacteristicFunction::from_ints(int n, const std::map<int, std::vector<long>>& values)
{
    CharacteristicFunction xi;
    xi.target_rank = n;
    for (const auto& [facet, v] : values) {
        IntVector iv;
        for (long x : v)
            iv.emplace_back(x);
        xi.assignment.emplace(facet, std::move(iv));
    }
    return xi;
}

namespace {

void check_vectors(const FaceLattice& p, const CharacteristicFunction& xi)
{
    if (xi.target_rank != p.ambient_dim())
        throw CharacteristicError("characteristic function rank differs from the lattice dimension");
    for (int facet : p.facets()) {
        auto it = xi.assignment.find(facet);
        if (it == xi.assignment.end())
            throw CharacteristicError("no characteristic vector for facet " + std::to_string(facet));
        if (static_cast<int>(it->second.size()) != xi.target_rank)
            throw CharacteristicError("characteristic vector of facet " + std::to_string(facet) +
                                      " has the wrong length");
        if (!is_primitive(it->second))
            throw CharacteristicError("characteristic vector of facet " + std::to_string(facet) +
                                      " is not primitive");
    }
}

}  // namespace

ValidationReport validate_characteristic(const FaceLattice& p, const CharacteristicFunction& xi)
{
    check_vectors(p, xi);
    ValidationReport report;
    for (const auto& face : p.faces()) {
        if (face.facets.empty())
            continue;
        std::vector<IntVector> vectors;
        for (int facet : face.facets)
            vectors.push_back(xi[facet]);
        if (!is_direct_summand(vectors))
            report.violating_faces.push_back(face.id);
    }
    report.ok = report.violating_faces.empty();
    return report;
}

CharacteristicFunction merge_characteristic(const FaceLattice& p1, const CharacteristicFunction& xi1,
                                            const FaceLattice& p2, const CharacteristicFunction& xi2,
                                            const SurgerySpec& spec)
{
    check_vectors(p1, xi1);
    check_vectors(p2, xi2);
    for (const auto& [l, r] : spec.facet_pairing)
        if (xi1[l] != xi2[r])
            throw CharacteristicError("paired facets " + std::to_string(l) + " and " + std::to_string(r) +
                                      " carry different characteristic vectors");

    const ConnectedSum sum = face_connected_sum_detailed(p1, p2, spec);
    CharacteristicFunction merged;
    merged.target_rank = xi1.target_rank;
    for (const auto& [old_id, new_id] : sum.left_facet_map)
        merged.assignment[new_id] = xi1[old_id];
    for (const auto& [old_id, new_id] : sum.right_facet_map)
        merged.assignment.emplace(new_id, xi2[old_id]);
    return merged;
}

CharacteristicFunction standard_orbit_characteristic(int n)
{
    CharacteristicFunction xi;
    xi.target_rank = n;
    for (int i = 1; i <= n; ++i) {
        IntVector e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        xi.assignment.emplace(i, std::move(e));
    }
    return xi;
}

TorusManifoldDescriptor::TorusManifoldDescriptor(FaceLattice lattice, CharacteristicFunction xi)
    : lattice_(std::move(lattice)), xi_(std::move(xi))
{
    const ValidationReport report = validate_characteristic(lattice_, xi_);
    if (!report.ok)
        throw CharacteristicError("characteristic function fails the direct-summand condition at face " +
                                  std::to_string(report.violating_faces.front()));
    for (const auto& face : lattice_.faces()) {
        std::vector<IntVector> generators;
        for (int facet : face.facets)
            generators.push_back(xi_[facet]);
        isotropy_.push_back(std::move(generators));
    }
}

std::size_t fixed_point_count(const TorusManifoldDescriptor& d)
{
    return d.lattice().vertex_count();
}

std::vector<std::pair<int, IntVector>> characteristic_submanifolds(const TorusManifoldDescriptor& d)
{
    std::vector<std::pair<int, IntVector>> out;
    for (int facet : d.lattice().facets())
        out.emplace_back(facet, d.xi()[facet]);
    return out;
}

}  // namespace toruscalc
