#pragma once

// Registry of known disagreements between the tabulated closed form and the
// independent computations. Loaded from an embedded data file.

#include <optional>
#include <string>
#include <vector>

#include "toruscalc/betti.hpp"

namespace toruscalc {

struct KnownDiscrepancy {
    std::string id;
    int n = 0;
    int k = 0;
    std::string method;
    std::vector<std::string> reference_methods;
    BettiVector closed;
    BettiVector reference;
    std::string description;
};

/// A model check that fails because the printed statement it tests is false.
struct KnownCheckFailure {
    std::string id;
    std::string group;
    std::string check;
    int min_k = 1;
    std::string description;
};

struct DiscrepancyRegistry {
    std::vector<KnownDiscrepancy> betti;
    std::vector<KnownCheckFailure> checks;
};

DiscrepancyRegistry parse_discrepancy_registry(const std::string& json_text);
const DiscrepancyRegistry& discrepancy_registry();
const std::vector<KnownDiscrepancy>& known_discrepancies();
std::optional<KnownDiscrepancy> find_known_discrepancy(int n, int k);
std::optional<KnownCheckFailure> find_known_check_failure(const std::string& group, const std::string& check, int k);

}  // namespace toruscalc
