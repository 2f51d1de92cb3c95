#include "toruscalc/registry.hpp"

#include "registry_data.hpp"
#include "toruscalc/json_io.hpp"

namespace toruscalc {

DiscrepancyRegistry parse_discrepancy_registry(const std::string& json_text)
{
    const Json j = parse_json(json_text, "discrepancy registry");
    if (!j.contains("entries") || !j.at("entries").is_array())
        throw FormatError("discrepancy registry: missing entries array");
    DiscrepancyRegistry out;
    try {
        for (const auto& e : j.at("entries")) {
            KnownDiscrepancy d;
            d.id = e.at("id").get<std::string>();
            d.n = e.at("n").get<int>();
            d.k = e.at("k").get<int>();
            d.method = e.at("method").get<std::string>();
            d.reference_methods = e.at("reference_methods").get<std::vector<std::string>>();
            d.closed = BettiVector(e.at("closed").get<std::vector<long>>());
            d.reference = BettiVector(e.at("reference").get<std::vector<long>>());
            d.description = e.value("description", "");
            out.betti.push_back(std::move(d));
        }
        for (const auto& e : j.value("check_entries", Json::array())) {
            KnownCheckFailure c;
            c.id = e.at("id").get<std::string>();
            c.group = e.at("group").get<std::string>();
            c.check = e.at("check").get<std::string>();
            c.min_k = e.value("min_k", 1);
            c.description = e.value("description", "");
            out.checks.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw FormatError(std::string("discrepancy registry: ") + ex.what());
    }
    return out;
}

const DiscrepancyRegistry& discrepancy_registry()
{
    static const DiscrepancyRegistry registry = parse_discrepancy_registry(detail::kKnownDiscrepancyJson);
    return registry;
}

const std::vector<KnownDiscrepancy>& known_discrepancies()
{
    return discrepancy_registry().betti;
}

std::optional<KnownDiscrepancy> find_known_discrepancy(int n, int k)
{
    for (const auto& d : known_discrepancies())
        if (d.n == n && d.k == k)
            return d;
    return std::nullopt;
}

std::optional<KnownCheckFailure> find_known_check_failure(const std::string& group, const std::string& check, int k)
{
    for (const auto& c : discrepancy_registry().checks)
        if (c.group == group && c.check == check && k >= c.min_k)
            return c;
    return std::nullopt;
}

}  // namespace toruscalc
