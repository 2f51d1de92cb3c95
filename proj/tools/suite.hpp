#pragma once

// The `verify all` invariant suite.

#include <string>
#include <vector>

#include "toruscalc/json_io.hpp"

namespace toruscalc::tool {

enum class Status { pass, fail, known };

struct SuiteEntry {
    std::string check;
    int n = 0;
    int k = 0;
    Status status = Status::pass;
    std::string detail;
    std::string registry_id;
};

std::vector<SuiteEntry> run_suite(int max_n);

const char* status_name(Status s);
/// Known discrepancies count as failures unless allowed.
bool suite_passed(const std::vector<SuiteEntry>& entries, bool allow_known);

}  // namespace toruscalc::tool
