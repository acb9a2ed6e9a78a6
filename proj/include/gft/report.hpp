#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gft {

struct CheckItem {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string witness; // e.g. the arg-min grid point, formatted
};

// Structured pass/fail result for any verification run.
// pass is the AND over checks; notes carry non-gating diagnostics.
struct Report {
    bool pass = true;
    std::vector<CheckItem> checks;
    std::string notes;

    void add(CheckItem item)
    {
        pass = pass && item.pass;
        checks.push_back(std::move(item));
    }

    nlohmann::json to_json() const;
    std::string table() const; // human-readable rendering
};

} // namespace gft
