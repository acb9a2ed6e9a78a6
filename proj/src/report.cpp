#include "gft/report.hpp"

#include <cstdio>
#include <sstream>

namespace gft {

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["pass"] = pass;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["value"] = c.value;
        jc["threshold"] = c.threshold;
        jc["pass"] = c.pass;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        j["checks"].push_back(std::move(jc));
    }
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

std::string Report::table() const
{
    std::ostringstream os;
    char buf[256];
    for (const auto& c : checks) {
        std::snprintf(buf, sizeof buf, "  [%s] %-42s value=%- .6g threshold=%- .6g %s\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                      c.threshold, c.witness.c_str());
        os << buf;
    }
    os << (pass ? "  => PASS" : "  => FAIL");
    if (!notes.empty()) os << "  (" << notes << ")";
    os << "\n";
    return os.str();
}

} // namespace gft
