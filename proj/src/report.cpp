#include "slopecert/report.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "slopecert/steps.hpp"

namespace slopecert {

using nlohmann::json;

std::string report_timestamp() {
    // Byte-identical reports need a stable timestamp; honor the
    // reproducible-builds convention and fall back to a fixed value.
    if (const char* e = std::getenv("SOURCE_DATE_EPOCH")) return e;
    if (const char* e = std::getenv("SLOPECERT_TIMESTAMP")) return e;
    return "0";
}

std::string config_hash(const std::map<std::string, std::string>& config) {
    // FNV-1a over the canonical key=value rendering
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& [k, v] : config) {
        for (char c : k + "=" + v + ";") {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

static json record_json(const CheckRecord& r) {
    json j;
    j["id"] = r.id;
    j["params"] = r.params;
    j["status"] = r.status;
    if (!r.required.empty()) j["required"] = r.required;
    if (!r.achieved.empty()) j["achieved"] = r.achieved;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

std::string Report::to_json() const {
    json j;
    j["schema"] = "slopecert-report/1";
    j["tool"] = {{"name", "slopecert"}, {"version", SLOPECERT_VERSION}};
    j["timestamp"] = report_timestamp();
    j["config"] = config;
    j["config_hash"] = config_hash(config);

    json checks_json = json::array();
    for (const auto& r : checks.records()) checks_json.push_back(record_json(r));
    j["checks"] = checks_json;

    json fails = json::array();
    for (const auto& r : checks.failures()) fails.push_back(record_json(r));
    j["failures"] = fails;

    if (!certificates.empty()) {
        json certs = json::array();
        for (const auto& c : certificates) certs.push_back(json::parse(c.to_json()));
        j["certificates"] = certs;
    }

    j["summary"] = {{"total", checks.total()},
                    {"pass", checks.count("pass")},
                    {"fail", checks.count("fail")},
                    {"degenerate", checks.count("degenerate")}};
    return j.dump(2) + "\n";
}

}  // namespace slopecert
