#pragma once

#include <map>
#include <string>
#include <vector>

#include "slopecert/bigint.hpp"

namespace slopecert {

// One verified assertion at one parameter point.  required/achieved hold
// valuation bounds or exact values as decimal strings; never floating point.
struct CheckRecord {
    std::string id;
    std::string params;
    std::string status;  // pass | fail | degenerate
    std::string required;
    std::string achieved;
    std::string detail;

    static CheckRecord pass(std::string id, std::string params, std::string required,
                            std::string achieved) {
        return {std::move(id), std::move(params), "pass", std::move(required),
                std::move(achieved), ""};
    }
    static CheckRecord fail(std::string id, std::string params, std::string required,
                            std::string achieved, std::string detail = "") {
        return {std::move(id), std::move(params), "fail", std::move(required),
                std::move(achieved), std::move(detail)};
    }
    static CheckRecord degenerate(std::string id, std::string params, std::string why) {
        return {std::move(id), std::move(params), "degenerate", "", "", std::move(why)};
    }
};

class CheckList {
public:
    void add(CheckRecord r) { records_.push_back(std::move(r)); }
    void merge(const CheckList& o) {
        records_.insert(records_.end(), o.records_.begin(), o.records_.end());
    }

    // Convenience: record a valuation assertion achieved >= required.
    void require_at_least(const std::string& id, const std::string& params,
                          const Valuation& achieved, const Valuation& required,
                          const std::string& detail = "") {
        if (achieved >= required)
            add(CheckRecord::pass(id, params, required.str(), achieved.str()));
        else
            add(CheckRecord::fail(id, params, required.str(), achieved.str(), detail));
    }
    void require_equal_val(const std::string& id, const std::string& params,
                           const Valuation& achieved, const Valuation& expected) {
        if (achieved == expected)
            add(CheckRecord::pass(id, params, expected.str(), achieved.str()));
        else
            add(CheckRecord::fail(id, params, expected.str(), achieved.str()));
    }
    void require_true(const std::string& id, const std::string& params, bool ok,
                      const std::string& detail = "") {
        if (ok)
            add(CheckRecord::pass(id, params, "true", "true"));
        else
            add(CheckRecord::fail(id, params, "true", "false", detail));
    }

    const std::vector<CheckRecord>& records() const { return records_; }
    size_t total() const { return records_.size(); }
    size_t count(const std::string& status) const {
        size_t n = 0;
        for (const auto& r : records_)
            if (r.status == status) ++n;
        return n;
    }
    bool all_pass() const { return count("fail") == 0; }
    std::vector<CheckRecord> failures() const {
        std::vector<CheckRecord> out;
        for (const auto& r : records_)
            if (r.status == "fail") out.push_back(r);
        return out;
    }

private:
    std::vector<CheckRecord> records_;
};

struct StepCertificate;  // steps.hpp

// A full run report.  Serialization is deterministic: map-backed config,
// stable check ordering, exact decimal strings.  The timestamp honors
// SOURCE_DATE_EPOCH so identical configs yield byte-identical documents.
struct Report {
    std::map<std::string, std::string> config;
    CheckList checks;
    std::vector<StepCertificate> certificates;

    std::string to_json() const;
};

std::string report_timestamp();
std::string config_hash(const std::map<std::string, std::string>& config);

}  // namespace slopecert
