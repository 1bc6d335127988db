#include "kleinian/report.hpp"

#include <ctime>

#include "json_detail.hpp"

namespace kleinian {

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

int Report::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::Pass;
    return n;
}

int Report::failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::Fail;
    return n;
}

int Report::inconclusive() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::Inconclusive;
    return n;
}

std::string Report::to_json(bool pretty) const {
    detail::Json j;
    j["tool"] = "kleinian";
    j["version"] = kVersion;
    j["command"] = command;
    if (timestamp) j["timestamp"] = *timestamp;
    detail::Json arr = detail::Json::array();
    for (const auto& c : checks) {
        detail::Json cj;
        cj["id"] = c.id;
        cj["status"] = status_str(c.status);
        cj["details"] = c.details;
        if (c.result_json) cj["result"] = detail::parse_json(*c.result_json);
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"pass", passed()}, {"fail", failed()}, {"inconclusive", inconclusive()}};
    return pretty ? j.dump(2) : j.dump();
}

std::string Report::to_text() const {
    std::string out = "kleinian " + std::string(kVersion) + " — " + command + "\n";
    for (const auto& c : checks) {
        std::string tag = c.status == CheckStatus::Pass
                              ? "PASS"
                              : (c.status == CheckStatus::Fail ? "FAIL" : "INCONCLUSIVE");
        out += "[" + tag + "] " + c.id;
        if (!c.details.empty()) out += ": " + c.details;
        out += "\n";
    }
    out += "summary: " + std::to_string(passed()) + " passed, " + std::to_string(failed()) +
           " failed, " + std::to_string(inconclusive()) + " inconclusive\n";
    return out;
}

std::string current_timestamp_rfc3339() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace kleinian
