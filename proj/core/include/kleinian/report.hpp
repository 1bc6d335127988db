#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kleinian {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string status_str(CheckStatus s);

struct Check {
    std::string id;
    CheckStatus status;
    std::string details;
    // Optional machine-readable result payload, already serialized as JSON
    // (e.g. "true", "5", "\"(0 + 1*i + 0*s2 + 2*i*s2)\"", or an object).
    std::optional<std::string> result_json;
};

// Deterministic run report. Field order in the JSON form is fixed, and two
// runs of the same command produce byte-identical JSON once the timestamp is
// suppressed.
struct Report {
    std::string command;
    std::optional<std::string> timestamp;  // RFC3339; omitted under --no-timestamp
    std::vector<Check> checks;

    int passed() const;
    int failed() const;
    int inconclusive() const;
    // 0 when nothing failed, 1 otherwise.
    int exit_code() const { return failed() == 0 ? 0 : 1; }

    std::string to_json(bool pretty = true) const;
    std::string to_text() const;
};

std::string current_timestamp_rfc3339();

}  // namespace kleinian
