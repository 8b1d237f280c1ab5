#pragma once

#include <map>
#include <string>
#include <vector>

namespace mzvlab {

// One verification record. Text bodies are deterministic for a fixed config
// and cache; wall-clock timings are kept out of the default rendering.
struct CheckRecord {
    std::string family;
    std::string params;
    std::string residual;  // short decimal, "0", or "exact"
    bool pass = false;
    bool conjectural = false;
    bool flagged = false;  // boundary case resolved by convention
    std::string note;
    double elapsed_ms = 0.0;
};

struct Report {
    std::string title;
    std::map<std::string, std::string> provenance;  // digits, rows, truncation, ...
    std::vector<CheckRecord> checks;

    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }

    std::size_t failed_proved() const;
    std::size_t failed_conjectural() const;

    // Stable plain-text body; timings appear only when requested.
    std::string text(bool with_timings = false) const;
};

// "pass" / "FAIL", with conjectural checks rendered as "ok?" / "open?".
std::string verdict_word(const CheckRecord& rec);

}  // namespace mzvlab
