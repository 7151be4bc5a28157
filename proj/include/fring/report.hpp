#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fring/properties.hpp"
#include "fring/ring.hpp"

namespace fring {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct RingSummary {
    std::string expression;
    std::string label;
    Index size = 0;
    std::string fingerprint;
    std::size_t center_size = 0;
    std::size_t idempotent_count = 0;
    std::optional<BasisInfo> basis;
    std::optional<AxiomReport> axioms;

    bool operator==(const RingSummary&) const = default;
};

RingSummary summarize(const FiniteRing& r, const std::string& expression);

struct RingReport {
    RingSummary ring;
    std::vector<Verdict> verdicts;
    /// Search output: "right-mccoy REFUTED, right-central-mccoy NOT_REFUTED" style separators.
    std::vector<std::string> highlights;

    bool operator==(const RingReport&) const = default;
};

/// One assertion inside a verification entry.
struct CheckResult {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
    std::optional<Verdict> verdict;

    bool operator==(const CheckResult&) const = default;
};

struct EntryReport {
    std::string key;
    std::vector<std::string> anchors;
    std::string title;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool pass() const;
    bool operator==(const EntryReport&) const = default;
};

struct Report {
    int schema_version = kSchemaVersion;
    std::string tool_version = kToolVersion;
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::vector<RingReport> rings;
    std::vector<EntryReport> entries;
    /// Failed expectations from `check --expect`.
    std::vector<std::string> failures;
    /// Elapsed times are written only when set, so default reports are
    /// byte-identical across runs.
    bool include_timing = false;

    bool all_pass() const;
    bool operator==(const Report&) const = default;
};

std::string polarity_name(Polarity p);

nlohmann::json to_json(const Verdict& v, bool include_timing = false);
Verdict verdict_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string dump_json(const Report& r);
/// Markdown rendering derived from the JSON form.
std::string render_markdown(const Report& r);

}  // namespace fring
