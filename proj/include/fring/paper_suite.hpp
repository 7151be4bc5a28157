#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fring/report.hpp"

namespace fring {

struct SuiteOptions {
    unsigned workers = 1;
    /// Raises the degree bounds of the positive checks by one.
    bool slow = false;
};

struct SuiteEntry {
    std::string key;
    std::vector<std::string> anchors;
    std::string title;
    std::function<EntryReport(const SuiteOptions&)> run;
};

/// The verification entries in report order.
const std::vector<SuiteEntry>& paper_suite();

/// Runs the selected entries (all when `keys` is empty). Unknown keys throw
/// UsageError.
std::vector<EntryReport> run_paper_suite(const std::vector<std::string>& keys, const SuiteOptions& opts);

/// The rings of the implication-lattice audit, as ring expressions.
const std::vector<std::string>& lattice_zoo();

}  // namespace fring
