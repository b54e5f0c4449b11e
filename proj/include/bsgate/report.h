#ifndef BSGATE_REPORT_H
#define BSGATE_REPORT_H

#include <optional>
#include <string>

#include "json.hpp"

#include "bsgate/anglesolve.h"
#include "bsgate/postselect.h"
#include "bsgate/run_config.h"

namespace bsgate {

/// Deterministic JSON text: keys sorted, two-space indent, floats printed
/// with 17 significant digits (%.17g), trailing newline.
std::string dump_json(const nlohmann::json &doc);

/// Formats one double the way dump_json does.
std::string format_double(double x);

struct VerifyOutcome {
    nlohmann::json document;
    bool passed = false;
};

/// Orthogonality, block conditions and target match for the configured network.
VerifyOutcome verify_network(const RunConfig &config);

nlohmann::json gate_report_json(const GateReport &report);

/// The simulate document: network summary, one row per configured input and
/// an optional superposition section.
nlohmann::json simulate_document(const RunConfig &config);

/// Flattens a simulate document: one row per (input, semantics, outcome).
std::string simulate_csv(const nlohmann::json &document);

nlohmann::json enumerate_document(const GateTarget &target, const std::optional<ConditionSet> &conditions);
nlohmann::json search_document(const SearchResult &result, double tolerance);

}  // namespace bsgate

#endif
