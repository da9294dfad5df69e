#pragma once

#include "prodobs/graph.hpp"
#include "prodobs/matching.hpp"
#include "prodobs/numeric.hpp"
#include "prodobs/observability.hpp"
#include "prodobs/structure.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace prodobs {

inline constexpr int kSchemaVersion = 1;

struct AnalysisReport {
    GraphSummary summary;
    SccDecomposition scc;
    ParentClassification parents;
    MaximumMatching matching;
    std::optional<std::vector<std::vector<NodeIndex>>> cycle_family;
    std::optional<Contraction> contraction;
    ObserverPlan plan;
};

AnalysisReport analyze(const DiGraph& g);

// JSON renderers. Every top-level document carries "schema_version".
nlohmann::json to_json(const DiGraph& g, const AnalysisReport& report);
nlohmann::json to_json(const DiGraph& g, const ObserverPlan& plan);
nlohmann::json to_json(const DiGraph& g, const std::vector<NodeIndex>& observers, const ObservabilityVerdict& verdict);
nlohmann::json to_json(const ProductRecoveryReport& report);
nlohmann::json to_json(const DiGraph& g, const CrossValidationReport& report, const std::vector<RankResult>& ranks);
nlohmann::json to_json(const EstimationTrace& trace, const WeightedRealization& r);

std::string to_table(const DiGraph& g, const AnalysisReport& report);

// "step,msee" rows with a header line.
std::string trace_to_csv(const EstimationTrace& trace);

std::vector<std::string> labels_of(const DiGraph& g, const std::vector<NodeIndex>& nodes);

} // namespace prodobs
