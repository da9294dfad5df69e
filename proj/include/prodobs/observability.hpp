#pragma once

#include "prodobs/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace prodobs {

enum class CoverReason { UnmatchedCover, ParentSccCover };

struct CoverTag {
    CoverReason reason = CoverReason::UnmatchedCover;
    std::size_t component = 0;  // SCC index, meaningful for ParentSccCover

    bool operator==(const CoverTag&) const = default;
};

struct ObserverPlan {
    std::vector<NodeIndex> observers;  // ascending
    std::map<NodeIndex, std::vector<CoverTag>> reasons;
    std::size_t num_unmatched_covered = 0;
    std::size_t num_parent_sccs_covered = 0;
    std::vector<std::string> warnings;

    bool parent_scc_only(NodeIndex v) const;
};

// Some node cannot reach any observer. The witness lies in a parent
// component (sink SCC) that contains no observer.
struct OutputConnectivity {
    NodeIndex witness = 0;
    std::size_t unreached = 0;
};

// No disjoint family of cycles and observer-terminated paths spans the graph.
struct SpanningDeficiency {
    std::size_t uncovered = 0;
};

using FailedCondition = std::variant<OutputConnectivity, SpanningDeficiency>;

struct ObservabilityVerdict {
    std::optional<FailedCondition> failed;

    bool observable() const noexcept { return !failed.has_value(); }
};

// Observers = unmatched nodes of the canonical matching plus the smallest
// node of every parent SCC that holds no unmatched node. Parent nodes are
// always unmatched and need no extra handling.
ObserverPlan plan_observers(const DiGraph& g);

// Reverse reachability for output connectivity, then a maximum matching on
// the bipartite graph augmented with one private sink per observer.
// Throws UnknownObserver for an out-of-range index or unknown label.
ObservabilityVerdict check_observable(const DiGraph& g, const std::vector<NodeIndex>& observers);
ObservabilityVerdict check_observable(const DiGraph& g, const std::vector<std::string>& observer_labels);

// The spanning condition alone: how many nodes the best disjoint cover by
// cycles and observer-terminated paths leaves out (0 = satisfied).
std::size_t spanning_deficiency(const DiGraph& g, const std::vector<NodeIndex>& observers);

std::vector<NodeIndex> resolve_observers(const DiGraph& g, const std::vector<std::string>& labels);

struct GraphSummary {
    std::size_t n = 0;
    std::size_t edges = 0;
    bool connected = false;
    std::size_t s_rank = 0;
    bool spanning_cycle_family = false;
    std::size_t unmatched = 0;
    std::size_t parent_sccs = 0;
    std::size_t parent_nodes = 0;
    std::size_t planned_observers = 0;

    std::size_t parents() const noexcept { return parent_sccs + parent_nodes; }
};

GraphSummary summarize(const DiGraph& g);

struct ProductRecoveryReport {
    GraphSummary left;
    GraphSummary right;
    GraphSummary product;
    std::vector<std::string> product_unmatched;
    // Product parent count equals the product of the factor counts.
    bool parent_formula_applicable = false;
    bool parent_formula_holds = false;
    // Some factor has a spanning cycle family, so the product should be
    // fully matched.
    bool unmatched_recovery_applicable = false;
    bool unmatched_recovery_holds = false;
    // Some factor has unmatched nodes while the product has none.
    bool recovered = false;
    std::vector<std::string> warnings;
};

ProductRecoveryReport verify_product_recovery(const DiGraph& g1, const DiGraph& g2);

} // namespace prodobs
