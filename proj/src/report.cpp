#include "prodobs/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace prodobs {

namespace {

using nlohmann::json;

json summary_json(const GraphSummary& s)
{
    return {{"n", s.n},
            {"edges", s.edges},
            {"connected", s.connected},
            {"s_rank", s.s_rank},
            {"spanning_cycle_family", s.spanning_cycle_family},
            {"unmatched", s.unmatched},
            {"parent_sccs", s.parent_sccs},
            {"parent_nodes", s.parent_nodes},
            {"parents", s.parents()},
            {"planned_observers", s.planned_observers}};
}

json finite_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? sep : "") + items[i];
    return out;
}

json plan_body(const DiGraph& g, const ObserverPlan& plan)
{
    json reasons = json::object();
    for (const auto& [v, tags] : plan.reasons) {
        json list = json::array();
        for (const auto& t : tags) {
            if (t.reason == CoverReason::UnmatchedCover)
                list.push_back({{"kind", "UnmatchedCover"}});
            else
                list.push_back({{"kind", "ParentSccCover"}, {"component", t.component}});
        }
        reasons[g.label(v)] = std::move(list);
    }
    return {{"observers", labels_of(g, plan.observers)},
            {"reasons", std::move(reasons)},
            {"num_unmatched_covered", plan.num_unmatched_covered},
            {"num_parent_sccs_covered", plan.num_parent_sccs_covered},
            {"warnings", plan.warnings}};
}

} // namespace

std::vector<std::string> labels_of(const DiGraph& g, const std::vector<NodeIndex>& nodes)
{
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (auto v : nodes)
        out.push_back(g.label(v));
    return out;
}

AnalysisReport analyze(const DiGraph& g)
{
    AnalysisReport r;
    r.summary = summarize(g);
    r.scc = scc_decompose(g);
    r.parents = classify_parents(g, r.scc);
    r.matching = maximum_matching(g);
    r.cycle_family = extract_cycle_family(g, r.matching);
    r.contraction = find_contraction(g);
    r.plan = plan_observers(g);
    return r;
}

json to_json(const DiGraph& g, const AnalysisReport& r)
{
    json components = json::array();
    for (const auto& c : r.scc.components)
        components.push_back(labels_of(g, c));
    json condensation = json::array();
    for (const auto& e : r.scc.condensation)
        condensation.push_back({e.from, e.to});
    json parent_sccs = json::array();
    for (const auto& c : r.parents.parent_sccs)
        parent_sccs.push_back(labels_of(g, c));

    json links = json::array();
    for (const auto& e : r.matching.matched_links)
        links.push_back({g.label(e.from), g.label(e.to)});
    json cycles = nullptr;
    if (r.cycle_family) {
        cycles = json::array();
        for (const auto& c : *r.cycle_family)
            cycles.push_back(labels_of(g, c));
    }
    json contraction = nullptr;
    if (r.contraction)
        contraction = {{"kappa", labels_of(g, r.contraction->kappa)},
                       {"neighborhood", labels_of(g, r.contraction->neighborhood)}};

    return {{"schema_version", kSchemaVersion},
            {"graph", {{"n", r.summary.n}, {"edges", r.summary.edges}, {"connected", r.summary.connected}}},
            {"scc",
             {{"components", std::move(components)},
              {"condensation", std::move(condensation)},
              {"parent_sccs", std::move(parent_sccs)},
              {"parent_nodes", labels_of(g, r.parents.parent_nodes)},
              {"parent_count", r.parents.total()}}},
            {"matching",
             {{"s_rank", r.matching.s_rank},
              {"matched_links", std::move(links)},
              {"unmatched", labels_of(g, r.matching.unmatched_nodes)},
              {"spanning_cycle_family", r.summary.spanning_cycle_family},
              {"cycle_family", std::move(cycles)},
              {"contraction", std::move(contraction)}}},
            {"observer_plan", plan_body(g, r.plan)}};
}

json to_json(const DiGraph& g, const ObserverPlan& plan)
{
    auto body = plan_body(g, plan);
    body["schema_version"] = kSchemaVersion;
    return body;
}

json to_json(const DiGraph& g, const std::vector<NodeIndex>& observers, const ObservabilityVerdict& verdict)
{
    json failed = nullptr;
    if (verdict.failed) {
        if (const auto* oc = std::get_if<OutputConnectivity>(&*verdict.failed))
            failed = {{"kind", "OutputConnectivity"}, {"witness", g.label(oc->witness)}, {"unreached", oc->unreached}};
        else if (const auto* sd = std::get_if<SpanningDeficiency>(&*verdict.failed))
            failed = {{"kind", "SpanningDeficiency"}, {"uncovered", sd->uncovered}};
    }
    return {{"schema_version", kSchemaVersion},
            {"observers", labels_of(g, observers)},
            {"observable", verdict.observable()},
            {"failed_condition", std::move(failed)}};
}

json to_json(const ProductRecoveryReport& r)
{
    return {{"schema_version", kSchemaVersion},
            {"left", summary_json(r.left)},
            {"right", summary_json(r.right)},
            {"product", summary_json(r.product)},
            {"product_unmatched", r.product_unmatched},
            {"parent_formula",
             {{"applicable", r.parent_formula_applicable},
              {"holds", r.parent_formula_holds},
              {"expected", r.left.parents() * r.right.parents()},
              {"actual", r.product.parents()}}},
            {"unmatched_recovery",
             {{"applicable", r.unmatched_recovery_applicable}, {"holds", r.unmatched_recovery_holds}}},
            {"recovered", r.recovered},
            {"warnings", r.warnings}};
}

json to_json(const DiGraph& g, const CrossValidationReport& report, const std::vector<RankResult>& ranks)
{
    json entries = json::array();
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const auto& e = report.entries[i];
        json entry = {{"seed", e.seed},
                      {"numeric_rank", e.numeric_rank},
                      {"numeric_observable", e.numeric_observable},
                      {"agrees", e.agrees}};
        if (i < ranks.size())
            entry["condition_number"] = finite_or_null(ranks[i].condition_number);
        entries.push_back(std::move(entry));
    }
    return {{"schema_version", kSchemaVersion},
            {"n", g.size()},
            {"structural_observable", report.structural_observable},
            {"agreements", report.agreements},
            {"disagreements", report.disagreements},
            {"entries", std::move(entries)}};
}

json to_json(const EstimationTrace& trace, const WeightedRealization& r)
{
    return {{"schema_version", kSchemaVersion},
            {"trials", trace.trials},
            {"steps", trace.steps},
            {"noise_std_process", trace.noise_std_process},
            {"noise_std_measurement", trace.noise_std_measurement},
            {"spectral_radius", r.spectral_radius},
            {"step_size", trace.step_size},
            {"discrete_spectral_radius", trace.discrete_spectral_radius},
            {"seed", r.seed},
            {"precision_limited_from",
             trace.precision_limited_from ? json(*trace.precision_limited_from) : json(nullptr)},
            {"warnings", r.warnings},
            {"msee", trace.msee}};
}

std::string to_table(const DiGraph& g, const AnalysisReport& r)
{
    std::ostringstream out;
    auto set = [&](const std::vector<NodeIndex>& nodes) { return "{" + join(labels_of(g, nodes), ", ") + "}"; };

    out << "nodes: " << r.summary.n << "  edges: " << r.summary.edges
        << "  connected: " << (r.summary.connected ? "yes" : "no") << "\n\n";
    out << "strongly connected components\n";
    for (std::size_t c = 0; c < r.scc.count(); ++c)
        out << "  [" << c << "] " << set(r.scc.components[c]) << '\n';
    out << "condensation:";
    for (const auto& e : r.scc.condensation)
        out << ' ' << e.from << "->" << e.to;
    out << "\nparent SCCs:";
    for (const auto& c : r.parents.parent_sccs)
        out << ' ' << set(c);
    out << "\nparent nodes: " << set(r.parents.parent_nodes) << "\n\n";

    out << "S-rank: " << r.matching.s_rank << " / " << r.summary.n << '\n';
    out << "matched links:";
    for (const auto& e : r.matching.matched_links)
        out << ' ' << g.label(e.from) << "->" << g.label(e.to);
    out << "\nunmatched nodes: " << set(r.matching.unmatched_nodes) << '\n';
    out << "spanning cycle family: ";
    if (r.cycle_family) {
        for (const auto& c : *r.cycle_family)
            out << set(c) << ' ';
        out << '\n';
    } else {
        out << "none\n";
    }
    if (r.contraction)
        out << "contraction: kappa " << set(r.contraction->kappa) << " -> N(kappa) "
            << set(r.contraction->neighborhood) << '\n';

    out << "\nobservers (" << r.plan.observers.size() << "): " << set(r.plan.observers) << '\n';
    for (const auto& [v, tags] : r.plan.reasons) {
        out << "  " << std::left << std::setw(10) << g.label(v);
        for (const auto& t : tags)
            out << (t.reason == CoverReason::UnmatchedCover ? " unmatched"
                                                            : " parent-scc[" + std::to_string(t.component) + "]");
        out << '\n';
    }
    for (const auto& w : r.plan.warnings)
        out << "warning: " << w << '\n';
    return out.str();
}

std::string trace_to_csv(const EstimationTrace& trace)
{
    std::ostringstream out;
    out << "step,msee\n" << std::setprecision(17);
    for (std::size_t k = 0; k < trace.msee.size(); ++k)
        out << k << ',' << trace.msee[k] << '\n';
    return out.str();
}

} // namespace prodobs
