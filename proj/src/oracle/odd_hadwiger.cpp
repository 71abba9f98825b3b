#include <algorithm>

#include "oddminor/constructions.hpp"
#include "oddminor/errors.hpp"
#include "search_common.hpp"

namespace oddminor {

std::string_view to_string(ExactStatus s) {
    switch (s) {
    case ExactStatus::exact: return "exact";
    case ExactStatus::lower_bound_only: return "lower_bound_only";
    case ExactStatus::timeout: return "timeout";
    }
    return "?";
}

namespace {

OddExpansionModel edge_model(const Edge& e) {
    OddExpansionModel m;
    m.trees = {BranchTree::singleton(e.u), BranchTree::singleton(e.v)};
    m.coloring = {{e.u, 1}, {e.v, 1}};
    m.connectors = std::map<TreePair, Connector>{{{0, 1}, {e.u, e.v}}};
    return m;
}

}  // namespace

ExactResult odd_hadwiger(const Graph& g, const SearchBudget& budget, const SearchOptions& opts) {
    if (g.order() == 0) throw ParameterError("the empty graph has no odd clique minor");
    ExactResult res;
    if (g.size() == 0) {
        res.value = 1;
        res.certificate = identity_model(1);
        res.refutation_order = 2;
        return res;
    }
    if (is_bipartite(g)) {
        res.value = 2;
        res.certificate = edge_model(g.edges().front());
        res.refutation_order = 3;
        return res;
    }
    if (g.order() > std::min(budget.max_vertices, kSearchVertexCap)) {
        res.status = ExactStatus::lower_bound_only;
        res.certificate = *odd_cycle_model(g);
        res.value = 3;
        return res;
    }

    search::check_searchable(g, 1, budget);
    const auto limits = search::limits_from(budget);
    res.value = 2;
    res.certificate = edge_model(g.edges().front());
    for (std::size_t r = 3;; ++r) {
        const search::Limits left{limits.deadline, limits.node_limit - std::min(res.nodes, limits.node_limit)};
        SearchOutcome step = (opts.strict || opts.jobs <= 1) ? search::run_serial(g, r, left)
                                                             : search::run_parallel(g, r, left, opts.jobs);
        res.nodes += step.nodes;
        if (step.status == SearchStatus::found) {
            res.value = r;
            res.certificate = std::move(*step.model);
        } else if (step.status == SearchStatus::absent) {
            res.refutation_order = r;
            return res;
        } else {
            res.status = ExactStatus::timeout;
            return res;
        }
    }
}

}  // namespace oddminor
