#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "oddminor/expansion_model.hpp"
#include "oddminor/graph.hpp"

namespace oddminor {

struct SearchBudget {
    std::size_t max_vertices = 16;
    double time_limit = 60.0;  // seconds
    std::uint64_t node_limit = 100'000'000;
};

/// Hard limit of the bitmask search: the doubled graph must fit in 64 bits.
inline constexpr std::size_t kSearchVertexCap = 32;

struct SearchOptions {
    /// Worker threads for the first-level fan-out.
    int jobs = 1;
    /// Forces the serial search (canonical certificates).
    bool strict = false;
};

enum class SearchStatus { found, absent, timeout };
std::string_view to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::absent;
    std::optional<OddExpansionModel> model;
    std::uint64_t nodes = 0;
};

/// Searches for an odd K_r expansion. Branch sets are enumerated by
/// ascending minimum vertex; each is a connected set whose bichromatic edges
/// span it. Throws ParameterError when r == 0 or the graph exceeds the budget.
SearchOutcome has_odd_clique_minor(const Graph& g, std::size_t r, const SearchBudget& budget = {},
                                   const SearchOptions& opts = {});

/// Plain recursive search; the reference for the parallel one.
SearchOutcome search_serial(const Graph& g, std::size_t r, const SearchBudget& budget);
/// Fans out over the first branch set. Returns the same certificate as
/// search_serial when neither run hits the budget.
SearchOutcome search_parallel(const Graph& g, std::size_t r, const SearchBudget& budget, int jobs);

enum class ExactStatus { exact, lower_bound_only, timeout };
std::string_view to_string(ExactStatus s);

struct ExactResult {
    ExactStatus status = ExactStatus::exact;
    std::size_t value = 0;
    OddExpansionModel certificate;
    /// For exact results: the order whose search was exhausted without success.
    std::optional<std::size_t> refutation_order;
    std::uint64_t nodes = 0;
};

/// Odd Hadwiger number. Edgeless graphs give 1 and bipartite graphs 2
/// without search; otherwise r = 3, 4, ... until a search comes back absent.
/// Graphs above budget.max_vertices get lower_bound_only from an odd cycle.
ExactResult odd_hadwiger(const Graph& g, const SearchBudget& budget = {}, const SearchOptions& opts = {});

}  // namespace oddminor
