#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddminor/errors.hpp"
#include "oddminor/expansion_model.hpp"
#include "oddminor/graph.hpp"

namespace oddminor {

/// Thrown when a factor model handed to a product construction does not
/// verify on its factor graph.
class ModelInputError : public Error {
public:
    ModelInputError(const std::string& what, Verdict verdict) : Error(what), verdict_(std::move(verdict)) {}
    const Verdict& verdict() const noexcept { return verdict_; }

private:
    Verdict verdict_;
};

inline constexpr const char* kOutsidePreconditions = "degenerate-factor";

/// n singleton trees colored 1: the odd K_n expansion in K_n.
OddExpansionModel identity_model(std::size_t n);

/// K_3 expansion in any graph containing an odd cycle (one singleton and two
/// paths around the cycle), or nullopt when g is bipartite.
std::optional<OddExpansionModel> odd_cycle_model(const Graph& g);

/// Fills every missing connector with the least monochromatic cross edge
/// (ordered by normalized edge). Throws ConsistencyError if some pair has none.
void attach_connectors(const Graph& g, OddExpansionModel& m);

/// Least monochromatic host edge between trees i and j, oriented tree i to
/// tree j. Uses the stored connector when the model has one for the pair.
std::optional<Connector> pair_connector(const Graph& g, const OddExpansionModel& m, std::size_t i, std::size_t j);

/// Product coloring: (u, v) gets 1 when cg(u) == ch(v), else 2. Keys of the
/// result are flattened ids with `second_order` = |V(H)|.
WitnessColoring witness_product_coloring(const WitnessColoring& cg, const WitnessColoring& ch,
                                         const std::vector<ProductVertex>& domain, std::size_t second_order);

enum class GridMode { cartesian, strong };

/// Spanning trees of every S_i □ T_j inside G □ H (or G ⊠ H), the product
/// coloring over all cells, and a monochromatic cross edge for every pair of
/// cells sharing a row or a column.
struct GridForest {
    std::size_t s = 0;
    std::size_t t = 0;
    std::size_t second_order = 0;
    std::vector<BranchTree> cells;  // index i * t + j
    WitnessColoring coloring;
    std::map<TreePair, Connector> cross_edges;  // keyed by cell indices, lower first

    std::size_t cell(std::size_t i, std::size_t j) const { return i * t + j; }
};

GridForest product_grid_forest(const Graph& g, const OddExpansionModel& mg, const Graph& h,
                               const OddExpansionModel& mh, GridMode mode);

/// A model whose host is K_s □ K_t.
struct BaseModel {
    std::size_t s = 0;
    std::size_t t = 0;
    OddExpansionModel model;
};

/// Order s+t-2 model in K_s □ K_t: singletons (u_1, v_k) for k < t and, for
/// every other row, a star centered on its last column. Centers colored 2.
BaseModel cartesian_complete_model(std::size_t s, std::size_t t);

/// cartesian_complete_model when s, t >= 2, else the identity model of the
/// larger factor (K_1 □ K_t is K_t).
BaseModel default_cartesian_base(std::size_t s, std::size_t t);

/// Lifts `base` (a model in K_s □ K_t) to G □ H by replacing each base vertex
/// (i, j) with the grid cell S_i □ T_j.
OddExpansionModel cartesian_lift(const Graph& g, const OddExpansionModel& mg, const Graph& h,
                                 const OddExpansionModel& mh, const BaseModel& base);

/// Order d(n-2)+2 model in hamming_graph(n, d).
OddExpansionModel hamming_model(std::size_t n, std::size_t d);

/// Order s*t model in G ⊠ H or G ∘ H (kind must be strong or lexicographic).
OddExpansionModel strong_model(const Graph& g, const OddExpansionModel& mg, const Graph& h,
                               const OddExpansionModel& mh, ProductKind kind);

/// Model in star(r) ⊠ star(t) of order r+1 when r == t, else min(r,t)+2.
OddExpansionModel star_model(std::size_t r, std::size_t t);
std::size_t star_model_order(std::size_t r, std::size_t t);

/// Order t+2 model in K_t × K_3, t >= 6.
OddExpansionModel direct_k3_model(std::size_t t);

/// Largest tree count allowed by the singleton/edge-tree counting argument for
/// K_t × K_3: max over S in 0..3, D in 0..6-2S of floor((3t-2D-S)/3)+D+S.
std::size_t direct_k3_upper_bound(std::size_t t);

/// One connector-table entry in 1-based (row, column) coordinates of K_t × K_3.
struct TableEdge {
    int tree_a, tree_b;
    int row1, col1, row2, col2;
};

/// The connector list for the eight fixed trees of direct_k3_model exactly as
/// published (including its two entries that are not product edges), and the
/// list the construction actually uses.
const std::vector<TableEdge>& direct_k3_published_connectors();
std::vector<TableEdge> direct_k3_connector_table(std::size_t t);

/// Order t*floor(s/3) model in K_t × K_s, t >= 4, s >= 3.
OddExpansionModel direct_general_model(std::size_t t, std::size_t s);

/// Moves a model in A × B (any product) to the coordinate-swapped host B × A.
OddExpansionModel swap_product_coordinates(const OddExpansionModel& m, std::size_t first_order,
                                           std::size_t second_order);

/// Outcome of best_lower_bound. `model` is empty exactly when no
/// construction applies.
struct BestBound {
    std::size_t order = 0;
    std::optional<OddExpansionModel> model;
    std::string route;
};

BestBound best_lower_bound(const Graph& g, const OddExpansionModel& mg, const Graph& h, const OddExpansionModel& mh,
                           ProductKind kind);

}  // namespace oddminor
