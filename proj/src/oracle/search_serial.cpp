#include <algorithm>
#include <deque>

#include "oddminor/constructions.hpp"
#include "oddminor/errors.hpp"
#include "search_common.hpp"

namespace oddminor {

std::string_view to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::timeout: return "timeout";
    }
    return "?";
}

namespace search {

Doubled::Doubled(const Graph& g) : n(static_cast<int>(g.order())), bich(2 * g.order()), mono(2 * g.order()), adj(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex u : g.neighbors(v)) {
            bich[2 * v] |= bit(2 * u + 1);
            bich[2 * v + 1] |= bit(2 * u);
            mono[2 * v] |= bit(2 * u);
            mono[2 * v + 1] |= bit(2 * u + 1);
            adj[v] |= VMask{1} << u;
        }
}

Searcher::Frame Searcher::frame(int k, int m) const {
    const VMask all = d_.n == 32 ? ~VMask{0} : (VMask{1} << d_.n) - 1;
    const VMask upto_m = (VMask{2} << m) - 1;  // wraps to all ones at m = 31
    const VMask allowed_v = all & ~used_ & ~upto_m;
    return {k, m, allowed_v, spread(allowed_v)};
}

Bits Searcher::top_ext(const Frame& f, Bits root) const {
    return d_.bich[std::countr_zero(root)] & f.allowed;
}

void Searcher::flush() {
    if (local_nodes_) ctl_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
}

bool Searcher::tick() {
    if (++local_nodes_ < 1024) return false;
    const auto total = ctl_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (ctl_.out_of_budget.load(std::memory_order_relaxed) || total > ctl_.limits.node_limit ||
        Clock::now() > ctl_.limits.deadline) {
        ctl_.out_of_budget.store(true);
        aborted_ = true;
    }
    if (task_ >= 0) {
        const long best = ctl_.best_task.load(std::memory_order_relaxed);
        if (best >= 0 && best < task_) return true;
    }
    return aborted_;
}

bool Searcher::run_all() { return place(0, -1); }

bool Searcher::place(int k, int prev_min) {
    for (int m = prev_min + 1; m < d_.n; ++m) {
        if (used_ & (VMask{1} << m)) continue;
        const VMask rest = ~used_ & ~((VMask{1} << m) - 1) & (d_.n == 32 ? ~VMask{0} : (VMask{1} << d_.n) - 1);
        if (std::popcount(rest) < r_ - k) break;
        if (grow_root(k, m, bit(2 * m))) return true;
        // The first set may keep color 1 at its minimum: swapping all colors
        // preserves a model.
        if (k > 0 && grow_root(k, m, bit(2 * m + 1))) return true;
    }
    return false;
}

bool Searcher::grow_root(int k, int m, Bits root) {
    const Frame f = frame(k, m);
    const int rb = std::countr_zero(root);
    return rec(f, root, top_ext(f, root), bit(rb ^ 1), d_.mono[rb], d_.adj[m]);
}

namespace {

// Future sets need one vertex each among the free vertices, and one adjacent
// to every placed set. Both counts only shrink as s grows.
bool admissible(const std::vector<VMask>& nbrs, VMask free, int need) {
    if (std::popcount(free) < need) return false;
    for (VMask nb : nbrs)
        if (std::popcount(nb & free) < need) return false;
    return true;
}

}  // namespace

bool Searcher::rec(const Frame& f, Bits s, Bits ext, Bits x, Bits mono, VMask nbr) {
    if (tick()) return true;
    const int need = r_ - f.k - 1;
    if (!admissible(nbrs_, f.allowed_v & ~collapse(s), need)) return false;
    if (visit(f, s, mono, nbr)) return true;
    while (ext) {
        const int xb = std::countr_zero(ext);
        ext &= ext - 1;
        const Bits b = bit(xb), p = bit(xb ^ 1);
        const Bits ns = s | b, nx = x | p, rest = ext & ~p;
        const Bits next = rest | (d_.bich[xb] & f.allowed & ~(ns | rest | nx));
        if (rec(f, ns, next, nx, mono | d_.mono[xb], nbr | d_.adj[xb >> 1])) return true;
        x |= b;
    }
    return false;
}

bool Searcher::visit(const Frame& f, Bits s, Bits mono, VMask nbr) {
    for (Bits placed : sets_)
        if (!(mono & placed)) return false;
    if (f.k + 1 == r_) {
        solution_ = sets_;
        solution_.push_back(s);
        return true;
    }
    const VMask sv = collapse(s);
    if (std::popcount(nbr & f.allowed_v & ~sv) < r_ - f.k - 1) return false;
    sets_.push_back(s);
    nbrs_.push_back(nbr);
    used_ |= sv;
    const bool stop = place(f.k + 1, f.min_vertex);
    used_ &= ~sv;
    nbrs_.pop_back();
    sets_.pop_back();
    return stop;
}

int Searcher::task_count(int root) const {
    const Frame f = frame(0, root);
    return std::popcount(top_ext(f, bit(2 * root))) + 1;
}

bool Searcher::run_task(int root, int index) {
    const Frame f = frame(0, root);
    const Bits s = bit(2 * root);
    Bits x = bit(2 * root + 1);
    Bits ext = top_ext(f, s);
    if (index == 0) {
        if (tick()) return true;
        if (!admissible(nbrs_, f.allowed_v, r_ - 1)) return false;
        return visit(f, s, d_.mono[2 * root], d_.adj[root]);
    }
    // Replay the top-level loop of rec up to branch index-1.
    for (int i = 1;; ++i) {
        const int xb = std::countr_zero(ext);
        ext &= ext - 1;
        const Bits b = bit(xb), p = bit(xb ^ 1);
        if (i == index) {
            const Bits ns = s | b, nx = x | p, rest = ext & ~p;
            const Bits next = rest | (d_.bich[xb] & f.allowed & ~(ns | rest | nx));
            return rec(f, ns, next, nx, d_.mono[2 * root] | d_.mono[xb], d_.adj[root] | d_.adj[xb >> 1]);
        }
        x |= b;
    }
}

OddExpansionModel model_from_sets(const Graph& g, const Doubled& d, const std::vector<Bits>& sets) {
    OddExpansionModel m;
    for (Bits s : sets) {
        BranchTree tree;
        // BFS over bichromatic edges inside s.
        const int root = std::countr_zero(s);
        Bits seen = bit(root);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int b = queue.front();
            queue.pop_front();
            tree.vertices.push_back(static_cast<Vertex>(b >> 1));
            m.coloring[static_cast<Vertex>(b >> 1)] = (b & 1) ? 2 : 1;
            for (Bits nb = d.bich[b] & s & ~seen; nb; nb &= nb - 1) {
                const int c = std::countr_zero(nb);
                seen |= bit(c);
                tree.edges.push_back(Edge::normalized(static_cast<Vertex>(b >> 1), static_cast<Vertex>(c >> 1)));
                queue.push_back(c);
            }
        }
        tree.normalize();
        m.trees.push_back(std::move(tree));
    }
    attach_connectors(g, m);
    if (auto v = verify_odd_expansion(g, m, {.require_connectors = true}); !v)
        throw ConsistencyError("search produced an invalid model: " + v.summary(m.clique_order()));
    return m;
}

Limits limits_from(const SearchBudget& budget) {
    const auto span = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.time_limit));
    return {Clock::now() + span, budget.node_limit};
}

void check_searchable(const Graph& g, std::size_t r, const SearchBudget& budget) {
    if (r == 0) throw ParameterError("clique order must be at least 1");
    if (budget.max_vertices == 0 || budget.time_limit <= 0 || budget.node_limit == 0)
        throw ParameterError("search budget fields must be positive");
    const std::size_t cap = std::min(budget.max_vertices, kSearchVertexCap);
    if (g.order() > cap)
        throw ParameterError("graph has " + std::to_string(g.order()) + " vertices; the search handles at most " +
                             std::to_string(cap));
}

SearchOutcome run_serial(const Graph& g, std::size_t r, const Limits& limits) {
    SearchOutcome out;
    if (r > g.order()) return out;
    const Doubled d(g);
    Control ctl{limits};
    Searcher s(d, static_cast<int>(r), ctl);
    s.run_all();
    s.flush();
    out.nodes = ctl.nodes.load();
    if (!s.solution().empty()) {
        out.status = SearchStatus::found;
        out.model = model_from_sets(g, d, s.solution());
    } else if (s.aborted()) {
        out.status = SearchStatus::timeout;
    }
    return out;
}

}  // namespace search

SearchOutcome search_serial(const Graph& g, std::size_t r, const SearchBudget& budget) {
    search::check_searchable(g, r, budget);
    return search::run_serial(g, r, search::limits_from(budget));
}

SearchOutcome has_odd_clique_minor(const Graph& g, std::size_t r, const SearchBudget& budget,
                                   const SearchOptions& opts) {
    if (opts.strict || opts.jobs <= 1) return search_serial(g, r, budget);
    return search_parallel(g, r, budget, opts.jobs);
}

}  // namespace oddminor
