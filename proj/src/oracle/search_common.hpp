#pragma once

// Bitmask search shared by the serial and parallel drivers.
//
// Vertex v with color c (0 for witness color 1, 1 for color 2) is bit 2v+c of
// the doubled graph. Two bits are bichromatic neighbors when the vertices are
// adjacent and the colors differ, monochromatic neighbors when the colors
// agree. A branch set with its coloring is then a set of bits, connected via
// bichromatic neighbors, holding at most one bit per vertex.

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "oddminor/oracle.hpp"

namespace oddminor::search {

using Bits = std::uint64_t;
using VMask = std::uint32_t;
using Clock = std::chrono::steady_clock;

inline Bits bit(int x) { return Bits{1} << x; }

// Vertex mask of a bit set.
inline VMask collapse(Bits s) {
    Bits x = (s | (s >> 1)) & 0x5555555555555555ULL;
    x = (x | (x >> 1)) & 0x3333333333333333ULL;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFULL;
    return static_cast<VMask>(x);
}

// Both bits of every vertex in v.
inline Bits spread(VMask v) {
    Bits x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & 0x5555555555555555ULL;
    return x | (x << 1);
}

struct Doubled {
    int n = 0;
    std::vector<Bits> bich;  // per bit
    std::vector<Bits> mono;  // per bit
    std::vector<VMask> adj;  // per vertex

    explicit Doubled(const Graph& g);
};

struct Limits {
    Clock::time_point deadline;
    std::uint64_t node_limit;
};

struct Control {
    Limits limits;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    // Lowest task index that found a model; higher tasks stop.
    std::atomic<long> best_task{-1};
};

class Searcher {
public:
    Searcher(const Doubled& d, int r, Control& ctl, long task = -1) : d_(d), r_(r), ctl_(ctl), task_(task) {}

    // Serial reference: whole tree in canonical order.
    bool run_all();
    // Task `index` of the first-level split (see task_count).
    bool run_task(int root, int index);
    // Tasks for a first set with minimum vertex root: the singleton visit
    // plus one per top-level extension bit.
    int task_count(int root) const;

    void flush();
    bool aborted() const { return aborted_; }
    const std::vector<Bits>& solution() const { return solution_; }

private:
    struct Frame {
        int k;
        int min_vertex;
        VMask allowed_v;
        Bits allowed;
    };

    bool place(int k, int prev_min);
    bool grow_root(int k, int m, Bits root);
    bool rec(const Frame& f, Bits s, Bits ext, Bits x, Bits mono, VMask nbr);
    bool visit(const Frame& f, Bits s, Bits mono, VMask nbr);
    bool tick();
    Frame frame(int k, int m) const;
    Bits top_ext(const Frame& f, Bits root) const;

    const Doubled& d_;
    int r_;
    Control& ctl_;
    long task_;
    std::vector<Bits> sets_;
    std::vector<VMask> nbrs_;
    VMask used_ = 0;
    std::vector<Bits> solution_;
    std::uint64_t local_nodes_ = 0;
    bool aborted_ = false;
};

// Decodes bit sets (ascending minimum vertex) into a verified model with
// connectors attached.
OddExpansionModel model_from_sets(const Graph& g, const Doubled& d, const std::vector<Bits>& sets);

Limits limits_from(const SearchBudget& budget);
void check_searchable(const Graph& g, std::size_t r, const SearchBudget& budget);

SearchOutcome run_serial(const Graph& g, std::size_t r, const Limits& limits);
SearchOutcome run_parallel(const Graph& g, std::size_t r, const Limits& limits, int jobs);

}  // namespace oddminor::search
