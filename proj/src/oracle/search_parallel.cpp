#include <omp.h>

#include <utility>

#include "search_common.hpp"

namespace oddminor {

namespace search {

SearchOutcome run_parallel(const Graph& g, std::size_t r, const Limits& limits, int jobs) {
    SearchOutcome out;
    if (r > g.order()) return out;
    const Doubled d(g);
    Control ctl{limits};
    const int ri = static_cast<int>(r);

    // Tasks in the serial visiting order: (first-set minimum, branch index).
    std::vector<std::pair<int, int>> tasks;
    {
        Searcher probe(d, ri, ctl);
        for (int m = 0; m < d.n && d.n - m >= ri; ++m)
            for (int i = 0, count = probe.task_count(m); i < count; ++i) tasks.emplace_back(m, i);
    }
    const long count = static_cast<long>(tasks.size());
    std::vector<std::vector<Bits>> found(tasks.size());
    std::atomic<bool> aborted{false};

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long t = 0; t < count; ++t) {
        const long best = ctl.best_task.load();
        if ((best >= 0 && best < t) || ctl.out_of_budget.load()) continue;
        Searcher s(d, ri, ctl, t);
        s.run_task(tasks[t].first, tasks[t].second);
        s.flush();
        if (s.aborted()) aborted = true;
        if (!s.solution().empty()) {
            found[t] = s.solution();
            long cur = ctl.best_task.load();
            while ((cur < 0 || t < cur) && !ctl.best_task.compare_exchange_weak(cur, t)) {
            }
        }
    }

    out.nodes = ctl.nodes.load();
    if (const long best = ctl.best_task.load(); best >= 0) {
        out.status = SearchStatus::found;
        out.model = model_from_sets(g, d, found[best]);
    } else if (aborted || ctl.out_of_budget.load()) {
        out.status = SearchStatus::timeout;
    }
    return out;
}

}  // namespace search

SearchOutcome search_parallel(const Graph& g, std::size_t r, const SearchBudget& budget, int jobs) {
    search::check_searchable(g, r, budget);
    return search::run_parallel(g, r, search::limits_from(budget), jobs < 1 ? 1 : jobs);
}

}  // namespace oddminor
