#include "equitree/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace equitree {

namespace {

std::vector<DegreeBound> sorted_t_list(std::vector<DegreeBound> list) {
    if (list.empty()) throw std::invalid_argument("sweep needs a nonempty t list");
    std::sort(list.begin(), list.end(), [](const DegreeBound& x, const DegreeBound& y) {
        if (x.is_unbounded()) return false;
        if (y.is_unbounded()) return true;
        return x.value() < y.value();
    });
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
}

SweepRow compute_row(int m, int n, int q, DegreeBound t, const SweepOptions& options) {
    SweepRow row;
    row.m = m;
    row.n = n;
    row.q = q;
    row.t = t;
    const Params p(m, n, q);
    row.a = p.a;
    row.r = p.r;

    if (p.a >= 1) {
        if (auto clause = condition_A(m, n, q))
            row.cond_a = clause_str(*clause);
        else if (auto swapped = condition_A(n, m, q))
            row.cond_a = clause_str(*swapped);
        if (auto clause = condition_B(m, n, q))
            row.cond_b = clause_str(*clause);
        else if (auto swapped = condition_B(n, m, q))
            row.cond_b = clause_str(*swapped);
        row.kvector = enumerate_tree(p, t).has_value();
    } else {
        row.kvector = true;  // q > m+n: singleton classes, trivially feasible
    }
    row.closed_form = decide_equitable_tree(m, n, q, t, false).feasible;

    bool oracle_known = false, oracle_value = false;
    if (m + n <= options.oracle_limit) {
        SearchConfig cfg;
        cfg.node_budget = options.node_budget;
        cfg.equitable = true;
        cfg.t = t;
        const auto result = oracle_tree(complete_bipartite(m, n).graph, q, cfg);
        if (result.status == SearchStatus::budget_exhausted) {
            row.oracle = OracleColumn::budget;
        } else {
            oracle_known = true;
            oracle_value = result.status == SearchStatus::found;
            row.oracle = oracle_value ? OracleColumn::yes : OracleColumn::no;
        }
    }

    row.agree = row.closed_form == row.kvector &&
                (!oracle_known || oracle_value == row.closed_form) &&
                row.oracle != OracleColumn::budget;
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
    if (options.max_sum < 1) throw std::invalid_argument("max_sum must be >= 1");
    if (options.max_q < 1) throw std::invalid_argument("max_q must be >= 1");
    const auto t_list = sorted_t_list(options.t_list);

    struct Task {
        int m, n, q;
        DegreeBound t;
    };
    std::vector<Task> tasks;
    for (int m = 0; m <= options.max_sum; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= options.max_sum; ++n)
            for (int q = 1; q <= options.max_q; ++q)
                for (const auto& t : t_list) tasks.push_back({m, n, q, t});

    std::vector<SweepRow> rows(tasks.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            rows[i] = compute_row(tasks[i].m, tasks[i].n, tasks[i].q, tasks[i].t, options);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                rows[i] =
                    compute_row(tasks[i].m, tasks[i].n, tasks[i].q, tasks[i].t, options);
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    return rows;
}

std::string sweep_csv_header() {
    return "m,n,q,t,a,r,condA,condB,closed_form,kvector,oracle,agree";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    auto bool_str = [](bool b) { return b ? "true" : "false"; };
    std::string out = sweep_csv_header() + "\n";
    for (const auto& row : rows) {
        out += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
               std::to_string(row.q) + "," + row.t.str() + "," +
               std::to_string(row.a) + "," + std::to_string(row.r) + "," +
               row.cond_a + "," + row.cond_b + "," + bool_str(row.closed_form) + "," +
               bool_str(row.kvector) + ",";
        switch (row.oracle) {
            case OracleColumn::yes: out += "true"; break;
            case OracleColumn::no: out += "false"; break;
            case OracleColumn::skipped: out += "skipped"; break;
            case OracleColumn::budget: out += "budget"; break;
        }
        out += ",";
        out += bool_str(row.agree);
        out += "\n";
    }
    return out;
}

}  // namespace equitree
