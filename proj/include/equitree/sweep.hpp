#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equitree/decider.hpp"
#include "equitree/oracle.hpp"

namespace equitree {

struct SweepOptions {
    int max_sum = 6;   // m + n bound, pairs with m + n >= 1
    int max_q = 3;
    std::vector<DegreeBound> t_list;  // sorted on use: finite ascending, inf last
    int oracle_limit = 12;            // skip the oracle column above this many vertices
    int jobs = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

enum class OracleColumn { yes, no, skipped, budget };

struct SweepRow {
    int m = 0, n = 0, q = 1;
    DegreeBound t = DegreeBound::unbounded();
    int a = 0, r = 0;
    std::string cond_a = "-";  // first firing clause over (m,n) then (n,m)
    std::string cond_b = "-";
    bool closed_form = false;  // decide_equitable_tree
    bool kvector = false;      // enumerate_tree (degenerate rows count as true)
    OracleColumn oracle = OracleColumn::skipped;
    bool agree = false;
};

// Rows in lexicographic (m, n, q, t) order, independent of the job count.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

std::string sweep_csv_header();
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace equitree
