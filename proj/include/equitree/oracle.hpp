#pragma once

#include <cstdint>
#include <optional>

#include "equitree/coloring.hpp"

namespace equitree {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000ULL;

struct SearchConfig {
    std::uint64_t node_budget = kDefaultNodeBudget;
    bool symmetry_breaking = true;
    bool equitable = false;
    DegreeBound t = DegreeBound::unbounded();
};

enum class SearchStatus { found, unsat, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::unsat;
    std::optional<Coloring> coloring;  // set iff status == found
    std::uint64_t nodes = 0;
};

// Exhaustive proper q-colorability. Vertices in id order; with symmetry
// breaking a vertex may use at most one color index beyond the highest
// used so far.
SearchResult oracle_proper(const Graph& g, int q,
                           std::uint64_t node_budget = kDefaultNodeBudget,
                           bool symmetry_breaking = true);

// Exhaustive proper + equitable q-colorability (a separate backtracker,
// kept independent of oracle_tree on purpose).
SearchResult oracle_proper_equitable(const Graph& g, int q,
                                     std::uint64_t node_budget = kDefaultNodeBudget,
                                     bool symmetry_breaking = true);

// Exhaustive (equitable) (q,t)-tree-colorability. Vertices in descending
// degree order (id tie-break); per-class union-find with rollback for
// cycle rejection, same-class degree counters for the t bound, and class
// size caps plus a remaining-capacity cut in equitable mode.
SearchResult oracle_tree(const Graph& g, int q, const SearchConfig& cfg = {});

}  // namespace equitree
