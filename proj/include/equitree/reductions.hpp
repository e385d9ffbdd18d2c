#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equitree/oracle.hpp"

namespace equitree {

struct Region {
    std::string name;
    std::vector<int> vertices;
};

// A reduction gadget: the graph, where the source vertices landed (they
// keep their ids), and labeled vertex groups for auditing.
struct GadgetOutput {
    Graph graph;
    std::vector<int> source_vertex_map;  // original id -> gadget id
    std::vector<Region> regions;
};

enum class GadgetKind { npt, npi, pad };

// Attach t private copies of K_{2q-1} to every vertex of g; the result
// has a (q,t)-tree-coloring iff g is properly q-colorable.
GadgetOutput gadget_npt(const Graph& g, int q, int t);

// Join g with K_q; the result has a (q,inf)-tree-coloring iff g is
// properly q-colorable.
GadgetOutput gadget_npi(const Graph& g, int q);

// Add q*|V(g)| isolated vertices; the result has an equitable
// (q,t)-tree-coloring iff g has a (q,t)-tree-coloring.
GadgetOutput pad_equitable(const Graph& g, int q);

enum class HarnessStatus { ok, budget_exhausted };

struct EquivalenceReport {
    HarnessStatus status = HarnessStatus::ok;
    bool left = false;   // colorability of the source instance
    bool right = false;  // oracle decision on the gadget
    bool agree = false;
    std::uint64_t nodes_left = 0;
    std::uint64_t nodes_right = 0;
};

// Desk-scale equivalence check of a gadget construction. Both sides run
// on the exhaustive oracles only; the degree bound t matters for npt
// (finite) and pad, and is ignored for npi. Budget exhaustion is
// reported, never silently converted into an answer.
EquivalenceReport check_reduction(const Graph& g, GadgetKind kind, int q,
                                  DegreeBound t,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace equitree
