#pragma once

#include <string>
#include <utility>
#include <vector>

namespace equitree {

using Edge = std::pair<int, int>;  // stored normalized: first < second

// Simple undirected graph on dense 0-based vertex ids.
// Immutable after construction; safe to share across threads.
// The 0-vertex graph is rejected; a single isolated vertex is fine.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    int max_degree() const;
    int component_count() const;
    // acyclicity via |E| == |V| - #components
    bool is_forest() const;

    // optional per-vertex provenance labels (empty when unlabeled)
    const std::vector<std::string>& labels() const { return labels_; }
    Graph relabeled(std::vector<std::string> labels) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

struct BipartitionMeta {
    std::vector<int> x_vertices;
    std::vector<int> y_vertices;
    int m() const { return static_cast<int>(x_vertices.size()); }
    int n() const { return static_cast<int>(y_vertices.size()); }
    int total() const { return m() + n(); }
};

struct BipartiteGraph {
    Graph graph;
    BipartitionMeta meta;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new id -> original id
};

// K_{m,n} with the fixed layout X = 0..m-1, Y = m..m+n-1.
BipartiteGraph complete_bipartite(int m, int n);
Graph complete(int k);
Graph join(const Graph& g, const Graph& h);
Graph add_isolated(const Graph& g, int count);
InducedSubgraph induced(const Graph& g, std::vector<int> vertices);

}  // namespace equitree
