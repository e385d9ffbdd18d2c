#include "equitree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace equitree {

Graph::Graph(int vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ <= 0) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge rejected");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("label count must match vertex count");
    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Graph::component_count() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    int components = n_;
    for (auto [u, v] : edges_) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components;
}

bool Graph::is_forest() const {
    return edge_count() == vertex_count() - component_count();
}

Graph Graph::relabeled(std::vector<std::string> labels) const {
    return Graph(n_, edges_, std::move(labels));
}

BipartiteGraph complete_bipartite(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("side sizes must be nonnegative");
    if (m + n == 0) throw std::invalid_argument("empty graph: m + n must be positive");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    BipartitionMeta meta;
    meta.x_vertices.resize(m);
    meta.y_vertices.resize(n);
    std::iota(meta.x_vertices.begin(), meta.x_vertices.end(), 0);
    std::iota(meta.y_vertices.begin(), meta.y_vertices.end(), m);
    return BipartiteGraph{Graph(m + n, std::move(edges)), std::move(meta)};
}

Graph complete(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(k) * (k - 1) / 2);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
    const int gn = g.vertex_count(), hn = h.vertex_count();
    std::vector<Edge> edges = g.edges();
    edges.reserve(edges.size() + h.edges().size() + static_cast<size_t>(gn) * hn);
    for (auto [u, v] : h.edges()) edges.emplace_back(gn + u, gn + v);
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < hn; ++v) edges.emplace_back(u, gn + v);
    return Graph(gn + hn, std::move(edges));
}

Graph add_isolated(const Graph& g, int count) {
    if (count < 0) throw std::invalid_argument("count must be nonnegative");
    return Graph(g.vertex_count() + count, g.edges());
}

InducedSubgraph induced(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("duplicate vertex in induced set");
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced set vertex out of range");
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    return InducedSubgraph{Graph(static_cast<int>(vertices.size()), std::move(edges)),
                           std::move(vertices)};
}

}  // namespace equitree
