#include "equitree/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace equitree {

DegreeBound DegreeBound::finite(int t) {
    if (t < 1) throw std::invalid_argument("finite degree bound needs t >= 1");
    return DegreeBound(t);
}

int DegreeBound::value() const {
    if (is_unbounded()) throw std::logic_error("unbounded DegreeBound has no value");
    return t_;
}

std::string DegreeBound::str() const {
    return is_unbounded() ? "inf" : std::to_string(t_);
}

std::optional<DegreeBound> DegreeBound::parse(const std::string& s) {
    if (s == "inf") return unbounded();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    long v = 0;
    try {
        v = std::stol(s);
    } catch (...) {
        return std::nullopt;
    }
    if (v < 1) return std::nullopt;
    return finite(static_cast<int>(v));
}

Coloring::Coloring(int q_in, std::vector<int> assignment_in)
    : q(q_in), assignment(std::move(assignment_in)) {
    if (q < 1) throw std::invalid_argument("coloring needs q >= 1");
    for (int c : assignment)
        if (c < 0 || c >= q) throw std::invalid_argument("color index out of range");
}

std::vector<int> Coloring::class_sizes() const {
    std::vector<int> sizes(q, 0);
    for (int c : assignment) ++sizes[c];
    return sizes;
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::vector<std::vector<int>> out(q);
    for (size_t v = 0; v < assignment.size(); ++v)
        out[assignment[v]].push_back(static_cast<int>(v));
    return out;
}

Coloring restrict_to(const Coloring& coloring, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("duplicate vertex in restriction set");
    std::vector<int> assignment;
    assignment.reserve(vertices.size());
    for (int v : vertices) {
        if (v < 0 || v >= static_cast<int>(coloring.assignment.size()))
            throw std::invalid_argument("restriction vertex out of range");
        assignment.push_back(coloring.assignment[v]);
    }
    return Coloring(coloring.q, std::move(assignment));
}

bool is_equitable(const Coloring& coloring) {
    const auto sizes = coloring.class_sizes();
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *hi - *lo <= 1;
}

bool is_proper(const Graph& g, const Coloring& coloring) {
    if (static_cast<int>(coloring.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the graph");
    for (auto [u, v] : g.edges())
        if (coloring.assignment[u] == coloring.assignment[v]) return false;
    return true;
}

std::string VerifyReport::message() const {
    if (ok) return "ok";
    if (reason == FailReason::cycle)
        return "class " + std::to_string(failing_class + 1) + ": cycle (edge " +
               std::to_string(cycle_edge.first + 1) + "-" +
               std::to_string(cycle_edge.second + 1) + ")";
    return "class " + std::to_string(failing_class + 1) + ": degree " +
           std::to_string(offending_degree) + " exceeded (vertex " +
           std::to_string(offending_vertex + 1) + ")";
}

VerifyReport verify_tree_coloring(const Graph& g, const Coloring& coloring,
                                  DegreeBound t) {
    if (static_cast<int>(coloring.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the graph");

    const auto& color = coloring.assignment;
    std::vector<int> parent(g.vertex_count());
    for (int c = 0; c < coloring.q; ++c) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v];
            return v;
        };
        // cycle first: scan class edges in canonical (u < v ascending) order
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] != c) continue;
            for (int u : g.neighbors(v)) {
                if (u >= v || color[u] != c) continue;
                int ru = find(u), rv = find(v);
                if (ru == rv)
                    return VerifyReport{false, c, FailReason::cycle, Edge{u, v}, -1, -1};
                parent[ru] = rv;
            }
        }
        if (t.is_unbounded()) continue;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] != c) continue;
            int deg = 0;
            for (int u : g.neighbors(v))
                if (color[u] == c) ++deg;
            if (!t.admits(deg))
                return VerifyReport{false, c, FailReason::degree_exceeded,
                                    Edge{-1, -1}, v, deg};
        }
    }
    VerifyReport report;
    report.ok = true;
    return report;
}

ShapeCensus shape_census(const Coloring& coloring, const BipartitionMeta& meta,
                         int a) {
    if (a < 1) throw std::invalid_argument("shape census needs a >= 1");
    if (static_cast<int>(coloring.assignment.size()) != meta.total())
        throw std::invalid_argument("coloring does not cover the bipartition");

    std::vector<int> side(coloring.assignment.size(), -1);
    for (int v : meta.x_vertices) side.at(v) = 0;
    for (int v : meta.y_vertices) {
        if (side.at(v) == 0) throw std::invalid_argument("bipartition sides overlap");
        side[v] = 1;
    }
    for (int s : side)
        if (s < 0) throw std::invalid_argument("bipartition does not cover all vertices");

    std::vector<int> in_x(coloring.q, 0), in_y(coloring.q, 0);
    for (size_t v = 0; v < coloring.assignment.size(); ++v)
        (side[v] == 0 ? in_x : in_y)[coloring.assignment[v]]++;

    const std::array<std::pair<int, int>, 8> shapes = {{{a + 1, 0},
                                                        {a, 0},
                                                        {0, a + 1},
                                                        {0, a},
                                                        {a, 1},
                                                        {a - 1, 1},
                                                        {1, a},
                                                        {1, a - 1}}};
    ShapeCensus census;
    for (int c = 0; c < coloring.q; ++c) {
        bool matched = false;
        for (size_t s = 0; s < shapes.size(); ++s) {
            if (in_x[c] == shapes[s].first && in_y[c] == shapes[s].second) {
                ++census.k[s];
                matched = true;
                break;
            }
        }
        if (!matched) ++census.unclassified;
    }
    return census;
}

}  // namespace equitree
