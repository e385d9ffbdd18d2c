#include "equitree/reductions.hpp"

#include <numeric>
#include <stdexcept>

namespace equitree {

namespace {

std::vector<std::string> source_labels(const Graph& g) {
    if (!g.labels().empty()) return g.labels();
    std::vector<std::string> labels(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels[v] = "G:v" + std::to_string(v);
    return labels;
}

std::vector<int> identity_map(int n) {
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), 0);
    return map;
}

Region source_region(int n) {
    return Region{"source", identity_map(n)};
}

}  // namespace

GadgetOutput gadget_npt(const Graph& g, int q, int t) {
    if (q < 2) throw std::invalid_argument("gadget_npt needs q >= 2");
    if (t < 1) throw std::invalid_argument("gadget_npt needs t >= 1");
    const int n = g.vertex_count();
    const int clique_size = 2 * q - 1;
    const int total = n + n * t * clique_size;

    std::vector<Edge> edges = g.edges();
    std::vector<std::string> labels = source_labels(g);
    labels.resize(total);
    std::vector<Region> regions;
    regions.push_back(source_region(n));

    int cursor = n;
    for (int v = 0; v < n; ++v) {
        for (int copy = 0; copy < t; ++copy) {
            const int index = v * t + copy;
            Region region;
            region.name = "clique" + std::to_string(index) + ":v" + std::to_string(v);
            for (int i = 0; i < clique_size; ++i) {
                const int id = cursor + i;
                region.vertices.push_back(id);
                labels[id] =
                    "clique" + std::to_string(index) + ":v" + std::to_string(i);
                edges.emplace_back(v, id);
                for (int j = i + 1; j < clique_size; ++j)
                    edges.emplace_back(id, cursor + j);
            }
            regions.push_back(std::move(region));
            cursor += clique_size;
        }
    }
    return GadgetOutput{Graph(total, std::move(edges), std::move(labels)),
                        identity_map(n), std::move(regions)};
}

GadgetOutput gadget_npi(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("gadget_npi needs q >= 1");
    const int n = g.vertex_count();
    Graph joined = join(g, complete(q));

    std::vector<std::string> labels = source_labels(g);
    labels.resize(n + q);
    Region block{"joinK" + std::to_string(q), {}};
    for (int i = 0; i < q; ++i) {
        labels[n + i] = "joinK" + std::to_string(q) + ":v" + std::to_string(i);
        block.vertices.push_back(n + i);
    }
    std::vector<Region> regions{source_region(n), std::move(block)};
    return GadgetOutput{joined.relabeled(std::move(labels)), identity_map(n),
                        std::move(regions)};
}

GadgetOutput pad_equitable(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("pad_equitable needs q >= 1");
    const int n = g.vertex_count();
    const int pad = q * n;
    Graph padded = add_isolated(g, pad);

    std::vector<std::string> labels = source_labels(g);
    labels.resize(n + pad);
    Region block{"padding", {}};
    for (int i = 0; i < pad; ++i) {
        labels[n + i] = "pad:v" + std::to_string(i);
        block.vertices.push_back(n + i);
    }
    std::vector<Region> regions{source_region(n), std::move(block)};
    return GadgetOutput{padded.relabeled(std::move(labels)), identity_map(n),
                        std::move(regions)};
}

EquivalenceReport check_reduction(const Graph& g, GadgetKind kind, int q,
                                  DegreeBound t, std::uint64_t node_budget) {
    SearchResult left, right;
    switch (kind) {
        case GadgetKind::npt: {
            if (t.is_unbounded())
                throw std::invalid_argument("npt needs a finite degree bound");
            left = oracle_proper(g, q, node_budget);
            SearchConfig cfg;
            cfg.node_budget = node_budget;
            cfg.t = t;
            right = oracle_tree(gadget_npt(g, q, t.value()).graph, q, cfg);
            break;
        }
        case GadgetKind::npi: {
            left = oracle_proper(g, q, node_budget);
            SearchConfig cfg;
            cfg.node_budget = node_budget;
            cfg.t = DegreeBound::unbounded();
            right = oracle_tree(gadget_npi(g, q).graph, q, cfg);
            break;
        }
        case GadgetKind::pad: {
            SearchConfig plain;
            plain.node_budget = node_budget;
            plain.t = t;
            left = oracle_tree(g, q, plain);
            SearchConfig equitable = plain;
            equitable.equitable = true;
            right = oracle_tree(pad_equitable(g, q).graph, q, equitable);
            break;
        }
    }
    EquivalenceReport report;
    report.nodes_left = left.nodes;
    report.nodes_right = right.nodes;
    if (left.status == SearchStatus::budget_exhausted ||
        right.status == SearchStatus::budget_exhausted) {
        report.status = HarnessStatus::budget_exhausted;
        return report;
    }
    report.left = left.status == SearchStatus::found;
    report.right = right.status == SearchStatus::found;
    report.agree = report.left == report.right;
    return report;
}

}  // namespace equitree
