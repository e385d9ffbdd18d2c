#include "equitree/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace equitree {

namespace {

// Union-find without path compression so unions can be rolled back.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }
    void unite_roots(int ra, int rb) {
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        trail_.push_back({rb, ra, size_[ra]});
        parent_[rb] = ra;
        size_[ra] += size_[rb];
    }
    size_t mark() const { return trail_.size(); }
    void rollback(size_t mark) {
        while (trail_.size() > mark) {
            const auto& e = trail_.back();
            parent_[e.child] = e.child;
            size_[e.root] = e.old_size;
            trail_.pop_back();
        }
    }

private:
    struct Entry {
        int child, root, old_size;
    };
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<Entry> trail_;
};

// Shared bookkeeping for the equitable size constraints: caps classes at
// base+1, at most rem classes may reach base+1, and the summed deficit
// below base must stay coverable by unassigned vertices.
struct EquitableState {
    int base = 0, rem = 0, cap = 0;
    int over_cnt = 0;
    int deficit = 0;

    EquitableState(int vertex_count, int q) {
        base = vertex_count / q;
        rem = vertex_count % q;
        cap = base + (rem > 0 ? 1 : 0);
        deficit = base * q;
    }
    bool can_take(int class_size, int unassigned_after) const {
        if (class_size >= cap) return false;
        if (class_size == base && over_cnt >= rem) return false;
        const int new_deficit = deficit - (class_size < base ? 1 : 0);
        return new_deficit <= unassigned_after;
    }
    void take(int class_size_before) {
        if (class_size_before < base) --deficit;
        if (class_size_before + 1 == base + 1) ++over_cnt;
    }
    void undo(int class_size_before) {
        if (class_size_before < base) ++deficit;
        if (class_size_before + 1 == base + 1) --over_cnt;
    }
};

struct ProperSearcher {
    const Graph& g;
    int q;
    std::uint64_t budget;
    bool sb;
    bool check_equitable;

    std::vector<int> color;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    int used = 0;
    EquitableState eq;

    ProperSearcher(const Graph& graph, int q_in, std::uint64_t budget_in, bool sb_in,
                   bool equitable)
        : g(graph),
          q(q_in),
          budget(budget_in),
          sb(sb_in),
          check_equitable(equitable),
          color(graph.vertex_count(), -1),
          eq(graph.vertex_count(), q_in) {}

    bool dfs(int v, std::vector<int>& class_size) {
        if (v == g.vertex_count()) return true;
        const int limit = sb ? std::min(q, used + 1) : q;
        for (int c = 0; c < limit; ++c) {
            if (++nodes > budget) {
                budget_hit = true;
                return false;
            }
            bool conflict = false;
            for (int u : g.neighbors(v)) {
                if (u < v && color[u] == c) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            if (check_equitable &&
                !eq.can_take(class_size[c], g.vertex_count() - v - 1))
                continue;
            color[v] = c;
            if (check_equitable) eq.take(class_size[c]);
            ++class_size[c];
            const bool was_new = (c == used);
            if (was_new) ++used;
            if (dfs(v + 1, class_size)) return true;
            if (was_new) --used;
            --class_size[c];
            if (check_equitable) eq.undo(class_size[c]);
            color[v] = -1;
            if (budget_hit) return false;
        }
        return false;
    }

    SearchResult run() {
        std::vector<int> class_size(q, 0);
        SearchResult result;
        const bool found = dfs(0, class_size);
        result.nodes = nodes;
        if (found) {
            result.status = SearchStatus::found;
            result.coloring = Coloring(q, color);
        } else {
            result.status =
                budget_hit ? SearchStatus::budget_exhausted : SearchStatus::unsat;
        }
        return result;
    }
};

struct TreeSearcher {
    const Graph& g;
    int q;
    SearchConfig cfg;

    std::vector<int> order;
    std::vector<int> color;
    std::vector<int> class_size;
    std::vector<int> same_deg;
    RollbackUnionFind uf;
    EquitableState eq;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    int used = 0;
    std::vector<int> roots_scratch;

    TreeSearcher(const Graph& graph, int q_in, const SearchConfig& cfg_in)
        : g(graph),
          q(q_in),
          cfg(cfg_in),
          order(graph.vertex_count()),
          color(graph.vertex_count(), -1),
          class_size(q_in, 0),
          same_deg(graph.vertex_count(), 0),
          uf(graph.vertex_count()),
          eq(graph.vertex_count(), q_in) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const int da = graph.degree(a), db = graph.degree(b);
            return da != db ? da > db : a < b;
        });
    }

    bool dfs(int idx) {
        if (idx == g.vertex_count()) return true;
        const int v = order[idx];
        const int limit = cfg.symmetry_breaking ? std::min(q, used + 1) : q;
        for (int c = 0; c < limit; ++c) {
            if (++nodes > cfg.node_budget) {
                budget_hit = true;
                return false;
            }
            if (cfg.equitable) {
                if (!eq.can_take(class_size[c], g.vertex_count() - idx - 1)) continue;
            }
            // degree bound and cycle check over same-class neighbors
            int deg_v = 0;
            bool ok = true;
            roots_scratch.clear();
            for (int u : g.neighbors(v)) {
                if (color[u] != c) continue;
                ++deg_v;
                if (!cfg.t.admits(deg_v) || !cfg.t.admits(same_deg[u] + 1)) {
                    ok = false;
                    break;
                }
                const int root = uf.find(u);
                if (std::find(roots_scratch.begin(), roots_scratch.end(), root) !=
                    roots_scratch.end()) {
                    ok = false;  // two neighbors already connected: adding v closes a cycle
                    break;
                }
                roots_scratch.push_back(root);
            }
            if (!ok) continue;

            const size_t mark = uf.mark();
            color[v] = c;
            if (cfg.equitable) eq.take(class_size[c]);
            ++class_size[c];
            same_deg[v] = deg_v;
            for (int u : g.neighbors(v))
                if (color[u] == c) ++same_deg[u];
            for (int root : roots_scratch) uf.unite_roots(uf.find(v), root);
            const bool was_new = (c == used);
            if (was_new) ++used;

            if (dfs(idx + 1)) return true;

            if (was_new) --used;
            uf.rollback(mark);
            for (int u : g.neighbors(v))
                if (color[u] == c) --same_deg[u];
            same_deg[v] = 0;
            --class_size[c];
            if (cfg.equitable) eq.undo(class_size[c]);
            color[v] = -1;
            if (budget_hit) return false;
        }
        return false;
    }

    SearchResult run() {
        SearchResult result;
        const bool found = dfs(0);
        result.nodes = nodes;
        if (found) {
            result.status = SearchStatus::found;
            result.coloring = Coloring(q, color);
        } else {
            result.status =
                budget_hit ? SearchStatus::budget_exhausted : SearchStatus::unsat;
        }
        return result;
    }
};

}  // namespace

SearchResult oracle_proper(const Graph& g, int q, std::uint64_t node_budget,
                           bool symmetry_breaking) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (node_budget < 1) throw std::invalid_argument("node budget must be >= 1");
    ProperSearcher searcher(g, q, node_budget, symmetry_breaking, false);
    return searcher.run();
}

SearchResult oracle_proper_equitable(const Graph& g, int q,
                                     std::uint64_t node_budget,
                                     bool symmetry_breaking) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (node_budget < 1) throw std::invalid_argument("node budget must be >= 1");
    ProperSearcher searcher(g, q, node_budget, symmetry_breaking, true);
    return searcher.run();
}

SearchResult oracle_tree(const Graph& g, int q, const SearchConfig& cfg) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (cfg.node_budget < 1) throw std::invalid_argument("node budget must be >= 1");
    TreeSearcher searcher(g, q, cfg);
    return searcher.run();
}

}  // namespace equitree
