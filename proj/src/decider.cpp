#include "equitree/decider.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace equitree {

namespace {

int ceil_div(int x, int d) { return (x + d - 1) / d; }

void require_nondegenerate(const Params& p) {
    if (p.a < 1)
        throw std::invalid_argument("degenerate parameters: a = 0 (q > m+n)");
}

BipartitionMeta meta_as_given(int m, int n) {
    BipartitionMeta meta;
    meta.x_vertices.resize(m);
    meta.y_vertices.resize(n);
    std::iota(meta.x_vertices.begin(), meta.x_vertices.end(), 0);
    std::iota(meta.y_vertices.begin(), meta.y_vertices.end(), m);
    return meta;
}

// X/Y roles exchanged but ids still those of the original K_{m,n}, so a
// realized coloring applies to the original graph directly.
BipartitionMeta meta_swapped(int m, int n) {
    BipartitionMeta meta;
    meta.x_vertices.resize(n);
    meta.y_vertices.resize(m);
    std::iota(meta.x_vertices.begin(), meta.x_vertices.end(), m);
    std::iota(meta.y_vertices.begin(), meta.y_vertices.end(), 0);
    return meta;
}

Coloring balanced_coloring(int vertex_count, int q) {
    std::vector<int> assignment(vertex_count);
    for (int v = 0; v < vertex_count; ++v) assignment[v] = v % q;
    return Coloring(q, std::move(assignment));
}

std::optional<Verdict> degenerate_verdict(int m, int n, int q, bool want_coloring) {
    const int total = m + n;
    if (q > total || m == 0 || n == 0) {
        Verdict v;
        v.feasible = true;
        v.clause = Clause::degenerate;
        v.a = total / q;
        v.r = total - q * v.a;
        if (want_coloring) v.coloring = balanced_coloring(total, q);
        return v;
    }
    return std::nullopt;
}

Coloring realize_impl(const BipartitionMeta& meta, int q, int a, const int* k,
                      int shape_count) {
    const auto shapes = shape_table(a);
    std::vector<int> assignment(meta.total(), -1);
    size_t xi = 0, yi = 0;
    int color = 0;
    for (int s = 0; s < shape_count; ++s) {
        for (int rep = 0; rep < k[s]; ++rep) {
            for (int i = 0; i < shapes[s].first; ++i) {
                if (xi >= meta.x_vertices.size())
                    throw std::logic_error("realize ran out of X vertices");
                assignment[meta.x_vertices[xi++]] = color;
            }
            for (int i = 0; i < shapes[s].second; ++i) {
                if (yi >= meta.y_vertices.size())
                    throw std::logic_error("realize ran out of Y vertices");
                assignment[meta.y_vertices[yi++]] = color;
            }
            ++color;
        }
    }
    if (xi != meta.x_vertices.size() || yi != meta.y_vertices.size())
        throw std::logic_error("realize left vertices unassigned");
    return Coloring(q, std::move(assignment));
}

}  // namespace

std::string clause_str(Clause c) {
    switch (c) {
        case Clause::a_i: return "A.i";
        case Clause::a_ii: return "A.ii";
        case Clause::a_iii: return "A.iii";
        case Clause::b_i: return "B.i";
        case Clause::b_ii: return "B.ii";
        case Clause::degenerate: return "degenerate";
        case Clause::enumerated: return "enumerated";
        case Clause::none: return "none";
    }
    return "none";
}

std::optional<Clause> condition_A(int m, int n, int q) {
    const Params p(m, n, q);
    require_nondegenerate(p);
    const int a = p.a, r = p.r;
    if (r == 0) return (m % a == 0) ? std::optional<Clause>{Clause::a_i} : std::nullopt;
    if (r * (a + 1) >= m) {
        const int c = ceil_div(m, a + 1);
        if (std::min(c, q - r) >= (a + 1) * c - m) return Clause::a_ii;
        return std::nullopt;
    }
    const int c = ceil_div(m - r, a);
    if (std::min(r, q - c) >= a * c + r - m) return Clause::a_iii;
    return std::nullopt;
}

std::optional<Clause> condition_B(int m, int n, int q) {
    const Params p(m, n, q);
    require_nondegenerate(p);
    const int a = p.a, r = p.r;
    if (r >= 1 && r * (a + 1) >= m) {
        if (q + a * (m / (a + 1)) >= m) return Clause::b_i;
        return std::nullopt;
    }
    // here r = 0, or r >= 1 with r(a+1) < m; the inequality below covers
    // both readings since it reduces to q + (a-1)*floor(m/a) >= m at r = 0
    if (q + r + (a - 1) * ((m - r) / a) >= m) return Clause::b_ii;
    return std::nullopt;
}

KVector4 witness_A(int m, int n, int q, Clause clause) {
    const Params p(m, n, q);
    require_nondegenerate(p);
    if (condition_A(m, n, q) != std::optional<Clause>{clause})
        throw std::invalid_argument("clause mismatch for witness_A");
    const int a = p.a, r = p.r;
    KVector4 k{};
    if (clause == Clause::a_i) {
        k = KVector4{0, m / a, 0, n / a};
    } else {
        const int c = (clause == Clause::a_ii) ? ceil_div(m, a + 1) : ceil_div(m - r, a);
        k = KVector4{m - a * c, (a + 1) * c - m, r + a * c - m,
                     m + q - r - (a + 1) * c};
    }
    if (!feasible_proper(k, p))
        throw std::logic_error("witness_A produced an infeasible vector");
    return k;
}

KVector8 witness_B(int m, int n, int q, Clause clause) {
    const Params p(m, n, q);
    require_nondegenerate(p);
    if (condition_B(m, n, q) != std::optional<Clause>{clause})
        throw std::invalid_argument("clause mismatch for witness_B");
    const int a = p.a, r = p.r;
    KVector8 k{};
    if (clause == Clause::b_i) {
        const int f = m / (a + 1);
        const int k3 = std::max(0, r + a * f - m);
        k = KVector8{f, 0, k3, q + a * f - m - k3, 0, 0, r - f - k3,
                     m + k3 - r - a * f};
    } else if (r == 0) {
        const int f = m / a;
        k = KVector8{0, f, 0, q + (a - 1) * f - m, 0, 0, 0, m - a * f};
    } else {
        const int f = (m - r) / a;
        k = KVector8{r, f - r, 0, q + r + (a - 1) * f - m, 0, 0, 0, m - r - a * f};
    }
    if (!feasible_tree(k, p))
        throw std::logic_error("witness_B produced an infeasible vector");
    return k;
}

Coloring realize(const BipartitionMeta& meta, int q, int a, const KVector4& k) {
    const Params p(meta.m(), meta.n(), q);
    if (p.a != a) throw std::invalid_argument("a does not match the bipartition");
    if (!feasible_proper(k, p))
        throw std::invalid_argument("cannot realize an infeasible k-vector");
    return realize_impl(meta, q, a, k.data(), 4);
}

Coloring realize(const BipartitionMeta& meta, int q, int a, const KVector8& k) {
    const Params p(meta.m(), meta.n(), q);
    if (p.a != a) throw std::invalid_argument("a does not match the bipartition");
    if (!feasible_tree(k, p))
        throw std::invalid_argument("cannot realize an infeasible k-vector");
    return realize_impl(meta, q, a, k.data(), 8);
}

Verdict decide_proper_equitable(int m, int n, int q, bool want_coloring) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (m < 0 || n < 0) throw std::invalid_argument("side sizes must be nonnegative");
    if (auto v = degenerate_verdict(m, n, q, want_coloring)) return *v;

    const Params p(m, n, q);
    Verdict v;
    v.a = p.a;
    v.r = p.r;
    if (auto clause = condition_A(m, n, q)) {
        v.feasible = true;
        v.orientation = Orientation::as_given;
        v.clause = *clause;
        v.k4 = witness_A(m, n, q, *clause);
        if (want_coloring) v.coloring = realize(meta_as_given(m, n), q, p.a, *v.k4);
        return v;
    }
    if (auto clause = condition_A(n, m, q)) {
        v.feasible = true;
        v.orientation = Orientation::swapped;
        v.clause = *clause;
        v.k4 = witness_A(n, m, q, *clause);
        if (want_coloring) v.coloring = realize(meta_swapped(m, n), q, p.a, *v.k4);
        return v;
    }
    return v;
}

Verdict decide_equitable_tree(int m, int n, int q, DegreeBound t,
                              bool want_coloring) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (m < 0 || n < 0) throw std::invalid_argument("side sizes must be nonnegative");
    if (auto v = degenerate_verdict(m, n, q, want_coloring)) return *v;

    const Params p(m, n, q);
    Verdict v;
    v.a = p.a;
    v.r = p.r;

    if (!t.at_least(p.a)) {
        // below the closed-form regime: decide by filtered enumeration
        if (auto k = enumerate_tree(p, t)) {
            v.feasible = true;
            v.orientation = Orientation::as_given;
            v.clause = Clause::enumerated;
            v.k8 = *k;
            if (want_coloring) v.coloring = realize(meta_as_given(m, n), q, p.a, *k);
        }
        return v;
    }

    struct Try {
        int mm, nn;
        Orientation orient;
    };
    const Try tries[2] = {{m, n, Orientation::as_given}, {n, m, Orientation::swapped}};
    for (const auto& attempt : tries) {
        if (auto clause = condition_A(attempt.mm, attempt.nn, q)) {
            v.feasible = true;
            v.orientation = attempt.orient;
            v.clause = *clause;
            v.k4 = witness_A(attempt.mm, attempt.nn, q, *clause);
            if (want_coloring) {
                const auto meta = attempt.orient == Orientation::as_given
                                      ? meta_as_given(m, n)
                                      : meta_swapped(m, n);
                v.coloring = realize(meta, q, p.a, *v.k4);
            }
            return v;
        }
    }
    for (const auto& attempt : tries) {
        if (auto clause = condition_B(attempt.mm, attempt.nn, q)) {
            v.feasible = true;
            v.orientation = attempt.orient;
            v.clause = *clause;
            v.k8 = witness_B(attempt.mm, attempt.nn, q, *clause);
            if (want_coloring) {
                const auto meta = attempt.orient == Orientation::as_given
                                      ? meta_as_given(m, n)
                                      : meta_swapped(m, n);
                v.coloring = realize(meta, q, p.a, *v.k8);
            }
            return v;
        }
    }
    return v;
}

}  // namespace equitree
