#include "equitree/kvector.hpp"

#include <stdexcept>

namespace equitree {

namespace {

void require_nondegenerate(const Params& p) {
    if (p.a < 1)
        throw std::invalid_argument("degenerate parameters: a = 0 (q > m+n)");
}

}  // namespace

Params::Params(int m_in, int n_in, int q_in) : m(m_in), n(n_in), q(q_in) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (m < 0 || n < 0) throw std::invalid_argument("side sizes must be nonnegative");
    a = (m + n) / q;
    r = (m + n) - q * a;
}

Residuals residual_proper(const KVector4& k, const Params& p) {
    require_nondegenerate(p);
    const int a = p.a;
    return Residuals{k[0] + k[1] + k[2] + k[3] - p.q,
                     k[0] * (a + 1) + k[1] * a - p.m,
                     k[2] * (a + 1) + k[3] * a - p.n};
}

Residuals residual_tree(const KVector8& k, const Params& p) {
    require_nondegenerate(p);
    const int a = p.a;
    int count = 0;
    for (int v : k) count += v;
    const int x_load =
        k[0] * (a + 1) + k[1] * a + k[4] * a + k[5] * (a - 1) + k[6] + k[7];
    const int y_load =
        k[2] * (a + 1) + k[3] * a + k[6] * a + k[7] * (a - 1) + k[4] + k[5];
    return Residuals{count - p.q, x_load - p.m, y_load - p.n};
}

bool feasible_proper(const KVector4& k, const Params& p) {
    for (int v : k)
        if (v < 0) return false;
    const auto res = residual_proper(k, p);
    return res[0] == 0 && res[1] == 0 && res[2] == 0;
}

bool feasible_tree(const KVector8& k, const Params& p) {
    for (int v : k)
        if (v < 0) return false;
    const auto res = residual_tree(k, p);
    return res[0] == 0 && res[1] == 0 && res[2] == 0;
}

std::array<std::pair<int, int>, 8> shape_table(int a) {
    return {{{a + 1, 0},
             {a, 0},
             {0, a + 1},
             {0, a},
             {a, 1},
             {a - 1, 1},
             {1, a},
             {1, a - 1}}};
}

std::array<bool, 8> allowed_shapes(const Params& p, DegreeBound t) {
    require_nondegenerate(p);
    std::array<bool, 8> allowed{true, true, true, true, false, false, false, false};
    allowed[4] = allowed[6] = t.at_least(p.a);
    allowed[5] = allowed[7] = p.a >= 2 && t.at_least(p.a - 1);
    return allowed;
}

std::optional<KVector4> enumerate_proper(const Params& p) {
    require_nondegenerate(p);
    const int a = p.a, r = p.r, q = p.q, m = p.m, n = p.n;
    // Every solution satisfies k1 + k3 = r and k2 + k4 = q - r, and the
    // X equation pins k2 once k1 is chosen.
    for (int k1 = 0; k1 <= r && k1 * (a + 1) <= m; ++k1) {
        const int rest = m - k1 * (a + 1);
        if (rest % a != 0) continue;
        const int k2 = rest / a;
        if (k2 > q - r) continue;
        const int k3 = r - k1;
        const int k4 = q - r - k2;
        if (k3 * (a + 1) + k4 * a != n) continue;
        return KVector4{k1, k2, k3, k4};
    }
    return std::nullopt;
}

namespace {

// Crossing-shape completion: given k5 + k7 = r1, k6 + k8 = r2 and the
// X-load equation k5*(a-1) + k6*(a-2) = target, return the smallest
// (k5, k6) respecting the shape filter, or nothing.
struct Crossing {
    int k5, k6, k7, k8;
};

std::optional<Crossing> solve_crossing(int a, int r1, int r2, int target,
                                       const std::array<bool, 8>& allowed) {
    auto ok = [&](int k5, int k6) -> bool {
        const int k7 = r1 - k5, k8 = r2 - k6;
        if (k5 < 0 || k6 < 0 || k7 < 0 || k8 < 0) return false;
        if (k5 > 0 && !allowed[4]) return false;
        if (k6 > 0 && !allowed[5]) return false;
        if (k7 > 0 && !allowed[6]) return false;
        if (k8 > 0 && !allowed[7]) return false;
        return true;
    };
    if (a == 1) {
        // coefficients (0, -1): k6 = -target; only k6 = 0 survives the filter
        if (target != 0) return std::nullopt;
        for (int k5 = 0; k5 <= r1; ++k5)
            if (ok(k5, 0)) return Crossing{k5, 0, r1 - k5, r2};
        return std::nullopt;
    }
    if (a == 2) {
        // coefficients (1, 0): k5 is pinned, k6 is free
        const int k5 = target;
        if (k5 < 0 || k5 > r1) return std::nullopt;
        for (int k6 = 0; k6 <= r2; ++k6)
            if (ok(k5, k6)) return Crossing{k5, k6, r1 - k5, r2 - k6};
        return std::nullopt;
    }
    for (int k5 = 0; k5 <= r1 && k5 * (a - 1) <= target; ++k5) {
        const int rest = target - k5 * (a - 1);
        if (rest % (a - 2) != 0) continue;
        const int k6 = rest / (a - 2);
        if (ok(k5, k6)) return Crossing{k5, k6, r1 - k5, r2 - k6};
    }
    return std::nullopt;
}

}  // namespace

std::optional<KVector8> enumerate_tree(const Params& p, DegreeBound t) {
    require_nondegenerate(p);
    const int a = p.a, r = p.r, q = p.q, m = p.m, n = p.n;
    const auto allowed = allowed_shapes(p, t);
    // Every solution satisfies k1+k3+k5+k7 = r and k2+k4+k6+k8 = q-r;
    // with those and the X equation, the Y equation is implied. Iterate
    // (k1..k4) in lexicographic order and complete the crossing shapes.
    for (int k1 = 0; k1 <= r && k1 * (a + 1) <= m; ++k1) {
        for (int k2 = 0; k2 <= q - r && k1 * (a + 1) + k2 * a <= m; ++k2) {
            const int x_rest = m - k1 * (a + 1) - k2 * a;
            for (int k3 = 0; k1 + k3 <= r && k3 * (a + 1) <= n; ++k3) {
                for (int k4 = 0; k2 + k4 <= q - r && k3 * (a + 1) + k4 * a <= n;
                     ++k4) {
                    const int r1 = r - k1 - k3;
                    const int r2 = q - r - k2 - k4;
                    const int target = x_rest - r1 - r2;
                    auto crossing = solve_crossing(a, r1, r2, target, allowed);
                    if (!crossing) continue;
                    KVector8 k{k1,           k2,           k3,           k4,
                               crossing->k5, crossing->k6, crossing->k7, crossing->k8};
                    if (!feasible_tree(k, p))
                        throw std::logic_error("enumerate_tree produced an infeasible vector");
                    return k;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace equitree
