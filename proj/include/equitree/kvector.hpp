#pragma once

#include <array>
#include <optional>
#include <utility>

#include "equitree/coloring.hpp"

namespace equitree {

// Side sizes plus the derived quotient/remainder of m+n by q:
// a = floor((m+n)/q), r = (m+n) - q*a, so 0 <= r <= q-1.
struct Params {
    int m, n, q, a, r;
    Params(int m, int n, int q);
};

// Shape counts for proper equitable colorings of K_{m,n}:
//   k1 (a+1,0)  k2 (a,0)  k3 (0,a+1)  k4 (0,a)
using KVector4 = std::array<int, 4>;

// Shape counts for equitable tree-colorings, extending KVector4 with the
// crossing shapes k5 (a,1), k6 (a-1,1), k7 (1,a), k8 (1,a-1).
using KVector8 = std::array<int, 8>;

using Residuals = std::array<int, 3>;  // (count - q, X load - m, Y load - n)

Residuals residual_proper(const KVector4& k, const Params& p);
Residuals residual_tree(const KVector8& k, const Params& p);
bool feasible_proper(const KVector4& k, const Params& p);
bool feasible_tree(const KVector8& k, const Params& p);

// (x-size, y-size) of the eight shapes for a given a, in k-index order.
std::array<std::pair<int, int>, 8> shape_table(int a);

// Which shapes a class may take under the degree bound t. Within-side
// shapes induce no edges and are always allowed; a crossing class of
// star degree s needs s <= t, and (a-1,1)/(1,a-1) additionally need
// a-1 >= 1 to be genuine crossing shapes.
std::array<bool, 8> allowed_shapes(const Params& p, DegreeBound t);

// Lexicographically smallest solution of the proper system, or absent.
std::optional<KVector4> enumerate_proper(const Params& p);

// Lexicographically smallest solution of the tree system restricted to
// allowed_shapes(p, t) (disallowed shapes forced to zero), or absent.
std::optional<KVector8> enumerate_tree(const Params& p, DegreeBound t);

}  // namespace equitree
