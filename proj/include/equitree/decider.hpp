#pragma once

#include <optional>
#include <string>

#include "equitree/kvector.hpp"

namespace equitree {

enum class Clause { a_i, a_ii, a_iii, b_i, b_ii, degenerate, enumerated, none };

std::string clause_str(Clause c);  // "A.i", ..., "degenerate", "enumerated", "none"

enum class Orientation { as_given, swapped };

// Decision certificate. On feasibility the k-vector is present except on
// the degenerate path, and the realized coloring (when requested) passes
// the verifier.
struct Verdict {
    bool feasible = false;
    Orientation orientation = Orientation::as_given;
    Clause clause = Clause::none;
    int a = 0;
    int r = 0;
    std::optional<KVector4> k4;
    std::optional<KVector8> k8;
    std::optional<Coloring> coloring;
};

// Closed-form test for a proper equitable q-coloring of K_{m,n} with the
// sides in the given order. Clauses are mutually exclusive:
//   A.i   r = 0 and a | m
//   A.ii  r >= 1, r(a+1) >= m,  min{ceil(m/(a+1)), q-r} >= (a+1)*ceil(m/(a+1)) - m
//   A.iii r >= 1, r(a+1) <  m,  min{r, q-ceil((m-r)/a)} >= a*ceil((m-r)/a) + r - m
// Requires a >= 1.
std::optional<Clause> condition_A(int m, int n, int q);

// Closed-form test for an equitable tree-coloring (degree bound >= a):
//   B.i   r >= 1, r(a+1) >= m,  q + a*floor(m/(a+1)) >= m
//   B.ii  [r = 0 or r(a+1) < m] and q + r + (a-1)*floor((m-r)/a) >= m
// Requires a >= 1.
std::optional<Clause> condition_B(int m, int n, int q);

// Closed-form witness k-vectors for a firing clause; the clause must be
// the one condition_A / condition_B returns for (m, n, q).
KVector4 witness_A(int m, int n, int q, Clause clause);
KVector8 witness_B(int m, int n, int q, Clause clause);

// Deterministic layout of a feasible k-vector as a concrete coloring:
// classes in shape order, X then Y vertices consumed in list order,
// color indices assigned in construction order.
Coloring realize(const BipartitionMeta& meta, int q, int a, const KVector4& k);
Coloring realize(const BipartitionMeta& meta, int q, int a, const KVector8& k);

// Full decisions. Degenerate inputs (q > m+n, or an empty side) are
// feasible outright with a balanced singleton-style coloring; otherwise
// clauses are tried in order A.i < A.ii < A.iii < B.i < B.ii, on (m,n)
// before (n,m). For finite t < a the decision falls back to the
// shape-filtered enumeration (clause "enumerated").
Verdict decide_proper_equitable(int m, int n, int q, bool want_coloring = true);
Verdict decide_equitable_tree(int m, int n, int q, DegreeBound t,
                              bool want_coloring = true);

}  // namespace equitree
