#include "doctest.h"

#include <stdexcept>

#include "bruteforce.hpp"
#include "equitree/decider.hpp"

using namespace equitree;
using namespace testsupport;

namespace {

const DegreeBound kInf = DegreeBound::unbounded();

}  // namespace

TEST_CASE("condition_A clauses") {
    CHECK(condition_A(4, 4, 2) == Clause::a_i);
    CHECK(condition_A(2, 3, 2) == Clause::a_ii);
    CHECK(condition_A(7, 6, 4) == Clause::a_iii);
    CHECK(!condition_A(9, 2, 3));
    CHECK(!condition_A(2, 9, 3));
    CHECK(!condition_A(3, 3, 3));
    CHECK_THROWS_AS(condition_A(1, 1, 5), std::invalid_argument);
}

TEST_CASE("condition_B clauses") {
    CHECK(condition_B(4, 4, 3) == Clause::b_i);
    CHECK(condition_B(1, 5, 2) == Clause::b_ii);
    CHECK(!condition_B(7, 3, 2));
    CHECK(!condition_B(3, 7, 2));
    CHECK(condition_B(9, 2, 3) == Clause::b_ii);
    CHECK_THROWS_AS(condition_B(0, 0, 1), std::invalid_argument);
}

TEST_CASE("witness_A frozen values") {
    // at r=0 the size-a classes carry the sides: k2 = m/a, k3 = n/a
    CHECK(witness_A(4, 4, 2, Clause::a_i) == KVector4{0, 1, 0, 1});
    CHECK(witness_A(2, 3, 2, Clause::a_ii) == KVector4{0, 1, 1, 0});
    CHECK(witness_A(7, 6, 4, Clause::a_iii) == KVector4{1, 1, 0, 2});
    CHECK_THROWS_AS(witness_A(4, 4, 2, Clause::a_ii), std::invalid_argument);
}

TEST_CASE("witness_B frozen values") {
    CHECK(witness_B(4, 4, 3, Clause::b_i) == KVector8{1, 0, 0, 1, 0, 0, 1, 0});
    CHECK(witness_B(1, 5, 2, Clause::b_ii) == KVector8{0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(witness_B(9, 2, 3, Clause::b_ii) == KVector8{2, 0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(witness_B(4, 4, 3, Clause::b_ii), std::invalid_argument);
}

TEST_CASE("witnesses are feasible wherever a clause fires") {
    for (int m = 0; m <= 25; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= 25; ++n)
            for (int q = 1; q <= 10; ++q) {
                const Params p(m, n, q);
                if (p.a < 1) continue;
                if (const auto clause = condition_A(m, n, q)) {
                    const auto k = witness_A(m, n, q, *clause);
                    CHECK(feasible_proper(k, p));
                    CHECK(k[0] + k[2] == p.r);
                    CHECK(k[1] + k[3] == p.q - p.r);
                }
                if (const auto clause = condition_B(m, n, q)) {
                    const auto k = witness_B(m, n, q, *clause);
                    CHECK(feasible_tree(k, p));
                    CHECK(k[0] + k[2] + k[4] + k[6] == p.r);
                    CHECK(k[1] + k[3] + k[5] + k[7] == p.q - p.r);
                }
            }
}

TEST_CASE("realize frozen layouts") {
    SUBCASE("K_{2,3} proper classes") {
        const auto meta = complete_bipartite(2, 3).meta;
        const auto c = realize(meta, 2, 2, KVector4{0, 1, 1, 0});
        CHECK(c.assignment == std::vector<int>{0, 0, 1, 1, 1});
    }
    SUBCASE("K_{9,2} tree classes") {
        const auto meta = complete_bipartite(9, 2).meta;
        const auto c = realize(meta, 3, 3, KVector8{2, 0, 0, 0, 0, 0, 0, 1});
        CHECK(c.assignment == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2});
    }
    SUBCASE("K_{4,4} tree classes") {
        const auto bip = complete_bipartite(4, 4);
        const auto c = realize(bip.meta, 3, 2, KVector8{1, 0, 0, 1, 0, 0, 1, 0});
        CHECK(c.assignment == std::vector<int>{0, 0, 0, 2, 1, 1, 2, 2});
        CHECK(verify_tree_coloring(bip.graph, c, DegreeBound::finite(2)).ok);
        CHECK(is_equitable(c));
    }
    SUBCASE("infeasible vectors are rejected") {
        const auto meta = complete_bipartite(2, 3).meta;
        CHECK_THROWS_AS((realize(meta, 2, 2, KVector4{1, 1, 1, 1})), std::invalid_argument);
    }
}

TEST_CASE("decide_proper_equitable") {
    CHECK(!decide_proper_equitable(3, 3, 3).feasible);
    CHECK(!decide_proper_equitable(9, 2, 3).feasible);
    CHECK(!decide_proper_equitable(4, 4, 3).feasible);

    const auto v = decide_proper_equitable(2, 3, 2);
    CHECK(v.feasible);
    CHECK(v.orientation == Orientation::as_given);
    CHECK(v.clause == Clause::a_ii);
    CHECK(v.k4 == KVector4{0, 1, 1, 0});

    const auto degenerate = decide_proper_equitable(1, 1, 5);
    CHECK(degenerate.feasible);
    CHECK(degenerate.clause == Clause::degenerate);
    CHECK(!degenerate.k4);
    CHECK(is_equitable(*degenerate.coloring));

    CHECK_THROWS_AS(decide_proper_equitable(2, 2, 0), std::invalid_argument);
}

TEST_CASE("decide_equitable_tree") {
    SUBCASE("named verdicts") {
        CHECK(!decide_equitable_tree(7, 3, 2, kInf).feasible);
        const auto b = decide_equitable_tree(4, 4, 3, DegreeBound::finite(2));
        CHECK(b.feasible);
        CHECK(b.clause == Clause::b_i);
        const auto e = decide_equitable_tree(3, 1, 2, DegreeBound::finite(1));
        CHECK(e.feasible);
        CHECK(e.clause == Clause::enumerated);
        // classes {x1,x2}, {x3,y1}
        CHECK(e.coloring->assignment == std::vector<int>{0, 0, 1, 1});
    }
    SUBCASE("swapped orientation realizes on the original ids") {
        const auto v = decide_equitable_tree(5, 1, 2, DegreeBound::finite(3));
        CHECK(v.feasible);
        CHECK(v.orientation == Orientation::swapped);
        CHECK(v.clause == Clause::b_ii);
        const auto bip = complete_bipartite(5, 1);
        CHECK(verify_tree_coloring(bip.graph, *v.coloring, DegreeBound::finite(3)).ok);
        CHECK(is_equitable(*v.coloring));
    }
    SUBCASE("zero side and q > m+n are degenerate-feasible") {
        for (const DegreeBound t : {DegreeBound::finite(1), kInf}) {
            CHECK(decide_equitable_tree(0, 5, 3, t).clause == Clause::degenerate);
            CHECK(decide_equitable_tree(5, 0, 2, t).clause == Clause::degenerate);
            CHECK(decide_equitable_tree(2, 2, 9, t).clause == Clause::degenerate);
        }
    }
    CHECK_THROWS_AS(decide_equitable_tree(2, 2, 1, DegreeBound::finite(0)),
                    std::invalid_argument);
}

TEST_CASE("decisions are symmetric and sound on a grid") {
    for (int m = 0; m <= 8; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= 8; ++n)
            for (int q = 1; q <= 5; ++q) {
                const auto proper = decide_proper_equitable(m, n, q);
                CHECK(proper.feasible == decide_proper_equitable(n, m, q).feasible);
                if (proper.feasible) {
                    const auto& c = *proper.coloring;
                    CHECK(is_proper(complete_bipartite(m, n).graph, c));
                    CHECK(is_equitable(c));
                }
                for (const DegreeBound t :
                     {DegreeBound::finite(1), DegreeBound::finite(2), kInf}) {
                    const auto tree = decide_equitable_tree(m, n, q, t);
                    CHECK(tree.feasible == decide_equitable_tree(n, m, q, t).feasible);
                    if (proper.feasible) CHECK(tree.feasible);
                    if (tree.feasible) {
                        const auto& c = *tree.coloring;
                        CHECK(verify_tree_coloring(complete_bipartite(m, n).graph, c, t).ok);
                        CHECK(is_equitable(c));
                    }
                }
            }
}

TEST_CASE("decision feasibility is monotone in t") {
    for (int m = 0; m <= 8; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= 8; ++n)
            for (int q = 1; q <= 5; ++q) {
                bool previous = false;
                for (int t = 1; t <= 6; ++t) {
                    const bool now =
                        decide_equitable_tree(m, n, q, DegreeBound::finite(t), false).feasible;
                    if (previous) CHECK(now);
                    previous = now;
                }
                if (previous) CHECK(decide_equitable_tree(m, n, q, kInf, false).feasible);
            }
}
