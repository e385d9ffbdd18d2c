#include "doctest.h"

#include <stdexcept>

#include "bruteforce.hpp"
#include "equitree/kvector.hpp"

using namespace equitree;
using namespace testsupport;

TEST_CASE("Params") {
    const Params p(2, 3, 2);
    CHECK(p.a == 2);
    CHECK(p.r == 1);
    const Params z(1, 1, 5);
    CHECK(z.a == 0);
    CHECK(z.r == 2);
    CHECK_THROWS_AS(Params(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Params(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("residual_proper") {
    const Params p(2, 3, 2);
    CHECK(residual_proper({0, 1, 1, 0}, p) == Residuals{0, 0, 0});
    CHECK(residual_proper({1, 0, 0, 1}, p) == Residuals{0, 1, -1});
    const Params p44(4, 4, 2);
    CHECK(residual_proper({0, 1, 0, 1}, p44) == Residuals{0, 0, 0});
    CHECK_THROWS_AS((residual_proper({0, 0, 0, 0}, Params(1, 1, 5))), std::invalid_argument);
}

TEST_CASE("residual_tree") {
    CHECK(residual_tree({2, 0, 0, 0, 0, 0, 0, 1}, Params(9, 2, 3)) == Residuals{0, 0, 0});
    CHECK(residual_tree({0, 0, 0, 1, 0, 0, 0, 1}, Params(1, 5, 2)) == Residuals{0, 0, 0});
    const Params p(3, 4, 2);
    CHECK(residual_tree({0, 0, 0, 0, 0, 0, 0, 0}, p) == Residuals{-2, -3, -4});
}

TEST_CASE("allowed_shapes") {
    SUBCASE("unbounded with a >= 2 allows everything") {
        const auto allowed = allowed_shapes(Params(5, 5, 2), DegreeBound::unbounded());
        for (bool b : allowed) CHECK(b);
    }
    SUBCASE("a=3, t=2 drops only the degree-3 crossing shapes") {
        const auto allowed = allowed_shapes(Params(7, 5, 4), DegreeBound::finite(2));
        CHECK(allowed == std::array<bool, 8>{true, true, true, true, false, true, false, true});
    }
    SUBCASE("a=1 always drops the degenerate (0,1)/(1,0) crossing shapes") {
        const auto fin = allowed_shapes(Params(2, 2, 4), DegreeBound::finite(1));
        CHECK(fin == std::array<bool, 8>{true, true, true, true, true, false, true, false});
        const auto unb = allowed_shapes(Params(2, 2, 4), DegreeBound::unbounded());
        CHECK(unb == fin);
    }
    SUBCASE("constant for all t >= a") {
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; m + n >= 1 && n <= 8 - m; ++n)
                for (int q = 1; q <= 4; ++q) {
                    const Params p(m, n, q);
                    if (p.a < 1) continue;
                    const auto at_a = allowed_shapes(p, DegreeBound::finite(p.a));
                    CHECK(allowed_shapes(p, DegreeBound::finite(p.a + 1)) == at_a);
                    CHECK(allowed_shapes(p, DegreeBound::finite(p.a + 5)) == at_a);
                    CHECK(allowed_shapes(p, DegreeBound::unbounded()) == at_a);
                }
    }
}

TEST_CASE("enumerate_proper frozen examples") {
    CHECK(enumerate_proper(Params(2, 3, 2)) == KVector4{0, 1, 1, 0});
    CHECK(!enumerate_proper(Params(3, 3, 3)));
    CHECK(enumerate_proper(Params(4, 4, 2)) == KVector4{0, 1, 0, 1});
    CHECK_THROWS_AS(enumerate_proper(Params(1, 1, 5)), std::invalid_argument);
}

TEST_CASE("enumerate_tree frozen examples") {
    CHECK(!enumerate_tree(Params(7, 3, 2), DegreeBound::unbounded()));
    // lexicographically smallest solutions, frozen from the brute-force oracle
    CHECK(enumerate_tree(Params(4, 4, 3), DegreeBound::finite(2)) ==
          KVector8{0, 0, 0, 0, 1, 0, 1, 1});
    CHECK(enumerate_tree(Params(2, 3, 2), DegreeBound::finite(2)) ==
          KVector8{0, 0, 0, 0, 0, 0, 1, 1});
    // with crossing shapes filtered away, the proper solution is the only shape left
    CHECK(enumerate_tree(Params(2, 3, 2), DegreeBound::finite(1)) ==
          KVector8{0, 1, 1, 0, 0, 0, 0, 0});
    CHECK(enumerate_tree(Params(3, 1, 2), DegreeBound::finite(1)) ==
          KVector8{0, 1, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(enumerate_tree(Params(0, 1, 2), DegreeBound::unbounded()),
                    std::invalid_argument);
}

TEST_CASE("enumerators match the brute-force oracle") {
    int feasible_seen = 0;
    for (int m = 0; m <= 12; ++m) {
        for (int n = (m == 0 ? 1 : 0); m + n <= 12; ++n) {
            for (int q = 1; q <= 4; ++q) {
                const Params p(m, n, q);
                if (p.a < 1) continue;
                CHECK(enumerate_proper(p) == bf_enumerate_proper(p));
                for (const DegreeBound t :
                     {DegreeBound::finite(1), DegreeBound::finite(2), DegreeBound::finite(3),
                      DegreeBound::unbounded()}) {
                    const auto mine = enumerate_tree(p, t);
                    const auto reference = bf_enumerate_tree(p, t);
                    CHECK(mine == reference);
                    if (mine) ++feasible_seen;
                }
            }
        }
    }
    CHECK(feasible_seen > 100);
}

TEST_CASE("count identities hold for every solution found") {
    for (int m = 0; m <= 10; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= 10; ++n)
            for (int q = 1; q <= 5; ++q) {
                const Params p(m, n, q);
                if (p.a < 1) continue;
                if (const auto k4 = enumerate_proper(p)) {
                    CHECK((*k4)[0] + (*k4)[2] == p.r);
                    CHECK((*k4)[1] + (*k4)[3] == p.q - p.r);
                }
                for (const DegreeBound t : {DegreeBound::finite(1), DegreeBound::unbounded()}) {
                    if (const auto k8 = enumerate_tree(p, t)) {
                        CHECK((*k8)[0] + (*k8)[2] + (*k8)[4] + (*k8)[6] == p.r);
                        CHECK((*k8)[1] + (*k8)[3] + (*k8)[5] + (*k8)[7] == p.q - p.r);
                    }
                }
            }
}

TEST_CASE("proper solutions embed into the tree system for every t") {
    for (int m = 0; m <= 10; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= 10; ++n)
            for (int q = 1; q <= 5; ++q) {
                const Params p(m, n, q);
                if (p.a < 1 || !enumerate_proper(p)) continue;
                for (const DegreeBound t : {DegreeBound::finite(1), DegreeBound::finite(2),
                                            DegreeBound::unbounded()})
                    CHECK(enumerate_tree(p, t).has_value());
            }
}

TEST_CASE("tree feasibility is monotone in t") {
    for (int m = 0; m <= 10; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= 10; ++n)
            for (int q = 1; q <= 5; ++q) {
                const Params p(m, n, q);
                if (p.a < 1) continue;
                bool previous = false;
                for (int t = 1; t <= 5; ++t) {
                    const bool now = enumerate_tree(p, DegreeBound::finite(t)).has_value();
                    if (previous) CHECK(now);
                    previous = now;
                }
                if (previous) CHECK(enumerate_tree(p, DegreeBound::unbounded()).has_value());
            }
}

TEST_CASE("tree feasibility is symmetric under side swap") {
    for (int m = 0; m <= 9; ++m)
        for (int n = (m == 0 ? 1 : 0); m + n <= 9; ++n)
            for (int q = 1; q <= 4; ++q) {
                const Params p(m, n, q), swapped(n, m, q);
                if (p.a < 1) continue;
                for (const DegreeBound t : {DegreeBound::finite(1), DegreeBound::finite(2),
                                            DegreeBound::unbounded()})
                    CHECK(enumerate_tree(p, t).has_value() ==
                          enumerate_tree(swapped, t).has_value());
                CHECK(enumerate_proper(p).has_value() ==
                      enumerate_proper(swapped).has_value());
            }
}
