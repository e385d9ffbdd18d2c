#include "doctest.h"

#include "equitree/sweep.hpp"

using namespace equitree;

namespace {

SweepOptions small_options() {
    SweepOptions options;
    options.max_sum = 4;
    options.max_q = 2;
    options.t_list = {DegreeBound::unbounded()};
    options.oracle_limit = 12;
    return options;
}

}  // namespace

TEST_CASE("small sweep agrees everywhere and contains the expected rows") {
    const auto rows = run_sweep(small_options());
    CHECK(!rows.empty());
    bool saw_k22 = false;
    for (const auto& row : rows) {
        CHECK(row.agree);
        CHECK(row.oracle != OracleColumn::skipped);  // all instances are tiny
        if (row.m == 2 && row.n == 2 && row.q == 2) {
            saw_k22 = true;
            CHECK(row.cond_a == "A.i");
            CHECK(row.closed_form);
            CHECK(row.kvector);
            CHECK(row.oracle == OracleColumn::yes);
        }
    }
    CHECK(saw_k22);
}

TEST_CASE("sweep rows are sorted and the CSV is stable across job counts") {
    auto options = small_options();
    options.t_list = {DegreeBound::finite(2), DegreeBound::finite(1),
                      DegreeBound::unbounded()};
    const auto csv_one = sweep_csv(run_sweep(options));
    options.jobs = 4;
    const auto csv_four = sweep_csv(run_sweep(options));
    CHECK(csv_one == csv_four);
    CHECK(csv_one.substr(0, csv_one.find('\n')) ==
          "m,n,q,t,a,r,condA,condB,closed_form,kvector,oracle,agree");
    // t-list is normalized: finite ascending then inf
    CHECK(csv_one.find("0,1,1,1,") < csv_one.find("0,1,1,2,"));
    CHECK(csv_one.find("0,1,1,2,") < csv_one.find("0,1,1,inf,"));
}

TEST_CASE("sweep marks infeasible triples consistently") {
    SweepOptions options;
    options.max_sum = 10;
    options.max_q = 2;
    options.t_list = {DegreeBound::unbounded()};
    options.oracle_limit = 10;
    const auto rows = run_sweep(options);
    bool saw_73 = false;
    for (const auto& row : rows) {
        if (row.m == 7 && row.n == 3 && row.q == 2) {
            saw_73 = true;
            CHECK(row.cond_a == "-");
            CHECK(row.cond_b == "-");
            CHECK(!row.closed_form);
            CHECK(!row.kvector);
            CHECK(row.oracle == OracleColumn::no);
            CHECK(row.agree);
        }
    }
    CHECK(saw_73);
}

TEST_CASE("oracle column is skipped above the vertex cap") {
    SweepOptions options;
    options.max_sum = 5;
    options.max_q = 2;
    options.t_list = {DegreeBound::unbounded()};
    options.oracle_limit = 3;
    for (const auto& row : run_sweep(options)) {
        if (row.m + row.n > 3) CHECK(row.oracle == OracleColumn::skipped);
        CHECK(row.agree);
    }
}
