#include "doctest.h"
#include "phylocount/closed_form.hpp"
#include "phylocount/enumerate.hpp"

using namespace phylocount;

TEST_CASE("trees") {
    const long dfact[] = {1, 1, 1, 3, 15, 105, 945, 10395, 135135};
    for (int l = 1; l <= 8; ++l) CHECK(static_cast<long>(enumerate_trees(l).size()) == dfact[l]);
    CHECK_THROWS_AS(enumerate_trees(9), std::invalid_argument);
}

TEST_CASE("enumeration matches closed forms") {
    struct Cell {
        NetworkClass cls;
        int k, l;
    };
    for (Cell c : {Cell{NetworkClass::TreeChild, 1, 2}, Cell{NetworkClass::TreeChild, 1, 4},
                   Cell{NetworkClass::TreeChild, 2, 3}, Cell{NetworkClass::TreeChild, 2, 4},
                   Cell{NetworkClass::TreeChild, 3, 4}, Cell{NetworkClass::Normal, 1, 3},
                   Cell{NetworkClass::Normal, 1, 4}, Cell{NetworkClass::Normal, 2, 4}})
        CHECK(enumerate_networks(c.cls, c.k, c.l).count == count_leaf_labeled(c.cls, c.k, c.l));
}

TEST_CASE("exhaustive DAG search") {
    CHECK(exhaustive_dag_search(NetworkClass::TreeChild, 1, 2) == 2);
    CHECK(exhaustive_dag_search(NetworkClass::TreeChild, 1, 3) == 21);
    CHECK(exhaustive_dag_search(NetworkClass::TreeChild, 2, 3) == 42);
    CHECK(exhaustive_dag_search(NetworkClass::Normal, 1, 3) == 3);
    CHECK(exhaustive_dag_search(NetworkClass::TreeChild, 0, 4) == 15);
    CHECK_THROWS_AS(exhaustive_dag_search(NetworkClass::TreeChild, 2, 4), std::invalid_argument);
}

TEST_CASE("codes, networks and shapes") {
    EnumerateOptions opt;
    opt.keep_codes = opt.keep_networks = opt.shapes = true;
    EnumerationResult r = enumerate_networks(NetworkClass::TreeChild, 1, 2, opt);
    CHECK(r.count == 2);
    CHECK(r.codes.size() == 2);
    CHECK(r.networks.size() == 2);
    CHECK(std::is_sorted(r.codes.begin(), r.codes.end()));
    long total = 0;
    for (const auto& [key, s] : r.shapes) total += s.labelings;
    CHECK(total == 2);
}

TEST_CASE("budget") {
    EnumerateOptions opt;
    opt.budget = 50;
    CHECK_THROWS_AS(enumerate_networks(NetworkClass::TreeChild, 2, 4, opt), BudgetExceeded);
}
