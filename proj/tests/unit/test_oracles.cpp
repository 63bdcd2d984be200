#include <doctest.h>

#include "boolw/errors.hpp"
#include "boolw/generators.hpp"
#include "boolw/oracles.hpp"
#include "boolw/partition_dp.hpp"

using namespace boolw;

TEST_CASE("brute_subset_opt") {
    CHECK(brute_subset_opt(gen_cycle(5), subset_catalog("independent-set")) == 2);
    CHECK(brute_subset_opt(gen_path(4), subset_catalog("dominating-set")) == 2);
    SubsetProblem pc{SetSpec::finite({0}), SetSpec::finite({1}), Objective::Min};
    CHECK(!brute_subset_opt(gen_cycle(4), pc).has_value());
    CHECK_THROWS_AS(brute_subset_opt(Graph(21), subset_catalog("independent-set")),
                    RefusalError);
}

TEST_CASE("brute_partition") {
    CHECK(brute_partition_exists(gen_cycle(5), q_coloring_matrix(3)));
    CHECK(!brute_partition_exists(gen_complete(3), q_coloring_matrix(2)));
    DegreeMatrix any;
    any.q = 1;
    any.cells = {{SetSpec::nat()}};
    CHECK(brute_partition_exists(gen_random(6, 0.5, 1), any));
    CHECK(brute_partition_opt(gen_complete(4), q_coloring_matrix(4), Objective::Max) == 1);
    CHECK_THROWS_AS(brute_partition_exists(Graph(20), q_coloring_matrix(3)), RefusalError);
}

TEST_CASE("brute_cut") {
    auto h3 = gen_hsu(3);
    BruteCut c = brute_cut(h3.graph, *h3.canonical_cut);
    CHECK(c.closure_count == 4);
    CHECK(c.rank == 3);

    auto r2 = gen_rk(2);
    BruteCut c2 = brute_cut(r2.graph, *r2.canonical_cut);
    CHECK(c2.closure_count == 5);
    CHECK(c2.rank == 2);
    CHECK(c2.nss == 5);

    Graph edgeless(6);
    VertexSet a(6);
    a.insert(0);
    a.insert(3);
    BruteCut c3 = brute_cut(edgeless, a);
    CHECK(c3.closure_count == 1);
    CHECK(c3.rank == 0);
    CHECK(c3.nss == 1);

    Graph big(30);
    VertexSet small(30);
    small.insert(0);
    CHECK_THROWS_AS(brute_cut(big, small), RefusalError);
}

TEST_CASE("brute_optimal_width") {
    CHECK(brute_optimal_width(gen_complete(4), CutFunction::Boolean) == 2);
    CHECK(brute_optimal_width(gen_path(3), CutFunction::Boolean) == 2);
    CHECK(brute_optimal_width(gen_cycle(5), CutFunction::Rank) == 2);
    CHECK(brute_optimal_width(Graph(1), CutFunction::Rank) == 0);
    CHECK_THROWS_AS(brute_optimal_width(Graph(9), CutFunction::Rank), RefusalError);
}

TEST_CASE("brute_tree_count double factorial") {
    CHECK(brute_tree_count(3) == 1);
    CHECK(brute_tree_count(4) == 3);
    CHECK(brute_tree_count(5) == 15);
    CHECK(brute_tree_count(6) == 105);
}
