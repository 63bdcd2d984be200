#include <doctest.h>

#include "boolw/decomposition.hpp"
#include "boolw/errors.hpp"
#include "boolw/generators.hpp"
#include "boolw/oracles.hpp"
#include "boolw/subset_dp.hpp"

using namespace boolw;

TEST_CASE("catalog") {
    CHECK(subset_catalog("independent-set").d() == 1);
    CHECK(subset_catalog("perfect-code").d() == 2);
    CHECK(subset_catalog("total-dominating-set").d() == 1);
    CHECK(subset_catalog("dominating-set").d() == 1);
    CHECK(subset_catalog("strong-stable-set").d() == 2);
    CHECK(subset_catalog("k-dominating", 3).rho == SetSpec::cofinite_excluding({0, 1, 2}));
    CHECK(subset_catalog("induced-k-regular", 2).sigma == SetSpec::finite({2}));
    CHECK_THROWS_AS(subset_catalog("nope"), InputError);
}

TEST_CASE("solve_subset examples") {
    Graph c5 = gen_cycle(5);
    DecompositionTree t5 = random_tree(c5, 1);
    CHECK(solve_subset(c5, t5, subset_catalog("independent-set")) == 2);

    Graph k3 = gen_complete(3);
    CHECK(solve_subset(k3, random_tree(k3, 1), subset_catalog("independent-set")) == 1);

    Graph c4 = gen_cycle(4);
    CHECK(!solve_subset(c4, random_tree(c4, 1), subset_catalog("perfect-code")).has_value());

    Graph hg = gen_hsu_grid(4, 4);
    DecompositionTree vt = structured_grid_tree(4, 4, Orientation::Vertical);
    auto dp = solve_subset(hg, vt, subset_catalog("dominating-set"));
    auto oracle = brute_subset_opt(hg, subset_catalog("dominating-set"));
    REQUIRE(dp.has_value());
    CHECK(dp == oracle);
}

TEST_CASE("d = 0 and degenerate problems") {
    // sigma = rho = N: everything qualifies
    Graph g = gen_random(6, 0.5, 8);
    SubsetProblem all{SetSpec::nat(), SetSpec::nat(), Objective::Max};
    CHECK(all.d() == 0);
    CHECK(solve_subset(g, random_tree(g, 2), all) == 6);

    SubsetProblem none{SetSpec::finite({}), SetSpec::nat(), Objective::Max};
    CHECK(solve_subset(g, random_tree(g, 2), none) == 0);  // only the empty set

    // n = 1 shortcuts
    Graph one(1);
    CHECK(solve_subset(one, random_tree(one, 1), subset_catalog("independent-set")) == 1);
    CHECK(solve_subset(one, random_tree(one, 1), subset_catalog("dominating-set")) == 1);
    CHECK(!solve_subset(one, random_tree(one, 1), subset_catalog("total-dominating-set"))
               .has_value());
}

TEST_CASE("isolated vertices") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);  // vertices 3, 4 isolated
    DecompositionTree t = random_tree(g, 3);
    CHECK(solve_subset(g, t, subset_catalog("independent-set")) == 4);
    CHECK(!solve_subset(g, t, subset_catalog("total-dominating-set")).has_value());
    CHECK(solve_subset(g, t, subset_catalog("dominating-set")) ==
          brute_subset_opt(g, subset_catalog("dominating-set")));
}

TEST_CASE("min/max flip") {
    Graph c6 = gen_cycle(6);
    DecompositionTree t = random_tree(c6, 4);
    CHECK(solve_subset(c6, t, subset_catalog("min-independent-dominating-set")) == 2);
    CHECK(solve_subset(c6, t, subset_catalog("max-independent-dominating-set")) == 3);
    CHECK(solve_subset(c6, t, subset_catalog("min-perfect-code")) == 2);
    CHECK(solve_subset(c6, t, subset_catalog("max-perfect-code")) == 2);
}

TEST_CASE("tree invariance and sanity") {
    for (uint64_t s = 0; s < 4; ++s) {
        Graph g = gen_random(8, 0.4, 300 + s);
        auto prob = subset_catalog("independent-set");
        auto ref = solve_subset(g, random_tree(g, 1000), prob);
        for (uint64_t ts = 0; ts < 4; ++ts)
            CHECK(solve_subset(g, random_tree(g, 2000 + ts), prob) == ref);
        REQUIRE(ref.has_value());
        CHECK(*ref >= 1);  // Max IS >= 1 on a nonempty graph
        auto ds = solve_subset(g, random_tree(g, 1), subset_catalog("dominating-set"));
        REQUIRE(ds.has_value());
        CHECK(*ds <= g.n());
    }
}
