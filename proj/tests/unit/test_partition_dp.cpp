#include <doctest.h>

#include <sstream>

#include "boolw/decomposition.hpp"
#include "boolw/errors.hpp"
#include "boolw/generators.hpp"
#include "boolw/oracles.hpp"
#include "boolw/partition_dp.hpp"

using namespace boolw;

namespace {
PatternGraph simple_pattern(Graph g) {
    PatternGraph h;
    h.loop.assign(g.n(), false);
    h.graph = std::move(g);
    return h;
}
}  // namespace

TEST_CASE("catalog matrices") {
    DegreeMatrix qc = q_coloring_matrix(3);
    CHECK(qc.q == 3);
    CHECK(qc.d() == 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(qc.at(i, j) == (i == j ? SetSpec::finite({0}) : SetSpec::nat()));

    // K_2-homomorphism is 2-coloring
    DegreeMatrix hom = homomorphism_matrix(simple_pattern(gen_complete(2)));
    CHECK(hom.q == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(hom.at(i, j) == q_coloring_matrix(2).at(i, j));

    // cover of a single edge: both cross cells {1}
    DegreeMatrix cov = covering_matrix(simple_pattern(gen_complete(2)));
    CHECK(cov.at(0, 1) == SetSpec::finite({1}));
    CHECK(cov.at(1, 0) == SetSpec::finite({1}));
    CHECK(cov.at(0, 0) == SetSpec::finite({0}));

    // loop on the pattern lifts the diagonal
    PatternGraph loopy = simple_pattern(Graph(1));
    loopy.loop[0] = true;
    CHECK(homomorphism_matrix(loopy).at(0, 0) == SetSpec::nat());
}

TEST_CASE("matrix file round trip") {
    DegreeMatrix m = q_coloring_matrix(3);
    m.cells[1][2] = SetSpec::cofinite_excluding({0, 2});
    std::ostringstream out;
    save_matrix(m, out);
    std::istringstream in(out.str());
    DegreeMatrix m2 = load_matrix(in);
    CHECK(m2.q == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m2.at(i, j) == m.at(i, j));

    std::istringstream bad("q 2\n{0} N\n");
    CHECK_THROWS_AS(load_matrix(bad), InputError);
}

TEST_CASE("solve_partition examples") {
    Graph c5 = gen_cycle(5);
    DecompositionTree t5 = random_tree(c5, 1);
    CHECK(solve_partition(c5, t5, q_coloring_matrix(3)));
    CHECK(!solve_partition(c5, t5, q_coloring_matrix(2)));

    Graph k3 = gen_complete(3);
    DecompositionTree t3 = random_tree(k3, 1);
    CHECK(!solve_partition(k3, t3, q_coloring_matrix(2)));
    CHECK(solve_partition(k3, t3, q_coloring_matrix(3)));
    // empty classes allowed: q above the chromatic number stays feasible
    CHECK(solve_partition(k3, t3, q_coloring_matrix(4)));

    // q = 1, D = [{0}]: universe must be independent
    DegreeMatrix indep;
    indep.q = 1;
    indep.cells = {{SetSpec::finite({0})}};
    Graph edgeless(4);
    CHECK(solve_partition(edgeless, random_tree(edgeless, 1), indep));
    CHECK(!solve_partition(k3, t3, indep));

    // q = 1, D = [N]: no constraint at all
    DegreeMatrix any;
    any.q = 1;
    any.cells = {{SetSpec::nat()}};
    CHECK(solve_partition(k3, t3, any));

    // K_2-cover of C_4 agrees with brute force
    Graph c4 = gen_cycle(4);
    DegreeMatrix cov = covering_matrix(simple_pattern(gen_complete(2)));
    CHECK(solve_partition(c4, random_tree(c4, 2), cov) == brute_partition_exists(c4, cov));
}

TEST_CASE("strict mode agrees with lazy mode") {
    for (uint64_t s = 0; s < 6; ++s) {
        Graph g = gen_random(6, 0.5, 40 + s);
        DecompositionTree t = random_tree(g, s);
        for (int q : {2, 3}) {
            DegreeMatrix m = q_coloring_matrix(q);
            PartitionOptions lazy, strict;
            strict.strict_tuples = true;
            CHECK(solve_partition(g, t, m, lazy) == solve_partition(g, t, m, strict));
        }
    }
}

TEST_CASE("extremal mode") {
    // max |V_1| with V_1 independent and V_2 unconstrained = max independent set
    DegreeMatrix m;
    m.q = 2;
    m.cells = {{SetSpec::finite({0}), SetSpec::nat()}, {SetSpec::nat(), SetSpec::nat()}};
    for (uint64_t s = 0; s < 5; ++s) {
        Graph g = gen_random(7, 0.5, 60 + s);
        DecompositionTree t = random_tree(g, s);
        auto v = solve_partition_extremal(g, t, m, Objective::Max);
        auto o = brute_partition_opt(g, m, Objective::Max);
        CHECK(v == o);
    }
    // infeasible: q = 1 independence on a clique
    DegreeMatrix indep;
    indep.q = 1;
    indep.cells = {{SetSpec::finite({0})}};
    Graph k4 = gen_complete(4);
    CHECK(!solve_partition_extremal(k4, random_tree(k4, 1), indep, Objective::Min).has_value());
}

TEST_CASE("n = 1 shortcut") {
    Graph one(1);
    DecompositionTree t = random_tree(one, 1);
    CHECK(solve_partition(one, t, q_coloring_matrix(2)));
    DegreeMatrix need_one;
    need_one.q = 1;
    need_one.cells = {{SetSpec::finite({1})}};
    CHECK(!solve_partition(one, t, need_one));
    CHECK(solve_partition_extremal(one, t, q_coloring_matrix(2), Objective::Max) == 1);
}
