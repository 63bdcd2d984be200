#include <doctest.h>

#include "boolw/errors.hpp"
#include "boolw/generators.hpp"

using namespace boolw;

namespace {
// column-major vertex id for 1-based (row, col) in a p-row layout
int cm(int i, int j, int p) { return (j - 1) * p + (i - 1); }
}  // namespace

TEST_CASE("gen_hsu") {
    auto h1 = gen_hsu(1);
    CHECK(h1.graph.n() == 4);
    CHECK(h1.graph.m() == 1);
    CHECK(h1.graph.adjacent(1, 2));  // a2-b1

    auto h2 = gen_hsu(2);
    CHECK(h2.graph.n() == 6);
    CHECK(h2.graph.m() == 3);
    CHECK(h2.graph.adjacent(1, 3));  // a2-b1
    CHECK(h2.graph.adjacent(2, 3));  // a3-b1
    CHECK(h2.graph.adjacent(2, 4));  // a3-b2
    CHECK(h2.graph.degree(0) == 0);  // a1 isolated

    auto h3 = gen_hsu(3);
    CHECK(h3.graph.n() == 8);
    CHECK(h3.graph.m() == 6);
    CHECK(h3.canonical_cut->count() == 4);

    CHECK_THROWS_AS(gen_hsu(0), InputError);
}

TEST_CASE("gen_rk") {
    auto r1 = gen_rk(1);
    CHECK(r1.graph.n() == 4);
    CHECK(r1.graph.m() == 1);
    CHECK(r1.graph.adjacent(1, 3));  // a_{1}-b_{1}

    auto r2 = gen_rk(2);
    CHECK(r2.graph.n() == 8);
    CHECK(r2.graph.m() == 6);
    // S indices: 0=empty, 1={1}, 2={2}, 3={12}; b side offset 4
    CHECK(r2.graph.adjacent(1, 4 + 1));
    CHECK(r2.graph.adjacent(1, 4 + 3));
    CHECK(r2.graph.adjacent(2, 4 + 2));
    CHECK(r2.graph.adjacent(2, 4 + 3));
    CHECK(r2.graph.adjacent(3, 4 + 1));
    CHECK(r2.graph.adjacent(3, 4 + 2));
    CHECK(!r2.graph.adjacent(3, 4 + 3));  // |{1,2} cap {1,2}| = 2, even

    CHECK_THROWS_AS(gen_rk(0), InputError);
    CHECK_THROWS_AS(gen_rk(5), InputError);
}

TEST_CASE("gen_hsu_grid") {
    Graph hg22 = gen_hsu_grid(2, 2);
    CHECK(hg22.n() == 4);
    CHECK(hg22.m() == 5);
    CHECK(hg22.adjacent(cm(1, 1, 2), cm(2, 1, 2)));
    CHECK(hg22.adjacent(cm(1, 2, 2), cm(2, 2, 2)));
    CHECK(hg22.adjacent(cm(1, 1, 2), cm(1, 2, 2)));
    CHECK(hg22.adjacent(cm(1, 1, 2), cm(2, 2, 2)));
    CHECK(hg22.adjacent(cm(2, 1, 2), cm(2, 2, 2)));
    CHECK(!hg22.adjacent(cm(2, 1, 2), cm(1, 2, 2)));  // i <= i' only

    for (auto [p, q] : {std::pair{3, 4}, {4, 5}, {5, 3}}) {
        Graph g = gen_hsu_grid(p, q);
        CHECK(g.n() == p * q);
        CHECK(g.m() == q * (p - 1) + (q - 1) * p * (p + 1) / 2);
    }

    // HG_{4,5} corner degrees
    Graph hg45 = gen_hsu_grid(4, 5);
    CHECK(hg45.degree(cm(1, 1, 4)) == 5);  // v21 + all of column 2
    CHECK(hg45.degree(cm(4, 1, 4)) == 2);  // v31 + v42
    CHECK(hg45.degree(cm(1, 5, 4)) == 2);  // v25 + v14
    CHECK(hg45.degree(cm(4, 5, 4)) == 5);  // v35 + all of column 4

    CHECK_THROWS_AS(gen_hsu_grid(1, 3), InputError);
}

TEST_CASE("classic families") {
    Graph c4 = gen_grid(2, 2);
    CHECK(c4.n() == 4);
    CHECK(c4.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    CHECK(gen_complete(4).m() == 6);
    CHECK(gen_path(5).m() == 4);
    CHECK(gen_cycle(5).m() == 5);

    auto kb = gen_complete_bipartite(2, 3);
    CHECK(kb.graph.m() == 6);
    CHECK(kb.canonical_cut->count() == 2);

    Graph ra = gen_random(8, 0.5, 7);
    Graph rb = gen_random(8, 0.5, 7);
    CHECK(ra.m() == rb.m());
    for (int v = 0; v < 8; ++v) CHECK(ra.neighbors(v) == rb.neighbors(v));
    CHECK(gen_random(8, 0.0, 1).m() == 0);
    CHECK(gen_random(5, 1.0, 1).m() == 10);

    CHECK_THROWS_AS(gen_random(5, 1.5, 1), InputError);
    CHECK_THROWS_AS(gen_path(0), InputError);
}
