#include <doctest.h>

#include <sstream>

#include "boolw/decomposition.hpp"
#include "boolw/errors.hpp"
#include "boolw/generators.hpp"

using namespace boolw;

TEST_CASE("f_width basics") {
    Graph edgeless(5);
    DecompositionTree t = random_tree(edgeless, 3);
    CHECK(f_width(edgeless, t, CutFunction::Rank).value == 0);
    CHECK(f_width(edgeless, t, CutFunction::Boolean).value == 1);

    Graph k2 = gen_complete(2);
    DecompositionTree t2 = random_tree(k2, 1);
    CHECK(f_width(k2, t2, CutFunction::Boolean).value == 2);  // beta = 1
    CHECK(f_width(k2, t2, CutFunction::Rank).value == 1);

    // vertical tree of HG_{4,4}: closure <= 16 on every edge
    Graph hg = gen_hsu_grid(4, 4);
    DecompositionTree vt = structured_grid_tree(4, 4, Orientation::Vertical);
    vt.validate(hg);
    CHECK(f_width(hg, vt, CutFunction::Boolean).value <= 16);
}

TEST_CASE("exact_min_width") {
    for (int n : {3, 5, 7}) {
        Graph kn = gen_complete(n);
        auto [t, w] = exact_min_width(kn, CutFunction::Boolean);
        t.validate(kn);
        CHECK(w == 2);
    }
    CHECK(exact_min_width(gen_path(3), CutFunction::Boolean).second == 2);
    CHECK(exact_min_width(gen_cycle(5), CutFunction::Rank).second == 2);
    CHECK(exact_min_width(Graph(1), CutFunction::Rank).second == 0);

    CHECK_THROWS_AS(exact_min_width(Graph(11), CutFunction::Rank), RefusalError);
}

TEST_CASE("greedy_decompose") {
    Graph k5 = gen_complete(5);
    DecompositionTree t = greedy_decompose(k5, CutFunction::Boolean, 42);
    t.validate(k5);
    CHECK(f_width(k5, t, CutFunction::Boolean).value == 2);

    // determinism
    DecompositionTree t2 = greedy_decompose(k5, CutFunction::Boolean, 42);
    CHECK(t.edges == t2.edges);
    CHECK(t.leaf_vertex == t2.leaf_vertex);

    // never beats the optimum
    for (uint64_t seed : {1u, 2u, 3u}) {
        Graph g = gen_random(7, 0.5, seed);
        auto opt = exact_min_width(g, CutFunction::Rank).second;
        DecompositionTree gt = greedy_decompose(g, CutFunction::Rank, seed);
        gt.validate(g);
        CHECK(f_width(g, gt, CutFunction::Rank).value >= opt);
    }
}

TEST_CASE("structured trees") {
    for (auto [p, q] : {std::pair{3, 3}, {4, 4}, {4, 5}}) {
        Graph g = gen_hsu_grid(p, q);
        for (auto o : {Orientation::Vertical, Orientation::Horizontal}) {
            DecompositionTree t = structured_grid_tree(p, q, o);
            t.validate(g);
            CHECK(t.num_leaves() == p * q);
            for (int u = 0; u < t.num_nodes(); ++u)
                if (t.leaf_vertex[u] < 0) CHECK(t.adj[u].size() == 3);
        }
    }
    CHECK_THROWS_AS(structured_grid_tree(2, 4, Orientation::Vertical), InputError);
}

TEST_CASE("root_at") {
    Graph g = gen_random(8, 0.4, 21);
    DecompositionTree t = random_tree(g, 5);
    RootedTree rt = root_at(g, t, 0);
    CHECK(rt.nodes[rt.root].leaves == VertexSet::full(8));
    for (int u : rt.postorder) {
        const auto& nd = rt.nodes[u];
        if (nd.left >= 0) {
            VertexSet join = rt.nodes[nd.left].leaves | rt.nodes[nd.right].leaves;
            CHECK(join == nd.leaves);
            CHECK(!rt.nodes[nd.left].leaves.intersects(rt.nodes[nd.right].leaves));
        }
    }

    // n=2: root with two leaf children
    Graph k2 = gen_complete(2);
    DecompositionTree t2 = random_tree(k2, 1);
    RootedTree rt2 = root_at(k2, t2, 0);
    CHECK(rt2.nodes[rt2.root].left >= 0);
    CHECK(rt2.nodes[rt2.root].leaves.count() == 2);
}

TEST_CASE("random_tree validity and determinism") {
    for (int n : {2, 5, 9}) {
        Graph g = gen_random(n, 0.5, n);
        DecompositionTree a = random_tree(g, 77);
        DecompositionTree b = random_tree(g, 77);
        a.validate(g);
        CHECK(a.edges == b.edges);
        CHECK(a.leaf_vertex == b.leaf_vertex);
        CHECK(random_tree(g, 78).leaf_vertex.size() == a.leaf_vertex.size());
    }
}

TEST_CASE("tree file round trip and validation") {
    Graph g = gen_random(6, 0.5, 10);
    DecompositionTree t = random_tree(g, 4);
    std::ostringstream out;
    save_tree(t, out);
    std::istringstream in(out.str());
    DecompositionTree t2 = load_tree(in, g);
    CHECK(f_width(g, t, CutFunction::Rank).value == f_width(g, t2, CutFunction::Rank).value);

    // broken: leaf label out of range
    std::istringstream bad("leaf 0 1\nleaf 1 9\nedge 0 1\n");
    CHECK_THROWS_AS(load_tree(bad, gen_complete(2)), InputError);
    // broken: internal node of degree 2
    std::istringstream bad2("leaf 0 1\nnode 1\nleaf 2 2\nedge 0 1\nedge 1 2\n");
    CHECK_THROWS_AS(load_tree(bad2, gen_complete(2)), InputError);
}

TEST_CASE("width invariance under complement side") {
    Graph g = gen_random(7, 0.5, 30);
    DecompositionTree t = random_tree(g, 2);
    // evaluating from either endpoint of an edge gives complementary cuts
    for (size_t e = 0; e < t.edges.size(); ++e) {
        auto [u, v] = t.edges[e];
        VertexSet su = t.side_leaves(u, v, g.n());
        VertexSet sv = t.side_leaves(v, u, g.n());
        CHECK(su == sv.complement());
        CHECK(eval_cut(g, su, CutFunction::Rank) == eval_cut(g, sv, CutFunction::Rank));
        CHECK(eval_cut(g, su, CutFunction::Boolean) == eval_cut(g, sv, CutFunction::Boolean));
    }
}
