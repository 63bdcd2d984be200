#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "boolw/graph.hpp"

namespace boolw {

enum class CutFunction { Boolean, Rank };

// Width value carried exactly: closure count for Boolean, the rank itself
// for Rank. log2 is applied only at reporting boundaries.
uint64_t eval_cut(const Graph& g, const VertexSet& a, CutFunction f);

// Unrooted subcubic tree whose leaves biject to graph vertices.
struct DecompositionTree {
    std::vector<std::vector<int>> adj;
    std::vector<int> leaf_vertex;  // graph vertex for leaves, -1 for internal nodes
    std::vector<std::pair<int, int>> edges;

    int add_node(int leaf = -1) {
        adj.emplace_back();
        leaf_vertex.push_back(leaf);
        return int(adj.size()) - 1;
    }
    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
    }
    int num_nodes() const { return int(adj.size()); }
    int num_leaves() const;

    // Throws InputError unless subcubic, connected, acyclic, and the leaf
    // labels biject onto V(G).
    void validate(const Graph& g) const;

    // Leaf set of the component containing `from` when edge {from,avoid}
    // is removed.
    VertexSet side_leaves(int from, int avoid, int n_graph) const;
};

struct WidthResult {
    uint64_t value = 0;
    int argmax_edge = -1;  // smallest edge id attaining the max
};

WidthResult f_width(const Graph& g, const DecompositionTree& t, CutFunction f);

// Exhaustive search over all (2n-5)!! leaf-labeled subcubic trees; first
// tree attaining the minimum in enumeration order wins. Refuses n > 10.
std::pair<DecompositionTree, uint64_t> exact_min_width(const Graph& g, CutFunction f);

// Recursive balanced bipartitioning with steepest-descent swaps; heuristic,
// no approximation guarantee. Deterministic per seed.
DecompositionTree greedy_decompose(const Graph& g, CutFunction f, uint64_t seed,
                                   int restarts = 3, int iter_cap = 100);

// Comb whose teeth are combs over the given vertex groups; all internal
// degrees 3. Needs >= 2 groups.
DecompositionTree comb_of_groups(const Graph& g, const std::vector<std::vector<int>>& groups);

enum class Orientation { Vertical, Horizontal };

// Structured tree for a p x q column-major vertex layout: vertical groups
// columns, horizontal groups rows. Requires p, q >= 3.
DecompositionTree structured_grid_tree(int p, int q, Orientation o);

// Uniformly-shaped random valid tree: seeded shuffle of the vertex order,
// then insertion at a random tree edge.
DecompositionTree random_tree(const Graph& g, uint64_t seed);

// Binary rooted view obtained by subdividing one tree edge.
struct RootedTree {
    struct Node {
        int left = -1, right = -1, parent = -1;
        int leaf_vertex = -1;
        VertexSet leaves;  // V_w
    };
    std::vector<Node> nodes;
    int root = -1;
    std::vector<int> postorder;
};

RootedTree root_at(const Graph& g, const DecompositionTree& t, int edge_index);

// Line format: optional "node <id>", "leaf <id> <graph-vertex-1-indexed>",
// "edge <id1> <id2>".
DecompositionTree load_tree(std::istream& in, const Graph& g);
void save_tree(const DecompositionTree& t, std::ostream& out);

}  // namespace boolw
