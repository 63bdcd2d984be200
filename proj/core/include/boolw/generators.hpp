#pragma once

#include <cstdint>
#include <optional>

#include "boolw/graph.hpp"

namespace boolw {

// A generated graph together with the canonical cut (A-side) the family
// is usually analyzed on, when one exists.
struct GeneratedGraph {
    Graph graph;
    std::optional<VertexSet> canonical_cut;
};

// Hsu graph H_k on 2(k+1) vertices: A-side a_1..a_{k+1} at indices 0..k,
// B-side b_1..b_{k+1} at indices k+1..2k+1. N(a_i) = {b_1..b_{i-1}}.
GeneratedGraph gen_hsu(int k);

// R_k: both sides indexed by the subsets of {1..k} in binary-counter
// order; a_S at index S, b_T at index 2^k + T; adjacent iff |S cap T| odd.
// k restricted to 1..4.
GeneratedGraph gen_rk(int k);

// Hsu-grid HG_{p,q}, vertices v_{i,j} numbered column-major:
// index(i,j) = (j-1)*p + (i-1) for 1-based row i and column j.
Graph gen_hsu_grid(int p, int q);

// Plain p x q grid, column-major numbering.
Graph gen_grid(int p, int q);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
// A-side 0..n1-1, B-side n1..n1+n2-1.
GeneratedGraph gen_complete_bipartite(int n1, int n2);

// Erdos-Renyi style: each pair (u,v), u<v in ascending order, gets an edge
// when the next mt19937_64 draw, scaled to [0,1), is below p. Deterministic
// across platforms for a fixed seed.
Graph gen_random(int n, double edge_prob, uint64_t seed);

}  // namespace boolw
