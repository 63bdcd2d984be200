#pragma once

#include <iosfwd>
#include <vector>

#include "boolw/vertex_set.hpp"

namespace boolw {

// Undirected simple graph over vertices 0..n-1. Immutable once built
// (add_edge is construction-time only).
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int n() const { return n_; }
    long m() const { return m_; }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }

    // Self-loops rejected; a duplicate edge collapses silently.
    void add_edge(int u, int v);

  private:
    int n_ = 0;
    long m_ = 0;
    std::vector<VertexSet> adj_;
};

// Line-oriented format: '#' comments, one "p <n> <m>" header, then
// "e <u> <v>" lines with 1-indexed endpoints.
Graph load_graph(std::istream& in);
void save_graph(const Graph& g, std::ostream& out);

// N(Y) = union of neighborhoods of the members of Y.
VertexSet neighborhood_union(const Graph& g, const VertexSet& y);

// Coarsest partition of A into classes with identical neighborhoods in
// V(G)\A, classes ordered by smallest member, members ascending.
std::vector<std::vector<int>> external_module_partition(const Graph& g, const VertexSet& a);

}  // namespace boolw
