#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "boolw/graph.hpp"

namespace boolw {

struct CutReport {
    uint64_t closure_count = 1;  // distinct unions N(Y) cap A, empty union included
    double beta = 0.0;           // log2(closure_count)
    int rank = 0;                // GF(2) rank of the cut submatrix
    std::optional<uint64_t> nss;
    std::map<int, uint64_t> d_class_counts;
};

// Size of the union-closed family generated by {N(b) cap A : b outside A}
// together with the empty union. Worklist closure over the distinct
// generators, never an enumeration of all Y.
uint64_t union_closure_count(const Graph& g, const VertexSet& a);

// GF(2) rank of the A x (V\A) bipartite adjacency submatrix.
int cut_rank(const Graph& g, const VertexSet& a);

// Number of distinct GF(2) subspaces spanned by subsets of the rows of the
// cut submatrix, the zero space included. Refuses |A| > 14.
uint64_t nss(const Graph& g, const VertexSet& a);

// Number of equivalence classes of the d-neighbor equivalence over subsets
// of A (|R_d|). Refuses when the class count exceeds cap.
uint64_t count_d_classes(const Graph& g, const VertexSet& a, int d,
                         uint64_t cap = uint64_t(1) << 20);

CutReport cut_report(const Graph& g, const VertexSet& a, bool with_nss = false,
                     const std::vector<int>& class_ds = {});

// GF(2) rank of packed bit rows (shared elimination kernel).
int gf2_rank(std::vector<std::vector<uint64_t>> rows);

}  // namespace boolw
