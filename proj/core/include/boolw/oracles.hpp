#pragma once

#include <cstdint>
#include <optional>

#include "boolw/decomposition.hpp"
#include "boolw/graph.hpp"
#include "boolw/partition_dp.hpp"
#include "boolw/subset_dp.hpp"

namespace boolw {

// Brute-force references. These deliberately avoid the main modules' closure
// and representative machinery so agreement between the two is meaningful.

// All 2^n subsets, exact neighbor counts. n <= 20.
std::optional<long> brute_subset_opt(const Graph& g, const SubsetProblem& prob);

// All q^n assignments. q^n <= 10^7.
bool brute_partition_exists(const Graph& g, const DegreeMatrix& m);
// Extremal |V_1| over feasible assignments (class 1 = matrix row/column 1).
std::optional<long> brute_partition_opt(const Graph& g, const DegreeMatrix& m, Objective obj);

struct BruteCut {
    uint64_t closure_count = 0;  // distinct N(Y) cap A over all Y subseteq V\A
    int rank = 0;
    std::optional<uint64_t> nss;  // present when |A| <= 12
};

// Closure needs |V\A| <= 12 (literal 2^|Y| enumeration).
BruteCut brute_cut(const Graph& g, const VertexSet& a);

// Independent tree enumeration (rooted set-splitting, memoized) for the
// optimal width; cross-checks exact_min_width. n <= 8.
uint64_t brute_optimal_width(const Graph& g, CutFunction f);

// Number of distinct leaf-labeled subcubic trees the enumeration visits for
// n leaves; equals (2n-5)!! for n >= 3.
uint64_t brute_tree_count(int n);

}  // namespace boolw
