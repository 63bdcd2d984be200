#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolw/decomposition.hpp"
#include "boolw/graph.hpp"

namespace boolw {

// One sampled cut checked against the per-cut chain
// log2(rank) <= log2(closure) <= log2(nss) and the nss tail bound
// nss <= 2^(rank^2/4 + 5*rank/4) * rank. Comparisons are exact integer
// forms (fourth powers for the tail), never floating logs.
struct CutChainResult {
    VertexSet a;
    uint64_t closure_count = 1;
    int rank = 0;
    std::optional<uint64_t> nss;  // skipped when |A| is too large
    bool chain_ok = false;
    bool tail_ok = false;  // vacuously true when nss was skipped
};

struct BoundsReport {
    bool exact = false;  // exact tree search vs greedy heuristic
    uint64_t rank_width = 0;
    uint64_t boolean_width_closure = 1;  // 2^bw as an integer
    double log2_rank_width = 0.0;
    double boolean_width = 0.0;
    double upper = 0.0;  // rw^2/4 + 5*rw/4 + log2(rw)
    bool chain_ok = false;
    bool rank_zero = false;  // edgeless convention: rw=0 short-circuits the chain
    std::vector<CutChainResult> cuts;
};

// exact mode needs n <= 10; heuristic mode uses the seeded greedy builder.
// num_cuts random proper cuts are sampled for the per-cut chain.
BoundsReport bounds_report(const Graph& g, bool exact, int num_cuts, uint64_t seed);

// Exact check of closure <= 2^(r^2/4 + 5r/4) * r via fourth powers
// (closure^4 <= r^4 * 2^(r^2+5r)); r = 0 demands closure == 1.
bool nss_tail_bound_holds(uint64_t value, int rank);

}  // namespace boolw
