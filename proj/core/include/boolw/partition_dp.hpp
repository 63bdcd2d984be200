#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "boolw/decomposition.hpp"
#include "boolw/graph.hpp"
#include "boolw/set_spec.hpp"
#include "boolw/subset_dp.hpp"

namespace boolw {

// q x q matrix of degree constraints.
struct DegreeMatrix {
    int q = 0;
    std::vector<std::vector<SetSpec>> cells;

    int d() const {
        int m = 0;
        for (const auto& row : cells)
            for (const auto& c : row) m = std::max(m, c.d_value());
        return m;
    }
    const SetSpec& at(int i, int j) const { return cells[i][j]; }
};

// Pattern graph for H-homomorphism / H-cover; loops carried out-of-band.
struct PatternGraph {
    Graph graph;
    std::vector<bool> loop;
};

DegreeMatrix q_coloring_matrix(int q);
DegreeMatrix homomorphism_matrix(const PatternGraph& h);
DegreeMatrix covering_matrix(const PatternGraph& h);

// File form: first line "q <q>", then q lines of q SetSpec tokens.
DegreeMatrix load_matrix(std::istream& in);
void save_matrix(const DegreeMatrix& m, std::ostream& out);

struct PartitionOptions {
    uint64_t class_cap = uint64_t(1) << 20;
    uint64_t tuple_cap = uint64_t(1) << 20;
    // Strict mode materializes the full cartesian product of scalar classes
    // on the inner side instead of only union-reachable tuples.
    bool strict_tuples = false;
    // When set, solve for the extremal cardinality of partition class 1
    // instead of plain feasibility.
    std::optional<Objective> extremal;
};

// Exists-D_q decision (or, in extremal mode, the optimal |V_1|).
bool solve_partition(const Graph& g, const DecompositionTree& t, const DegreeMatrix& m,
                     const PartitionOptions& opts = {});
std::optional<long> solve_partition_extremal(const Graph& g, const DecompositionTree& t,
                                             const DegreeMatrix& m, Objective obj,
                                             PartitionOptions opts = {});

}  // namespace boolw
