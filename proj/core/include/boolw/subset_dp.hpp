#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "boolw/decomposition.hpp"
#include "boolw/graph.hpp"
#include "boolw/set_spec.hpp"

namespace boolw {

enum class Objective { Min, Max };

struct SubsetProblem {
    SetSpec sigma = SetSpec::nat();
    SetSpec rho = SetSpec::nat();
    Objective objective = Objective::Max;

    int d() const { return std::max(sigma.d_value(), rho.d_value()); }
};

// Known problem encodings: independent-set, dominating-set,
// total-dominating-set, independent-dominating-set, perfect-code,
// strong-stable-set, perfect-dominating-set, induced-k-regular,
// k-bounded-degree, k-dominating (the last three take the parameter k).
SubsetProblem subset_catalog(const std::string& name, int k = 0);

// Optimal (sigma,rho)-set size via bottom-up DP over the rooted tree;
// nullopt means INFEASIBLE.
std::optional<long> solve_subset(const Graph& g, const DecompositionTree& t,
                                 const SubsetProblem& prob,
                                 uint64_t class_cap = uint64_t(1) << 20);

}  // namespace boolw
