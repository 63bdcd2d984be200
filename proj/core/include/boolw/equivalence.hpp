#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "boolw/graph.hpp"

namespace boolw {

// d-neighbor signature: per outside twin class, the count of members of X
// adjacent to the class, truncated at d.
using Signature = std::string;  // one byte per outside twin class

// All canonical representatives of the d-neighbor equivalence classes over
// subsets of the cut A, with signature-keyed lookup. Immutable once built.
class RepresentativeIndex {
  public:
    RepresentativeIndex(const Graph& g, const VertexSet& a, int d, uint64_t cap);

    int size() const { return int(reps_.size()); }
    int d() const { return d_; }
    const VertexSet& cut() const { return a_; }
    const VertexSet& representative(int cls) const { return reps_[cls]; }
    const std::vector<VertexSet>& representatives() const { return reps_; }

    Signature signature(const VertexSet& x) const;
    // Class id of X; X must be a subset of the cut.
    int class_of(const VertexSet& x) const;
    std::pair<int, const VertexSet*> canonical(const VertexSet& x) const;

    // Greedy prune: drop vertices whose removal preserves the signature.
    VertexSet prune(const VertexSet& x) const;

    int num_outside_classes() const { return int(outside_nbhd_.size()); }

  private:
    VertexSet a_;
    int d_;
    std::vector<VertexSet> outside_nbhd_;  // N(rep) for one rep per outside twin class
    std::vector<VertexSet> reps_;
    std::unordered_map<Signature, int> sig_to_class_;
};

// BFS closure over subsets of A: extend known representatives by the
// smallest unused vertex of each inner twin class; a subset becomes a new
// representative iff its signature is unseen. Size-then-vertex order makes
// every representative minimum-size in its class.
RepresentativeIndex build_representatives(const Graph& g, const VertexSet& a, int d,
                                          uint64_t cap = uint64_t(1) << 20);

}  // namespace boolw
