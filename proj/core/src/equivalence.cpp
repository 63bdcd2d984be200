#include "boolw/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "boolw/errors.hpp"

namespace boolw {

RepresentativeIndex::RepresentativeIndex(const Graph& g, const VertexSet& a, int d,
                                         uint64_t cap)
    : a_(a), d_(d) {
    VertexSet b = a.complement();
    for (const auto& cls : external_module_partition(g, b))
        outside_nbhd_.push_back(g.neighbors(cls.front()));

    // inner twin classes of A, ordered by smallest member
    std::vector<std::vector<int>> inner = external_module_partition(g, a);

    VertexSet empty(g.n());
    reps_.push_back(empty);
    sig_to_class_.emplace(signature(empty), 0);
    std::deque<int> work{0};
    while (!work.empty()) {
        int idx = work.front();
        work.pop_front();
        VertexSet base = reps_[idx];
        for (const auto& cls : inner) {
            int pick = -1;
            for (int v : cls)
                if (!base.contains(v)) {
                    pick = v;
                    break;
                }
            if (pick < 0) continue;
            VertexSet ext = base;
            ext.insert(pick);
            Signature sig = signature(ext);
            if (sig_to_class_.contains(sig)) continue;
            if (reps_.size() >= cap)
                throw RefusalError("representative cap " + std::to_string(cap) +
                                   " exceeded on a cut with |A|=" + std::to_string(a.count()));
            int id = int(reps_.size());
            reps_.push_back(ext);
            sig_to_class_.emplace(std::move(sig), id);
            work.push_back(id);
        }
    }
}

Signature RepresentativeIndex::signature(const VertexSet& x) const {
    Signature sig(outside_nbhd_.size(), '\0');
    for (size_t c = 0; c < outside_nbhd_.size(); ++c)
        sig[c] = char(std::min(outside_nbhd_[c].intersection_count(x), d_));
    return sig;
}

int RepresentativeIndex::class_of(const VertexSet& x) const {
    auto it = sig_to_class_.find(signature(x));
    if (it == sig_to_class_.end())
        throw std::logic_error("representative index incomplete: signature not found");
    return it->second;
}

std::pair<int, const VertexSet*> RepresentativeIndex::canonical(const VertexSet& x) const {
    int cls = class_of(x);
    return {cls, &reps_[cls]};
}

VertexSet RepresentativeIndex::prune(const VertexSet& x) const {
    VertexSet r = x;
    std::vector<int> cnt(outside_nbhd_.size());
    for (size_t c = 0; c < outside_nbhd_.size(); ++c)
        cnt[c] = outside_nbhd_[c].intersection_count(r);
    x.for_each([&](int v) {
        // v is removable iff every outside class seeing it still counts >= d
        for (size_t c = 0; c < outside_nbhd_.size(); ++c)
            if (outside_nbhd_[c].contains(v) && cnt[c] <= d_) return;
        r.erase(v);
        for (size_t c = 0; c < outside_nbhd_.size(); ++c)
            if (outside_nbhd_[c].contains(v)) --cnt[c];
    });
    return r;
}

RepresentativeIndex build_representatives(const Graph& g, const VertexSet& a, int d,
                                          uint64_t cap) {
    return RepresentativeIndex(g, a, d, cap);
}

}  // namespace boolw
