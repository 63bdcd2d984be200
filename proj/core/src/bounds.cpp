#include "boolw/bounds.hpp"

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolw/cut.hpp"

namespace boolw {

bool nss_tail_bound_holds(uint64_t value, int rank) {
    if (rank == 0) return value == 1;
    using boost::multiprecision::cpp_int;
    cpp_int lhs = cpp_int(value);
    lhs = lhs * lhs;
    lhs = lhs * lhs;  // value^4
    cpp_int rhs = cpp_int(rank);
    rhs = rhs * rhs;
    rhs = rhs * rhs;  // rank^4
    rhs <<= rank * rank + 5 * rank;
    return lhs <= rhs;
}

BoundsReport bounds_report(const Graph& g, bool exact, int num_cuts, uint64_t seed) {
    BoundsReport r;
    r.exact = exact;
    int n = g.n();

    if (exact) {
        r.rank_width = exact_min_width(g, CutFunction::Rank).second;
        r.boolean_width_closure = exact_min_width(g, CutFunction::Boolean).second;
    } else {
        auto tr = greedy_decompose(g, CutFunction::Rank, seed);
        auto tb = greedy_decompose(g, CutFunction::Boolean, seed);
        r.rank_width = f_width(g, tr, CutFunction::Rank).value;
        r.boolean_width_closure = f_width(g, tb, CutFunction::Boolean).value;
    }
    r.boolean_width = std::log2(double(r.boolean_width_closure));
    if (r.rank_width == 0) {
        r.rank_zero = true;
        // edgeless: closure 1 on every cut, the chain degenerates to 0 <= 0
        r.chain_ok = r.boolean_width_closure == 1;
        r.log2_rank_width = 0.0;
        r.upper = 0.0;
    } else {
        uint64_t rw = r.rank_width;
        r.log2_rank_width = std::log2(double(rw));
        r.upper = double(rw) * double(rw) / 4.0 + 1.25 * double(rw) + r.log2_rank_width;
        // lower: rw <= closure; upper: the tail bound in exact fourth powers
        r.chain_ok = rw <= r.boolean_width_closure &&
                     nss_tail_bound_holds(r.boolean_width_closure, int(rw));
    }

    std::mt19937_64 rng(seed);
    int made = 0;
    while (made < num_cuts && n >= 2) {
        VertexSet a(n);
        for (int v = 0; v < n; ++v)
            if (rng() >> 63 & 1) a.insert(v);
        if (a.count() == 0 || a.count() == size_t(n)) continue;
        ++made;
        CutChainResult c;
        c.a = a;
        bool want_nss = a.count() <= 12;
        CutReport rep = cut_report(g, a, want_nss);
        c.closure_count = rep.closure_count;
        c.rank = rep.rank;
        c.nss = rep.nss;
        if (c.rank == 0) {
            c.chain_ok = c.closure_count == 1 && (!c.nss || *c.nss == 1);
            c.tail_ok = !c.nss || *c.nss == 1;
        } else {
            c.chain_ok = uint64_t(c.rank) <= c.closure_count &&
                         (!c.nss || c.closure_count <= *c.nss);
            c.tail_ok = !c.nss || nss_tail_bound_holds(*c.nss, c.rank);
        }
        r.cuts.push_back(std::move(c));
    }
    return r;
}

}  // namespace boolw
