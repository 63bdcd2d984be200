#include "boolw/subset_dp.hpp"

#include <limits>
#include <vector>

#include "boolw/equivalence.hpp"
#include "boolw/errors.hpp"

namespace boolw {

SubsetProblem subset_catalog(const std::string& name, int k) {
    using S = SetSpec;
    auto finite_range = [](int lo, int hi) {
        std::set<int> s;
        for (int i = lo; i <= hi; ++i) s.insert(i);
        return S::finite(std::move(s));
    };
    if (name == "independent-set") return {S::finite({0}), S::nat(), Objective::Max};
    if (name == "dominating-set") return {S::nat(), S::cofinite_excluding({0}), Objective::Min};
    if (name == "total-dominating-set")
        return {S::cofinite_excluding({0}), S::cofinite_excluding({0}), Objective::Min};
    if (name == "independent-dominating-set" || name == "min-independent-dominating-set")
        return {S::finite({0}), S::cofinite_excluding({0}), Objective::Min};
    if (name == "max-independent-dominating-set")
        return {S::finite({0}), S::cofinite_excluding({0}), Objective::Max};
    if (name == "perfect-code" || name == "min-perfect-code")
        return {S::finite({0}), S::finite({1}), Objective::Min};
    if (name == "max-perfect-code") return {S::finite({0}), S::finite({1}), Objective::Max};
    if (name == "strong-stable-set") return {S::finite({0}), S::finite({0, 1}), Objective::Max};
    if (name == "perfect-dominating-set") return {S::nat(), S::finite({1}), Objective::Min};
    if (name == "induced-k-regular") return {S::finite({k}), S::nat(), Objective::Max};
    if (name == "k-bounded-degree") return {finite_range(0, k), S::nat(), Objective::Max};
    if (name == "k-dominating") {
        std::set<int> excl;
        for (int i = 0; i < k; ++i) excl.insert(i);
        return {S::nat(), S::cofinite_excluding(std::move(excl)), Objective::Min};
    }
    throw InputError("unknown subset problem '" + name + "'");
}

namespace {

constexpr long UNDEF = std::numeric_limits<long>::min();

inline long combine(long cur, long cand, Objective obj) {
    if (cur == UNDEF) return cand;
    return obj == Objective::Min ? std::min(cur, cand) : std::max(cur, cand);
}

}  // namespace

std::optional<long> solve_subset(const Graph& g, const DecompositionTree& t,
                                 const SubsetProblem& prob, uint64_t class_cap) {
    int n = g.n();
    int d = prob.d();
    if (n == 0) return 0;
    if (n == 1) {
        // 2^1 candidates, no tree machinery needed
        std::optional<long> best;
        if (prob.rho.contains(0)) best = 0;
        if (prob.sigma.contains(0)) {
            if (!best)
                best = 1;
            else
                best = combine(*best, 1, prob.objective);
        }
        return best;
    }
    RootedTree rt = root_at(g, t, 0);
    int nn = int(rt.nodes.size());

    std::vector<RepresentativeIndex> idx_in, idx_out;
    idx_in.reserve(nn);
    idx_out.reserve(nn);
    for (int u = 0; u < nn; ++u) {
        idx_in.emplace_back(g, rt.nodes[u].leaves, d, class_cap);
        idx_out.emplace_back(g, rt.nodes[u].leaves.complement(), d, class_cap);
    }

    // Tab[u][inner * n_out + outer]
    std::vector<std::vector<long>> tab(nn);

    for (int w : rt.postorder) {
        const auto& node = rt.nodes[w];
        int n_in = idx_in[w].size(), n_out = idx_out[w].size();
        tab[w].assign(size_t(n_in) * n_out, UNDEF);
        if (node.left < 0) {  // leaf
            int l = node.leaf_vertex;
            VertexSet single(n);
            single.insert(l);
            int cls_full = idx_in[w].class_of(single);
            int cls_empty = idx_in[w].class_of(VertexSet(n));
            for (int oy = 0; oy < n_out; ++oy) {
                const VertexSet& rep = idx_out[w].representative(oy);
                int tcount = std::min(g.neighbors(l).intersection_count(rep), d);
                auto& row_full = tab[w][size_t(cls_full) * n_out + oy];
                auto& row_empty = tab[w][size_t(cls_empty) * n_out + oy];
                if (prob.sigma.member_truncated(tcount, d))
                    row_full = combine(row_full, 1, prob.objective);
                if (prob.rho.member_truncated(tcount, d))
                    row_empty = combine(row_empty, 0, prob.objective);
            }
            continue;
        }
        int a = node.left, b = node.right;
        int na = idx_in[a].size(), nb = idx_in[b].size();
        int na_out = idx_out[a].size(), nb_out = idx_out[b].size();

        // componentwise join tables, computed once per (class pair)
        std::vector<int> join_w(size_t(na) * nb), join_abar(size_t(nb) * n_out),
            join_bbar(size_t(na) * n_out);
        for (int ia = 0; ia < na; ++ia)
            for (int ib = 0; ib < nb; ++ib)
                join_w[size_t(ia) * nb + ib] =
                    idx_in[w].class_of(idx_in[a].representative(ia) | idx_in[b].representative(ib));
        for (int ib = 0; ib < nb; ++ib)
            for (int ow = 0; ow < n_out; ++ow)
                join_abar[size_t(ib) * n_out + ow] = idx_out[a].class_of(
                    idx_in[b].representative(ib) | idx_out[w].representative(ow));
        for (int ia = 0; ia < na; ++ia)
            for (int ow = 0; ow < n_out; ++ow)
                join_bbar[size_t(ia) * n_out + ow] = idx_out[b].class_of(
                    idx_in[a].representative(ia) | idx_out[w].representative(ow));

        for (int ia = 0; ia < na; ++ia)
            for (int ib = 0; ib < nb; ++ib) {
                int iw = join_w[size_t(ia) * nb + ib];
                for (int ow = 0; ow < n_out; ++ow) {
                    long va = tab[a][size_t(ia) * na_out + join_abar[size_t(ib) * n_out + ow]];
                    if (va == UNDEF) continue;
                    long vb = tab[b][size_t(ib) * nb_out + join_bbar[size_t(ia) * n_out + ow]];
                    if (vb == UNDEF) continue;
                    auto& cell = tab[w][size_t(iw) * n_out + ow];
                    cell = combine(cell, va + vb, prob.objective);
                }
            }
        tab[a].clear();
        tab[b].clear();
    }

    long root_val = tab[rt.root][0];  // single inner and outer class at the root
    if (root_val == UNDEF) return std::nullopt;
    return root_val;
}

}  // namespace boolw
