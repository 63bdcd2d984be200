#include "boolw/oracles.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "boolw/cut.hpp"
#include "boolw/errors.hpp"

namespace boolw {

std::optional<long> brute_subset_opt(const Graph& g, const SubsetProblem& prob) {
    int n = g.n();
    if (n > 20) throw RefusalError("brute_subset_opt: n > 20");
    std::optional<long> best;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        VertexSet x(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) x.insert(v);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int deg = g.neighbors(v).intersection_count(x);
            ok = x.contains(v) ? prob.sigma.contains(deg) : prob.rho.contains(deg);
        }
        if (!ok) continue;
        long size = long(x.count());
        if (!best)
            best = size;
        else if (prob.objective == Objective::Min)
            best = std::min(*best, size);
        else
            best = std::max(*best, size);
    }
    return best;
}

namespace {

// Calls fn(assignment) for every map V -> {0..q-1}; fn returns false to stop.
template <typename Fn>
void for_each_assignment(int n, int q, Fn&& fn) {
    std::vector<int> c(n, 0);
    while (true) {
        if (!fn(c)) return;
        int i = 0;
        while (i < n && ++c[i] == q) c[i++] = 0;
        if (i == n) return;
    }
}

void check_partition_budget(int n, int q) {
    double total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > 1e7) throw RefusalError("brute partition: q^n exceeds 10^7");
    }
}

bool assignment_feasible(const Graph& g, const DegreeMatrix& m, const std::vector<int>& c) {
    int n = g.n();
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < m.q; ++j) {
            int cnt = 0;
            for (int u : g.neighbors(v).to_vector())
                if (c[u] == j) ++cnt;
            if (!m.at(c[v], j).contains(cnt)) return false;
        }
    return true;
}

}  // namespace

bool brute_partition_exists(const Graph& g, const DegreeMatrix& m) {
    check_partition_budget(g.n(), m.q);
    bool found = false;
    for_each_assignment(g.n(), m.q, [&](const std::vector<int>& c) {
        if (assignment_feasible(g, m, c)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

std::optional<long> brute_partition_opt(const Graph& g, const DegreeMatrix& m, Objective obj) {
    check_partition_budget(g.n(), m.q);
    std::optional<long> best;
    for_each_assignment(g.n(), m.q, [&](const std::vector<int>& c) {
        if (assignment_feasible(g, m, c)) {
            long size = 0;
            for (int v : c)
                if (v == 0) ++size;
            if (!best)
                best = size;
            else
                best = obj == Objective::Min ? std::min(*best, size) : std::max(*best, size);
        }
        return true;
    });
    return best;
}

namespace {

std::vector<std::vector<uint64_t>> packed_cut_rows(const Graph& g, const VertexSet& a) {
    std::vector<int> b_cols = a.complement().to_vector();
    std::vector<std::vector<uint64_t>> rows;
    for (int v : a.to_vector()) {
        std::vector<uint64_t> row((b_cols.size() + 63) / 64, 0);
        for (size_t j = 0; j < b_cols.size(); ++j)
            if (g.adjacent(v, b_cols[j])) row[j / 64] |= uint64_t(1) << (j % 64);
        rows.push_back(std::move(row));
    }
    return rows;
}

uint64_t brute_closure_count(const Graph& g, const VertexSet& a) {
    std::vector<int> b = a.complement().to_vector();
    std::set<VertexSet> unions;
    for (uint32_t mask = 0; mask < (uint32_t(1) << b.size()); ++mask) {
        VertexSet u(g.n());
        for (size_t i = 0; i < b.size(); ++i)
            if (mask >> i & 1) u |= g.neighbors(b[i]);
        u &= a;
        unions.insert(u);
    }
    return unions.size();
}

uint64_t brute_nss(const Graph& g, const VertexSet& a) {
    auto rows = packed_cut_rows(g, a);
    size_t k = rows.size();
    std::set<std::vector<std::vector<uint64_t>>> spaces;  // keyed by RREF
    for (uint32_t mask = 0; mask < (uint32_t(1) << k); ++mask) {
        std::vector<std::vector<uint64_t>> sub;
        for (size_t i = 0; i < k; ++i)
            if (mask >> i & 1) sub.push_back(rows[i]);
        // reduced echelon form as a canonical key for the span
        size_t words = rows.empty() ? 0 : rows[0].size();
        std::vector<std::vector<uint64_t>> basis;
        for (auto row : sub) {
            for (const auto& b2 : basis) {
                // find pivot of b2
                int pivot = -1;
                for (size_t w = 0; w < words && pivot < 0; ++w)
                    if (b2[w]) pivot = int(w * 64 + std::countr_zero(b2[w]));
                if (pivot >= 0 && (row[pivot / 64] >> (pivot % 64) & 1))
                    for (size_t w = 0; w < words; ++w) row[w] ^= b2[w];
            }
            bool nonzero = false;
            for (uint64_t w : row) nonzero |= w != 0;
            if (nonzero) basis.push_back(row);
        }
        // back-substitute and sort for a unique form
        for (size_t i = 0; i < basis.size(); ++i) {
            int pivot = -1;
            for (size_t w = 0; w < words && pivot < 0; ++w)
                if (basis[i][w]) pivot = int(w * 64 + std::countr_zero(basis[i][w]));
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i && (basis[j][pivot / 64] >> (pivot % 64) & 1))
                    for (size_t w = 0; w < words; ++w) basis[j][w] ^= basis[i][w];
        }
        std::sort(basis.begin(), basis.end());
        spaces.insert(basis);
    }
    return spaces.size();
}

}  // namespace

BruteCut brute_cut(const Graph& g, const VertexSet& a) {
    if (g.n() - a.count() > 12) throw RefusalError("brute_cut: |V\\A| > 12");
    BruteCut r;
    r.closure_count = brute_closure_count(g, a);
    r.rank = gf2_rank(packed_cut_rows(g, a));
    if (a.count() <= 12) r.nss = brute_nss(g, a);
    return r;
}

namespace {

struct WidthSearcher {
    const Graph& g;
    CutFunction f;
    int n;
    std::unordered_map<uint32_t, uint64_t> memo;  // best over subtrees of a leaf set

    uint64_t cut_value(uint32_t mask) const {
        VertexSet a(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) a.insert(v);
        if (f == CutFunction::Boolean) return brute_closure_count(g, a);
        return uint64_t(gf2_rank(packed_cut_rows(g, a)));
    }

    // Minimum over rooted binary trees on the leaves of `mask` of the maximum
    // cut value at a strict subtree; the cut at `mask` itself is charged by
    // the caller.
    uint64_t best(uint32_t mask) {
        if ((mask & (mask - 1)) == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        uint32_t low = mask & -mask;  // smallest leaf stays on the left side
        uint32_t rest = mask ^ low;
        uint64_t result = UINT64_MAX;
        for (uint32_t sub = rest; sub > 0; sub = (sub - 1) & rest) {
            uint32_t left = mask ^ sub;
            uint64_t v = std::max({cut_value(left), cut_value(sub), best(left), best(sub)});
            result = std::min(result, v);
        }
        memo[mask] = result;
        return result;
    }
};

}  // namespace

uint64_t brute_optimal_width(const Graph& g, CutFunction f) {
    int n = g.n();
    if (n > 8) throw RefusalError("brute_optimal_width: n > 8");
    if (n <= 1) return f == CutFunction::Boolean ? 1 : 0;
    // attach leaf n-1 at the root; every other node's leaf set is a cut side
    uint32_t full = (uint32_t(1) << (n - 1)) - 1;
    WidthSearcher s{g, f, n};
    uint64_t below = s.best(full);
    return std::max(below, s.cut_value(full));
}

uint64_t brute_tree_count(int n) {
    if (n <= 2) return 1;
    // rooted binary trees on n-1 leaves
    std::vector<uint64_t> cnt(uint32_t(1) << (n - 1), 0);
    for (uint32_t mask = 1; mask < (uint32_t(1) << (n - 1)); ++mask) {
        if ((mask & (mask - 1)) == 0) {
            cnt[mask] = 1;
            continue;
        }
        uint32_t low = mask & -mask;
        uint32_t rest = mask ^ low;
        for (uint32_t sub = rest; sub > 0; sub = (sub - 1) & rest)
            cnt[mask] += cnt[mask ^ sub] * cnt[sub];
    }
    return cnt[(uint32_t(1) << (n - 1)) - 1];
}

}  // namespace boolw
