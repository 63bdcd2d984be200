#include "boolw/cut.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <unordered_set>

#include "boolw/equivalence.hpp"
#include "boolw/errors.hpp"

namespace boolw {

uint64_t union_closure_count(const Graph& g, const VertexSet& a) {
    VertexSet b = a.complement();
    std::vector<VertexSet> gens;
    {
        std::set<VertexSet> distinct;
        b.for_each([&](int v) {
            VertexSet nb = g.neighbors(v) & a;
            if (!nb.empty()) distinct.insert(nb);
        });
        gens.assign(distinct.begin(), distinct.end());
    }
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::deque<VertexSet> work;
    seen.insert(VertexSet(g.n()));
    work.push_back(VertexSet(g.n()));
    while (!work.empty()) {
        VertexSet x = std::move(work.front());
        work.pop_front();
        for (const VertexSet& gen : gens) {
            VertexSet u = x | gen;
            if (seen.insert(u).second) work.push_back(u);
        }
    }
    return seen.size();
}

int gf2_rank(std::vector<std::vector<uint64_t>> rows) {
    if (rows.empty()) return 0;
    size_t words = rows[0].size();
    int rank = 0;
    size_t r = 0;
    for (size_t w = 0; w < words && r < rows.size(); ++w) {
        for (int bit = 0; bit < 64 && r < rows.size(); ++bit) {
            uint64_t mask = uint64_t(1) << bit;
            size_t pivot = r;
            while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[r], rows[pivot]);
            for (size_t i = 0; i < rows.size(); ++i)
                if (i != r && (rows[i][w] & mask))
                    for (size_t j = 0; j < words; ++j) rows[i][j] ^= rows[r][j];
            ++r;
            ++rank;
        }
    }
    return rank;
}

namespace {

// Rows of the A x (V\A) submatrix; column c is the c-th vertex of V\A in
// ascending order.
std::vector<std::vector<uint64_t>> cut_rows(const Graph& g, const VertexSet& a) {
    VertexSet b = a.complement();
    std::vector<int> bcols = b.to_vector();
    size_t words = (bcols.size() + 63) / 64;
    if (words == 0) words = 1;
    std::vector<std::vector<uint64_t>> rows;
    a.for_each([&](int u) {
        std::vector<uint64_t> row(words, 0);
        for (size_t c = 0; c < bcols.size(); ++c)
            if (g.adjacent(u, bcols[c])) row[c / 64] |= uint64_t(1) << (c % 64);
        rows.push_back(std::move(row));
    });
    return rows;
}

// Unique reduced-echelon basis for the span of a row subset, serialized as
// the basis rows in pivot order.
std::vector<uint64_t> rref_key(const std::vector<const std::vector<uint64_t>*>& rows,
                               size_t words) {
    std::vector<std::vector<uint64_t>> basis;  // kept in pivot order
    std::vector<int> pivots;
    for (const auto* rp : rows) {
        std::vector<uint64_t> v = *rp;
        for (size_t i = 0; i < basis.size(); ++i)
            if (v[pivots[i] / 64] & (uint64_t(1) << (pivots[i] % 64)))
                for (size_t j = 0; j < words; ++j) v[j] ^= basis[i][j];
        int piv = -1;
        for (size_t j = 0; j < words && piv < 0; ++j)
            if (v[j]) piv = int(j * 64 + std::countr_zero(v[j]));
        if (piv < 0) continue;
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i][piv / 64] & (uint64_t(1) << (piv % 64)))
                for (size_t j = 0; j < words; ++j) basis[i][j] ^= v[j];
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < piv) ++pos;
        basis.insert(basis.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, piv);
    }
    std::vector<uint64_t> key;
    key.push_back(basis.size());
    for (const auto& row : basis) key.insert(key.end(), row.begin(), row.end());
    return key;
}

}  // namespace

int cut_rank(const Graph& g, const VertexSet& a) { return gf2_rank(cut_rows(g, a)); }

uint64_t nss(const Graph& g, const VertexSet& a) {
    int asz = a.count();
    if (asz > 14) throw RefusalError("nss: |A| = " + std::to_string(asz) + " exceeds guard 14");
    auto rows = cut_rows(g, a);
    size_t words = rows.empty() ? 1 : rows[0].size();
    std::set<std::vector<uint64_t>> spaces;
    for (uint32_t mask = 0; mask < (uint32_t(1) << asz); ++mask) {
        std::vector<const std::vector<uint64_t>*> sub;
        for (int i = 0; i < asz; ++i)
            if (mask & (uint32_t(1) << i)) sub.push_back(&rows[i]);
        spaces.insert(rref_key(sub, words));
    }
    return spaces.size();
}

uint64_t count_d_classes(const Graph& g, const VertexSet& a, int d, uint64_t cap) {
    return build_representatives(g, a, d, cap).size();
}

CutReport cut_report(const Graph& g, const VertexSet& a, bool with_nss,
                     const std::vector<int>& class_ds) {
    CutReport r;
    r.closure_count = union_closure_count(g, a);
    r.beta = std::log2(double(r.closure_count));
    r.rank = cut_rank(g, a);
    if (with_nss) r.nss = nss(g, a);
    for (int d : class_ds) r.d_class_counts[d] = count_d_classes(g, a, d);
    return r;
}

}  // namespace boolw
