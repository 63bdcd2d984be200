#include "boolw/partition_dp.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "boolw/equivalence.hpp"
#include "boolw/errors.hpp"

namespace boolw {

DegreeMatrix q_coloring_matrix(int q) {
    if (q < 1) throw InputError("q-coloring: q must be >= 1");
    DegreeMatrix m;
    m.q = q;
    m.cells.assign(q, std::vector<SetSpec>(q, SetSpec::nat()));
    for (int i = 0; i < q; ++i) m.cells[i][i] = SetSpec::finite({0});
    return m;
}

DegreeMatrix homomorphism_matrix(const PatternGraph& h) {
    int q = h.graph.n();
    if (q < 1) throw InputError("homomorphism: pattern graph is empty");
    DegreeMatrix m;
    m.q = q;
    m.cells.assign(q, std::vector<SetSpec>(q, SetSpec::finite({0})));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if ((i != j && h.graph.adjacent(i, j)) || (i == j && h.loop[i]))
                m.cells[i][j] = SetSpec::nat();
    return m;
}

DegreeMatrix covering_matrix(const PatternGraph& h) {
    int q = h.graph.n();
    if (q < 1) throw InputError("covering: pattern graph is empty");
    DegreeMatrix m;
    m.q = q;
    m.cells.assign(q, std::vector<SetSpec>(q, SetSpec::finite({0})));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if ((i != j && h.graph.adjacent(i, j)) || (i == j && h.loop[i]))
                m.cells[i][j] = SetSpec::finite({1});
    return m;
}

DegreeMatrix load_matrix(std::istream& in) {
    std::string line;
    DegreeMatrix m;
    int row = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "q") {
            if (!(ls >> m.q) || m.q < 1) throw InputError("matrix: bad q line");
            m.cells.assign(m.q, std::vector<SetSpec>(m.q, SetSpec::nat()));
        } else {
            if (m.q == 0) throw InputError("matrix: cells before q line");
            if (row >= m.q) throw InputError("matrix: too many rows");
            for (int j = 0; j < m.q; ++j) {
                if (j > 0 && !(ls >> tok)) throw InputError("matrix: short row");
                m.cells[row][j] = SetSpec::parse(tok);
            }
            ++row;
        }
    }
    if (m.q == 0 || row != m.q) throw InputError("matrix: missing rows");
    return m;
}

void save_matrix(const DegreeMatrix& m, std::ostream& out) {
    out << "q " << m.q << "\n";
    for (int i = 0; i < m.q; ++i) {
        for (int j = 0; j < m.q; ++j) out << (j ? " " : "") << m.cells[i][j].to_string();
        out << "\n";
    }
}

namespace {

constexpr long UNDEF = std::numeric_limits<long>::min();

inline long combine(long cur, long cand, const std::optional<Objective>& obj) {
    if (cur == UNDEF) return cand;
    if (!obj) return cur;  // plain feasibility: presence is all that matters
    return *obj == Objective::Min ? std::min(cur, cand) : std::max(cur, cand);
}

// pow with a cap guard; returns the exact product
uint64_t checked_pow(uint64_t base, int exp, uint64_t cap, const char* what) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / std::max<uint64_t>(base, 1))
            throw RefusalError(std::string(what) + ": tuple count exceeds cap " +
                               std::to_string(cap));
        r *= base;
        if (r > cap)
            throw RefusalError(std::string(what) + ": tuple count exceeds cap " +
                               std::to_string(cap));
    }
    return std::max<uint64_t>(r, 1);
}

struct PartitionSolver {
    const Graph& g;
    const DegreeMatrix& m;
    const PartitionOptions& opts;
    int q, d;

    std::optional<long> run(const DecompositionTree& t) {
        int n = g.n();
        if (n == 1) {
            long best = UNDEF;
            for (int i = 0; i < q; ++i) {
                bool ok = true;
                for (int j = 0; j < q && ok; ++j) ok = m.at(i, j).member_truncated(0, d);
                if (ok) best = combine(best, i == 0 ? 1 : 0, opts.extremal);
            }
            if (best == UNDEF) return std::nullopt;
            return best;
        }
        RootedTree rt = root_at(g, t, 0);
        int nn = int(rt.nodes.size());
        std::vector<RepresentativeIndex> idx_in, idx_out;
        for (int u = 0; u < nn; ++u) {
            idx_in.emplace_back(g, rt.nodes[u].leaves, d, opts.class_cap);
            idx_out.emplace_back(g, rt.nodes[u].leaves.complement(), d, opts.class_cap);
        }

        // per node: inner tuple list (decoded scalar ids), encoded->id map,
        // dense table [tuple id][outer mixed-radix id]
        std::vector<std::vector<std::vector<int>>> inner(nn);
        std::vector<std::unordered_map<uint64_t, int>> inner_id(nn);
        std::vector<uint64_t> n_out_tuples(nn);
        std::vector<std::vector<long>> tab(nn);

        auto encode = [&](const std::vector<int>& tup, uint64_t base) {
            uint64_t code = 0;
            for (int j = q - 1; j >= 0; --j) code = code * base + uint64_t(tup[j]);
            return code;
        };
        auto intern_inner = [&](int u, const std::vector<int>& tup) {
            uint64_t code = encode(tup, uint64_t(idx_in[u].size()));
            auto [it, fresh] = inner_id[u].emplace(code, int(inner[u].size()));
            if (fresh) {
                if (inner[u].size() >= opts.tuple_cap)
                    throw RefusalError("inner tuple cap exceeded at a tree node");
                inner[u].push_back(tup);
            }
            return it->second;
        };

        for (int w : rt.postorder) {
            const auto& node = rt.nodes[w];
            int n_out = idx_out[w].size();
            n_out_tuples[w] = checked_pow(uint64_t(n_out), q, opts.tuple_cap, "outer");

            if (opts.strict_tuples) {
                uint64_t total = checked_pow(uint64_t(idx_in[w].size()), q, opts.tuple_cap, "inner");
                std::vector<int> tup(q, 0);
                for (uint64_t c = 0; c < total; ++c) {
                    intern_inner(w, tup);
                    for (int j = 0; j < q; ++j) {
                        if (++tup[j] < idx_in[w].size()) break;
                        tup[j] = 0;
                    }
                }
            }

            if (node.left < 0) {  // leaf
                int l = node.leaf_vertex;
                VertexSet single(g.n());
                single.insert(l);
                int cls_full = idx_in[w].class_of(single);
                int cls_empty = idx_in[w].class_of(VertexSet(g.n()));
                std::vector<int> leaf_tuple_of_class(q);
                for (int i = 0; i < q; ++i) {
                    std::vector<int> tup(q, cls_empty);
                    tup[i] = cls_full;
                    leaf_tuple_of_class[i] = intern_inner(w, tup);
                }
                tab[w].assign(inner[w].size() * n_out_tuples[w], UNDEF);
                // truncated neighbor count of l in each outer scalar class rep
                std::vector<int> tcount(n_out);
                for (int c = 0; c < n_out; ++c)
                    tcount[c] =
                        std::min(g.neighbors(l).intersection_count(idx_out[w].representative(c)), d);
                std::vector<int> digits(q, 0);
                for (uint64_t oy = 0; oy < n_out_tuples[w]; ++oy) {
                    for (int i = 0; i < q; ++i) {
                        bool ok = true;
                        for (int j = 0; j < q && ok; ++j)
                            ok = m.at(i, j).member_truncated(tcount[digits[j]], d);
                        if (ok) {
                            auto& cell = tab[w][uint64_t(leaf_tuple_of_class[i]) * n_out_tuples[w] + oy];
                            cell = combine(cell, i == 0 ? 1 : 0, opts.extremal);
                        }
                    }
                    for (int j = 0; j < q; ++j) {
                        if (++digits[j] < n_out) break;
                        digits[j] = 0;
                    }
                }
                continue;
            }

            int a = node.left, b = node.right;
            int na = idx_in[a].size(), nb = idx_in[b].size();
            int na_out = idx_out[a].size(), nb_out = idx_out[b].size();

            std::vector<int> join_w(size_t(na) * nb), join_abar(size_t(nb) * n_out),
                join_bbar(size_t(na) * n_out);
            for (int ia = 0; ia < na; ++ia)
                for (int ib = 0; ib < nb; ++ib)
                    join_w[size_t(ia) * nb + ib] = idx_in[w].class_of(
                        idx_in[a].representative(ia) | idx_in[b].representative(ib));
            for (int ib = 0; ib < nb; ++ib)
                for (int ow = 0; ow < n_out; ++ow)
                    join_abar[size_t(ib) * n_out + ow] = idx_out[a].class_of(
                        idx_in[b].representative(ib) | idx_out[w].representative(ow));
            for (int ia = 0; ia < na; ++ia)
                for (int ow = 0; ow < n_out; ++ow)
                    join_bbar[size_t(ia) * n_out + ow] = idx_out[b].class_of(
                        idx_in[a].representative(ia) | idx_out[w].representative(ow));

            // decode the outer tuples of w once
            std::vector<int> out_digits(n_out_tuples[w] * q);
            {
                std::vector<int> cur(q, 0);
                for (uint64_t oy = 0; oy < n_out_tuples[w]; ++oy) {
                    for (int j = 0; j < q; ++j) out_digits[oy * q + j] = cur[j];
                    for (int j = 0; j < q; ++j) {
                        if (++cur[j] < n_out) break;
                        cur[j] = 0;
                    }
                }
            }

            // tuple-level outer ids of the children per (child tuple, outer tuple)
            size_t ta_count = inner[a].size(), tb_count = inner[b].size();
            std::vector<uint64_t> oa_of(tb_count * n_out_tuples[w]), ob_of(ta_count * n_out_tuples[w]);
            for (size_t tb = 0; tb < tb_count; ++tb)
                for (uint64_t oy = 0; oy < n_out_tuples[w]; ++oy) {
                    uint64_t code = 0;
                    for (int j = q - 1; j >= 0; --j)
                        code = code * uint64_t(na_out) +
                               uint64_t(join_abar[size_t(inner[b][tb][j]) * n_out +
                                                  out_digits[oy * q + j]]);
                    oa_of[tb * n_out_tuples[w] + oy] = code;
                }
            for (size_t ta = 0; ta < ta_count; ++ta)
                for (uint64_t oy = 0; oy < n_out_tuples[w]; ++oy) {
                    uint64_t code = 0;
                    for (int j = q - 1; j >= 0; --j)
                        code = code * uint64_t(nb_out) +
                               uint64_t(join_bbar[size_t(inner[a][ta][j]) * n_out +
                                                  out_digits[oy * q + j]]);
                    ob_of[ta * n_out_tuples[w] + oy] = code;
                }

            // register all reachable inner tuples of w first
            std::vector<int> wid(ta_count * tb_count);
            std::vector<int> tup(q);
            for (size_t ta = 0; ta < ta_count; ++ta)
                for (size_t tb = 0; tb < tb_count; ++tb) {
                    for (int j = 0; j < q; ++j)
                        tup[j] = join_w[size_t(inner[a][ta][j]) * nb + inner[b][tb][j]];
                    wid[ta * tb_count + tb] = intern_inner(w, tup);
                }

            tab[w].assign(inner[w].size() * n_out_tuples[w], UNDEF);
            for (size_t ta = 0; ta < ta_count; ++ta) {
                for (size_t tb = 0; tb < tb_count; ++tb) {
                    int target = wid[ta * tb_count + tb];
                    const uint64_t* oa_row = oa_of.data() + tb * n_out_tuples[w];
                    const uint64_t* ob_row = ob_of.data() + ta * n_out_tuples[w];
                    const long* ta_row = tab[a].data() + ta * n_out_tuples[a];
                    const long* tb_row = tab[b].data() + tb * n_out_tuples[b];
                    long* out_row = tab[w].data() + uint64_t(target) * n_out_tuples[w];
                    for (uint64_t oy = 0; oy < n_out_tuples[w]; ++oy) {
                        long va = ta_row[oa_row[oy]];
                        if (va == UNDEF) continue;
                        long vb = tb_row[ob_row[oy]];
                        if (vb == UNDEF) continue;
                        out_row[oy] = combine(out_row[oy], va + vb, opts.extremal);
                    }
                }
            }
            tab[a].clear();
            tab[b].clear();
        }

        long best = UNDEF;
        for (long v : tab[rt.root])
            if (v != UNDEF) best = combine(best, v, opts.extremal);
        if (best == UNDEF) return std::nullopt;
        return best;
    }
};

}  // namespace

bool solve_partition(const Graph& g, const DecompositionTree& t, const DegreeMatrix& m,
                     const PartitionOptions& opts) {
    PartitionSolver s{g, m, opts, m.q, m.d()};
    return s.run(t).has_value();
}

std::optional<long> solve_partition_extremal(const Graph& g, const DecompositionTree& t,
                                             const DegreeMatrix& m, Objective obj,
                                             PartitionOptions opts) {
    opts.extremal = obj;
    PartitionSolver s{g, m, opts, m.q, m.d()};
    return s.run(t);
}

}  // namespace boolw
