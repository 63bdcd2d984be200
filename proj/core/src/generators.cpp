#include "boolw/generators.hpp"

#include <bit>
#include <random>
#include <string>

#include "boolw/errors.hpp"

namespace boolw {

GeneratedGraph gen_hsu(int k) {
    if (k < 1) throw InputError("hsu: k must be >= 1");
    Graph g(2 * (k + 1));
    for (int i = 2; i <= k + 1; ++i)
        for (int j = 1; j < i; ++j) g.add_edge(i - 1, k + 1 + j - 1);
    VertexSet a(g.n());
    for (int i = 0; i <= k; ++i) a.insert(i);
    return {std::move(g), a};
}

GeneratedGraph gen_rk(int k) {
    if (k < 1 || k > 4) throw InputError("rk: k must be in 1..4");
    int side = 1 << k;
    Graph g(2 * side);
    for (int s = 0; s < side; ++s)
        for (int t = 0; t < side; ++t)
            if (std::popcount(unsigned(s & t)) % 2 == 1) g.add_edge(s, side + t);
    VertexSet a(g.n());
    for (int s = 0; s < side; ++s) a.insert(s);
    return {std::move(g), a};
}

namespace {
inline int cm_index(int i, int j, int p) { return (j - 1) * p + (i - 1); }
}  // namespace

Graph gen_hsu_grid(int p, int q) {
    if (p < 2 || q < 2) throw InputError("hsu-grid: p and q must be >= 2");
    Graph g(p * q);
    for (int j = 1; j <= q; ++j)
        for (int i = 1; i < p; ++i) g.add_edge(cm_index(i, j, p), cm_index(i + 1, j, p));
    for (int j = 1; j < q; ++j)
        for (int i = 1; i <= p; ++i)
            for (int i2 = i; i2 <= p; ++i2) g.add_edge(cm_index(i, j, p), cm_index(i2, j + 1, p));
    return g;
}

Graph gen_grid(int p, int q) {
    if (p < 1 || q < 1) throw InputError("grid: dimensions must be >= 1");
    Graph g(p * q);
    for (int j = 1; j <= q; ++j)
        for (int i = 1; i <= p; ++i) {
            if (i < p) g.add_edge(cm_index(i, j, p), cm_index(i + 1, j, p));
            if (j < q) g.add_edge(cm_index(i, j, p), cm_index(i, j + 1, p));
        }
    return g;
}

Graph gen_path(int n) {
    if (n < 1) throw InputError("path: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw InputError("cycle: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_complete(int n) {
    if (n < 1) throw InputError("complete: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

GeneratedGraph gen_complete_bipartite(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw InputError("complete-bipartite: sides must be >= 1");
    Graph g(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
    VertexSet a(g.n());
    for (int u = 0; u < n1; ++u) a.insert(u);
    return {std::move(g), a};
}

Graph gen_random(int n, double edge_prob, uint64_t seed) {
    if (n < 1) throw InputError("random: n must be >= 1");
    if (edge_prob < 0.0 || edge_prob > 1.0) throw InputError("random: edge probability not in [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // 53-bit uniform in [0,1); avoids distribution objects, whose
            // output is not pinned by the standard
            double x = double(rng() >> 11) * 0x1.0p-53;
            if (x < edge_prob) g.add_edge(u, v);
        }
    return g;
}

}  // namespace boolw
