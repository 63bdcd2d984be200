#include "boolw/decomposition.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "boolw/cut.hpp"
#include "boolw/errors.hpp"

namespace boolw {

uint64_t eval_cut(const Graph& g, const VertexSet& a, CutFunction f) {
    return f == CutFunction::Boolean ? union_closure_count(g, a) : uint64_t(cut_rank(g, a));
}

int DecompositionTree::num_leaves() const {
    int c = 0;
    for (int v : leaf_vertex)
        if (v >= 0) ++c;
    return c;
}

void DecompositionTree::validate(const Graph& g) const {
    int n = g.n();
    if (num_nodes() == 0) throw InputError("tree: empty");
    if (int(edges.size()) != num_nodes() - 1) throw InputError("tree: not a tree (edge count)");
    // connectivity
    std::vector<char> seen(num_nodes(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != num_nodes()) throw InputError("tree: not connected");
    std::vector<char> used(n, 0);
    int leaves = 0;
    for (int u = 0; u < num_nodes(); ++u) {
        if (leaf_vertex[u] >= 0) {
            ++leaves;
            if (leaf_vertex[u] >= n) throw InputError("tree: leaf label out of range");
            if (used[leaf_vertex[u]]) throw InputError("tree: duplicate leaf label");
            used[leaf_vertex[u]] = 1;
            size_t maxdeg = (n == 1) ? 0 : 1;
            if (adj[u].size() != maxdeg) throw InputError("tree: leaf node with internal degree");
        } else {
            if (adj[u].size() != 3) throw InputError("tree: internal node degree != 3");
        }
    }
    if (leaves != n) throw InputError("tree: leaf count != |V(G)|");
}

VertexSet DecompositionTree::side_leaves(int from, int avoid, int n_graph) const {
    VertexSet out(n_graph);
    std::vector<int> stack{from};
    std::vector<char> seen(num_nodes(), 0);
    seen[from] = 1;
    seen[avoid] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (leaf_vertex[u] >= 0) out.insert(leaf_vertex[u]);
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return out;
}

WidthResult f_width(const Graph& g, const DecompositionTree& t, CutFunction f) {
    t.validate(g);
    WidthResult r;
    r.value = (f == CutFunction::Boolean) ? 1 : 0;
    for (int e = 0; e < int(t.edges.size()); ++e) {
        auto [u, v] = t.edges[e];
        uint64_t val = eval_cut(g, t.side_leaves(u, v, g.n()), f);
        if (r.argmax_edge < 0 || val > r.value) {
            r.value = val;
            r.argmax_edge = e;
        }
    }
    return r;
}

namespace {

DecompositionTree tiny_tree(const Graph& g) {  // n <= 2
    DecompositionTree t;
    if (g.n() == 1) {
        t.add_node(0);
    } else {
        t.add_node(0);
        t.add_node(1);
        t.add_edge(0, 1);
    }
    return t;
}

// Enumerates all leaf-labeled subcubic trees by inserting leaves in vertex
// order, subdividing each existing edge in turn.
struct TreeEnumerator {
    const Graph& g;
    CutFunction f;
    bool have_best = false;
    DecompositionTree best;
    uint64_t best_width = 0;

    std::vector<std::pair<int, int>> edges;
    int next_node;

    explicit TreeEnumerator(const Graph& gr, CutFunction fn) : g(gr), f(fn) {}

    DecompositionTree materialize() const {
        DecompositionTree t;
        int n = g.n();
        for (int i = 0; i < n; ++i) t.add_node(i);
        int max_node = n - 1;
        for (auto [u, v] : edges) max_node = std::max({max_node, u, v});
        while (t.num_nodes() <= max_node) t.add_node();
        for (auto [u, v] : edges) t.add_edge(u, v);
        return t;
    }

    void consider() {
        DecompositionTree t = materialize();
        uint64_t w = f_width(g, t, f).value;
        if (!have_best || w < best_width) {
            have_best = true;
            best_width = w;
            best = std::move(t);
        }
    }

    void insert(int k) {
        int n = g.n();
        if (k == n) {
            consider();
            return;
        }
        size_t e_count = edges.size();
        for (size_t e = 0; e < e_count; ++e) {
            auto [u, v] = edges[e];
            int c = next_node++;
            edges[e] = {u, c};
            edges.push_back({c, v});
            edges.push_back({c, k});
            insert(k + 1);
            edges.pop_back();
            edges.pop_back();
            edges[e] = {u, v};
            --next_node;
        }
    }

    void run() {
        int n = g.n();
        int center = n;
        next_node = n + 1;
        edges = {{0, center}, {1, center}, {2, center}};
        insert(3);
    }
};

}  // namespace

std::pair<DecompositionTree, uint64_t> exact_min_width(const Graph& g, CutFunction f) {
    if (g.n() > 10)
        throw RefusalError("exact_min_width: n = " + std::to_string(g.n()) + " exceeds guard 10");
    if (g.n() <= 2) {
        DecompositionTree t = tiny_tree(g);
        return {t, f_width(g, t, f).value};
    }
    TreeEnumerator en(g, f);
    en.run();
    return {std::move(en.best), en.best_width};
}

namespace {

uint64_t split_key_hi(const Graph& g, const VertexSet& s1, const VertexSet& s2, CutFunction f,
                      uint64_t& lo) {
    uint64_t a = eval_cut(g, s1, f);
    uint64_t b = eval_cut(g, s2, f);
    lo = a + b;
    return std::max(a, b);
}

struct GreedyBuilder {
    const Graph& g;
    CutFunction f;
    int restarts, iter_cap;
    DecompositionTree tree;

    // Balanced bipartition of `verts` by steepest-descent swaps.
    std::pair<std::vector<int>, std::vector<int>> split(std::vector<int> verts, uint64_t seed) {
        int n_all = g.n();
        size_t half = verts.size() / 2;
        std::vector<int> best1, best2;
        uint64_t best_hi = 0, best_lo = 0;
        bool have = false;
        for (int r = 0; r < restarts; ++r) {
            std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + uint64_t(r));
            std::vector<int> order = verts;
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng() % i]);
            std::vector<int> s1(order.begin(), order.begin() + half);
            std::vector<int> s2(order.begin() + half, order.end());
            auto to_set = [&](const std::vector<int>& vs) {
                VertexSet s(n_all);
                for (int v : vs) s.insert(v);
                return s;
            };
            uint64_t lo, hi = split_key_hi(g, to_set(s1), to_set(s2), f, lo);
            for (int it = 0; it < iter_cap; ++it) {
                size_t bi = 0, bj = 0;
                uint64_t cand_hi = hi, cand_lo = lo;
                bool improved = false;
                for (size_t i = 0; i < s1.size(); ++i)
                    for (size_t j = 0; j < s2.size(); ++j) {
                        std::swap(s1[i], s2[j]);
                        uint64_t l, h = split_key_hi(g, to_set(s1), to_set(s2), f, l);
                        std::swap(s1[i], s2[j]);
                        if (h < cand_hi || (h == cand_hi && l < cand_lo)) {
                            cand_hi = h;
                            cand_lo = l;
                            bi = i;
                            bj = j;
                            improved = true;
                        }
                    }
                if (!improved) break;
                std::swap(s1[bi], s2[bj]);
                hi = cand_hi;
                lo = cand_lo;
            }
            if (!have || hi < best_hi || (hi == best_hi && lo < best_lo)) {
                have = true;
                best_hi = hi;
                best_lo = lo;
                best1 = s1;
                best2 = s2;
            }
        }
        std::sort(best1.begin(), best1.end());
        std::sort(best2.begin(), best2.end());
        return {best1, best2};
    }

    int build(const std::vector<int>& verts, uint64_t seed) {
        if (verts.size() == 1) return tree.add_node(verts[0]);
        auto [s1, s2] = split(verts, seed);
        int a = build(s1, seed * 6364136223846793005ull + 1);
        int b = build(s2, seed * 6364136223846793005ull + 2);
        int w = tree.add_node();
        tree.add_edge(w, a);
        tree.add_edge(w, b);
        return w;
    }
};

}  // namespace

DecompositionTree greedy_decompose(const Graph& g, CutFunction f, uint64_t seed, int restarts,
                                   int iter_cap) {
    if (g.n() <= 2) return tiny_tree(g);
    GreedyBuilder b{g, f, restarts, iter_cap, {}};
    std::vector<int> all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    auto [s1, s2] = b.split(all, seed);
    int x = b.build(s1, seed * 6364136223846793005ull + 3);
    int y = b.build(s2, seed * 6364136223846793005ull + 4);
    b.tree.add_edge(x, y);  // top split joins directly, keeping the tree subcubic
    return std::move(b.tree);
}

DecompositionTree comb_of_groups(const Graph& g, const std::vector<std::vector<int>>& groups) {
    if (groups.size() < 2) throw InputError("comb_of_groups: need at least 2 groups");
    DecompositionTree t;
    std::vector<int> attach;
    for (const auto& grp : groups) {
        if (grp.empty()) throw InputError("comb_of_groups: empty group");
        if (grp.size() == 1) {
            attach.push_back(t.add_node(grp[0]));
            continue;
        }
        // comb for the group: spine t_1..t_{s-1}, leaf i at t_i, last leaf at t_{s-1}
        int prev = -1, first = -1;
        for (size_t i = 0; i + 1 < grp.size(); ++i) {
            int spine = t.add_node();
            int leaf = t.add_node(grp[i]);
            t.add_edge(spine, leaf);
            if (prev >= 0) t.add_edge(prev, spine);
            if (first < 0) first = spine;
            prev = spine;
        }
        t.add_edge(prev, t.add_node(grp.back()));
        attach.push_back(first);
    }
    size_t q = groups.size();
    if (q == 2) {
        t.add_edge(attach[0], attach[1]);
        return t;
    }
    // main spine of q-2 nodes: ends take two teeth each
    std::vector<int> spine;
    for (size_t k = 0; k + 2 < q; ++k) {
        int s = t.add_node();
        if (!spine.empty()) t.add_edge(spine.back(), s);
        spine.push_back(s);
    }
    t.add_edge(spine.front(), attach[0]);
    for (size_t j = 1; j + 1 < q; ++j) t.add_edge(spine[j - 1], attach[j]);
    t.add_edge(spine.back(), attach[q - 1]);
    return t;
}

DecompositionTree structured_grid_tree(int p, int q, Orientation o) {
    if (p < 3 || q < 3) throw InputError("structured tree: p and q must be >= 3");
    Graph g(p * q);  // only the vertex universe matters for tree construction
    std::vector<std::vector<int>> groups;
    if (o == Orientation::Vertical) {
        for (int j = 0; j < q; ++j) {
            std::vector<int> col;
            for (int i = 0; i < p; ++i) col.push_back(j * p + i);
            groups.push_back(std::move(col));
        }
    } else {
        for (int i = 0; i < p; ++i) {
            std::vector<int> row;
            for (int j = 0; j < q; ++j) row.push_back(j * p + i);
            groups.push_back(std::move(row));
        }
    }
    return comb_of_groups(g, groups);
}

DecompositionTree random_tree(const Graph& g, uint64_t seed) {
    if (g.n() <= 2) return tiny_tree(g);
    std::mt19937_64 rng(seed);
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    DecompositionTree t;
    int l0 = t.add_node(order[0]), l1 = t.add_node(order[1]), l2 = t.add_node(order[2]);
    int c = t.add_node();
    t.add_edge(c, l0);
    t.add_edge(c, l1);
    t.add_edge(c, l2);
    for (size_t k = 3; k < order.size(); ++k) {
        size_t e = rng() % t.edges.size();
        auto [u, v] = t.edges[e];
        int mid = t.add_node();
        int leaf = t.add_node(order[k]);
        // subdivide edge e
        auto& au = t.adj[u];
        auto& av = t.adj[v];
        au.erase(std::find(au.begin(), au.end(), v));
        av.erase(std::find(av.begin(), av.end(), u));
        t.edges[e] = {u, mid};
        t.adj[u].push_back(mid);
        t.adj[mid].push_back(u);
        t.add_edge(mid, v);
        t.add_edge(mid, leaf);
    }
    return t;
}

RootedTree root_at(const Graph& g, const DecompositionTree& t, int edge_index) {
    t.validate(g);
    RootedTree rt;
    int n_nodes = t.num_nodes();
    if (g.n() == 1) {
        RootedTree::Node node;
        node.leaf_vertex = t.leaf_vertex[0];
        node.leaves = VertexSet(g.n());
        node.leaves.insert(node.leaf_vertex);
        rt.nodes.push_back(node);
        rt.root = 0;
        rt.postorder = {0};
        return rt;
    }
    if (edge_index < 0 || edge_index >= int(t.edges.size()))
        throw InputError("root_at: invalid edge index");
    rt.nodes.resize(n_nodes + 1);
    for (int u = 0; u < n_nodes; ++u) rt.nodes[u].leaf_vertex = t.leaf_vertex[u];
    int root = n_nodes;
    rt.root = root;
    auto [eu, ev] = t.edges[edge_index];
    // orient away from the new root
    std::vector<std::pair<int, int>> stack{{eu, ev}, {ev, eu}};
    rt.nodes[root].left = eu;
    rt.nodes[root].right = ev;
    rt.nodes[eu].parent = root;
    rt.nodes[ev].parent = root;
    while (!stack.empty()) {
        auto [u, from] = stack.back();
        stack.pop_back();
        int nchild = 0;
        for (int v : t.adj[u]) {
            if (v == from) continue;
            (nchild++ == 0 ? rt.nodes[u].left : rt.nodes[u].right) = v;
            rt.nodes[u].parent = (rt.nodes[u].parent >= 0) ? rt.nodes[u].parent : -1;
            rt.nodes[v].parent = u;
            stack.push_back({v, u});
        }
    }
    // postorder + leaf sets
    rt.postorder.reserve(rt.nodes.size());
    std::vector<std::pair<int, bool>> st{{root, false}};
    while (!st.empty()) {
        auto [u, done] = st.back();
        st.pop_back();
        if (done) {
            rt.postorder.push_back(u);
            continue;
        }
        st.push_back({u, true});
        if (rt.nodes[u].left >= 0) st.push_back({rt.nodes[u].left, false});
        if (rt.nodes[u].right >= 0) st.push_back({rt.nodes[u].right, false});
    }
    for (int u : rt.postorder) {
        auto& node = rt.nodes[u];
        node.leaves = VertexSet(g.n());
        if (node.leaf_vertex >= 0) node.leaves.insert(node.leaf_vertex);
        if (node.left >= 0) node.leaves |= rt.nodes[node.left].leaves;
        if (node.right >= 0) node.leaves |= rt.nodes[node.right].leaves;
    }
    return rt;
}

DecompositionTree load_tree(std::istream& in, const Graph& g) {
    std::map<int, int> id_map;  // file id -> dense id, insertion by first mention
    std::vector<int> leaf_of;   // dense id -> graph vertex
    std::vector<std::pair<int, int>> file_edges;
    auto intern = [&](int file_id) {
        auto [it, fresh] = id_map.emplace(file_id, int(id_map.size()));
        if (fresh) leaf_of.push_back(-1);
        return it->second;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "node") {
            int id;
            if (!(ls >> id)) throw InputError("tree: malformed node line " + std::to_string(lineno));
            intern(id);
        } else if (tag == "leaf") {
            int id, v;
            if (!(ls >> id >> v) || v < 1 || v > g.n())
                throw InputError("tree: malformed leaf line " + std::to_string(lineno));
            leaf_of[intern(id)] = v - 1;
        } else if (tag == "edge") {
            int a, b;
            if (!(ls >> a >> b)) throw InputError("tree: malformed edge line " + std::to_string(lineno));
            file_edges.emplace_back(intern(a), intern(b));
        } else {
            throw InputError("tree: unknown tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    DecompositionTree t;
    for (int lv : leaf_of) t.add_node(lv);
    for (auto [a, b] : file_edges) t.add_edge(a, b);
    t.validate(g);
    return t;
}

void save_tree(const DecompositionTree& t, std::ostream& out) {
    for (int u = 0; u < t.num_nodes(); ++u)
        if (t.leaf_vertex[u] >= 0)
            out << "leaf " << u << " " << t.leaf_vertex[u] + 1 << "\n";
        else
            out << "node " << u << "\n";
    for (auto [u, v] : t.edges) out << "edge " << u << " " << v << "\n";
}

}  // namespace boolw
