#include "boolw/graph.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "boolw/errors.hpp"

namespace boolw {

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InputError("edge endpoint out of range: " + std::to_string(u + 1) + " " +
                         std::to_string(v + 1));
    if (u == v) throw InputError("self-loop rejected at vertex " + std::to_string(u + 1));
    if (adj_[u].contains(v)) return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
}

Graph load_graph(std::istream& in) {
    std::string line;
    bool have_header = false;
    int n = 0;
    long m_declared = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "p") {
            if (have_header) throw InputError("duplicate header at line " + std::to_string(lineno));
            if (!(ls >> n >> m_declared) || n < 0)
                throw InputError("malformed header at line " + std::to_string(lineno));
            have_header = true;
            g = Graph(n);
        } else if (tag == "e") {
            if (!have_header) throw InputError("edge before header at line " + std::to_string(lineno));
            int u, v;
            if (!(ls >> u >> v)) throw InputError("malformed edge at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("vertex index out of range at line " + std::to_string(lineno));
            g.add_edge(u - 1, v - 1);
        } else {
            throw InputError("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (!have_header) throw InputError("missing header line");
    return g;
}

void save_graph(const Graph& g, std::ostream& out) {
    out << "p " << g.n() << " " << g.m() << "\n";
    for (int u = 0; u < g.n(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) out << "e " << u + 1 << " " << v + 1 << "\n";
        });
}

VertexSet neighborhood_union(const Graph& g, const VertexSet& y) {
    VertexSet out(g.n());
    y.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

std::vector<std::vector<int>> external_module_partition(const Graph& g, const VertexSet& a) {
    std::map<VertexSet, std::vector<int>> groups;
    a.for_each([&](int v) { groups[g.neighbors(v) - a].push_back(v); });
    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [key, members] : groups) classes.push_back(std::move(members));
    // deterministic order: by smallest member
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return classes;
}

}  // namespace boolw
