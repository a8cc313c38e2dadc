#include "ppv/graph.hpp"

#include <map>
#include <sstream>

namespace ppv {

CartanMatrix build_cartan(const Graph& g) {
    for (auto [i, j] : g.edges) {
        if (i < 0 || j < 0 || i >= g.n || j >= g.n)
            throw ConfigError("edge endpoint out of range");
        if (i == j) throw LoopEdge("graph has a self-edge at vertex " + std::to_string(i));
    }
    CartanMatrix c;
    c.n = g.n;
    c.entries.assign(static_cast<size_t>(g.n) * g.n, 0);
    for (int i = 0; i < g.n; ++i) c.entries[static_cast<size_t>(i) * g.n + i] = 2;
    for (auto [i, j] : g.edges) {
        c.entries[static_cast<size_t>(i) * g.n + j] -= 1;
        c.entries[static_cast<size_t>(j) * g.n + i] -= 1;
    }
    return c;
}

int sym_form(const CartanMatrix& c, const DimVector& beta, const DimVector& gamma) {
    int s = 0;
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) s += beta[i] * c.at(i, j) * gamma[j];
    return s;
}

int weight_pairing(const CartanMatrix& c, const Weight& lambda, const DimVector& beta, int i) {
    int s = lambda[i];
    for (int j = 0; j < c.n; ++j) s -= c.at(i, j) * beta[j];
    return s;
}

Graph builtin_graph(const std::string& name) {
    Graph g;
    if (name == "A1") {
        g.n = 1;
    } else if (name == "A2" || name == "A3" || name == "A4") {
        g.n = name[1] - '0';
        for (int i = 0; i + 1 < g.n; ++i) g.edges.push_back({i, i + 1});
    } else if (name == "D4") {
        g.n = 4;
        g.edges = {{0, 3}, {1, 3}, {2, 3}};
    } else {
        throw ConfigError("unknown builtin graph '" + name + "'");
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    Graph g;
    bool have_n = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key.empty() || key[0] == '#') continue;
        if (key == "vertices:") {
            if (!(ls >> g.n) || g.n < 0) throw ConfigError("bad vertices line: " + line);
            have_n = true;
        } else if (key == "edge:") {
            int i, j;
            if (!(ls >> i >> j)) throw ConfigError("bad edge line: " + line);
            g.edges.push_back({i, j});
        } else {
            throw ConfigError("unrecognized graph line: " + line);
        }
    }
    if (!have_n) throw ConfigError("graph file missing 'vertices:' line");
    return g;
}

}  // namespace ppv
