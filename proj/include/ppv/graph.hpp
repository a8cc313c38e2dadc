#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "ppv/errors.hpp"

namespace ppv {

/// Finite loop-free unoriented graph. Parallel edges allowed.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Element of Q_+ : multiplicities of the simple roots, one per vertex.
using DimVector = std::vector<int>;

/// Integral weight stored by its pairings (lambda ; alpha_i).
using Weight = std::vector<int>;

inline int height(const DimVector& b) {
    return std::accumulate(b.begin(), b.end(), 0);
}

inline bool is_dominant(const Weight& w) {
    for (int c : w)
        if (c < 0) return false;
    return true;
}

struct CartanMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major n*n

    int at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

CartanMatrix build_cartan(const Graph& g);

/// beta^T A gamma.
int sym_form(const CartanMatrix& c, const DimVector& beta, const DimVector& gamma);

/// (lambda - beta ; alpha_i) = c_i - sum_j a_ij b_j.
int weight_pairing(const CartanMatrix& c, const Weight& lambda, const DimVector& beta, int i);

/// Builtin names: A1, A2, A3, A4, D4. Throws ConfigError on unknown names.
Graph builtin_graph(const std::string& name);

/// Text format: a line "vertices: n" followed by lines "edge: i j" (0-based).
Graph parse_graph(const std::string& text);

}  // namespace ppv
