#pragma once

#include <string>
#include <vector>

#include "ppv/graph.hpp"

namespace ppv {

/// The doubled quiver of a loop-free graph: one arrow pair per edge, the
/// mate involution reverses direction and sign. Orientation arrows carry
/// sign +1, mates sign -1.
struct DoubleQuiver {
    struct Arrow {
        int src = 0;
        int tgt = 0;
        int mate = 0;
        int sign = +1;
        std::string name;
    };

    Graph graph;
    std::vector<Arrow> arrows;  // edge k -> arrows 2k (oriented) and 2k+1 (mate)

    int num_vertices() const { return graph.n; }
    const Arrow& arrow(int a) const { return arrows[a]; }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
};

/// orientation[k] flips edge k (default: first listed endpoint is the source).
DoubleQuiver double_quiver(const Graph& g, const std::vector<bool>& orientation = {});

}  // namespace ppv
