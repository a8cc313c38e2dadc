#include "ppv/quiver.hpp"

namespace ppv {

DoubleQuiver double_quiver(const Graph& g, const std::vector<bool>& orientation) {
    for (const auto& [i, j] : g.edges)
        if (i == j) throw LoopEdge("edge " + std::to_string(i) + "--" + std::to_string(j));
    DoubleQuiver dq;
    dq.graph = g;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        auto [i, j] = g.edges[k];
        if (k < orientation.size() && orientation[k]) std::swap(i, j);
        std::string base = "a" + std::to_string(k);
        dq.arrows.push_back({i, j, int(2 * k + 1), +1, base});
        dq.arrows.push_back({j, i, int(2 * k), -1, base + "*"});
    }
    return dq;
}

}  // namespace ppv
