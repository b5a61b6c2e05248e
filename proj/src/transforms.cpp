#include "loopdeg/transforms.hpp"

#include <string>

#include "loopdeg/error.hpp"
#include "loopdeg/realize.hpp"

namespace loopdeg {

BipartiteGraph tensor_double_cover(const GraphWithLoops& g) {
    const std::size_t n = g.order();
    BipartiteGraph cover(n, n);
    for (const Edge& e : g.edges()) {
        cover.add_edge(e.u, e.v);
        cover.add_edge(e.v, e.u);
    }
    for (Vertex a : g.loops()) cover.add_edge(a, a);
    return cover;
}

LoopMultigraph topological_double_cover(const GraphWithLoops& g) {
    const std::size_t n = g.order();
    LoopMultigraph cover(2 * n);
    for (const Edge& e : g.edges()) {
        cover.add_edge(e.u, e.v + n);
        cover.add_edge(e.u + n, e.v);
    }
    for (Vertex a : g.loops()) {
        cover.add_edge(a, a + n);
        cover.add_edge(a, a + n);
    }
    return cover;
}

GraphWithLoops complement_graph(const GraphWithLoops& g) {
    const std::size_t n = g.order();
    GraphWithLoops out(n);
    for (Vertex a = 0; a < n; ++a) {
        if (!g.has_loop(a)) out.add_loop(a);
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.has_edge(a, b)) out.add_edge(a, b);
    }
    return out;
}

BipartiteGraph symmetric_bipartite_realization(const DegreeSequence& d) {
    const CheckReport report = check_gale_ryser_symmetric(d);
    if (!report.passed) {
        throw Error(ErrorCode::InfeasibleSequence,
                    "(d, d) is not bipartite realizable: dominance fails at k = " +
                        std::to_string(*report.first_violation));
    }
    return tensor_double_cover(realize_loops_reduced(d).graph);
}

bool involution_check(const BipartiteGraph& b) {
    if (b.left_size() != b.right_size()) {
        throw Error(ErrorCode::PartSizeMismatch,
                    "parts have sizes " + std::to_string(b.left_size()) + " and " +
                        std::to_string(b.right_size()));
    }
    for (auto [l, r] : b.edges())
        if (!b.has_edge(r, l)) return false;
    return true;
}

}  // namespace loopdeg
