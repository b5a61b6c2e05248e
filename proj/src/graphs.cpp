#include "loopdeg/graphs.hpp"

#include <string>

#include "loopdeg/error.hpp"

namespace loopdeg {

namespace {

std::string pair_str(Vertex a, Vertex b) {
    return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

Edge Edge::of(Vertex a, Vertex b) {
    if (a == b) throw Error(ErrorCode::InvalidGraph, "edge endpoints coincide: " + pair_str(a, b));
    return a < b ? Edge{a, b} : Edge{b, a};
}

GraphWithLoops::GraphWithLoops(std::size_t n,
                               const std::vector<std::pair<Vertex, Vertex>>& edges,
                               const std::vector<Vertex>& loops)
    : n_(n) {
    for (auto [a, b] : edges) add_edge(a, b);
    for (Vertex v : loops) add_loop(v);
}

void GraphWithLoops::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw Error(ErrorCode::InvalidGraph,
                    "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
    }
}

bool GraphWithLoops::has_edge(Vertex a, Vertex b) const {
    return a != b && edges_.contains(Edge::of(a, b));
}

void GraphWithLoops::add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (!edges_.insert(Edge::of(a, b)).second)
        throw Error(ErrorCode::InvalidGraph, "duplicate edge " + pair_str(a, b));
}

void GraphWithLoops::remove_edge(Vertex a, Vertex b) {
    if (edges_.erase(Edge::of(a, b)) == 0)
        throw Error(ErrorCode::InvalidGraph, "no edge " + pair_str(a, b) + " to remove");
}

void GraphWithLoops::add_loop(Vertex v) {
    check_vertex(v);
    if (!loops_.insert(v).second)
        throw Error(ErrorCode::InvalidGraph, "second loop at vertex " + std::to_string(v));
}

void GraphWithLoops::remove_loop(Vertex v) {
    if (loops_.erase(v) == 0)
        throw Error(ErrorCode::InvalidGraph, "no loop at vertex " + std::to_string(v));
}

std::vector<Degree> GraphWithLoops::vertex_degrees(Convention convention) const {
    std::vector<Degree> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    const Degree per_loop = convention == Convention::Double ? 2 : 1;
    for (Vertex v : loops_) deg[v] += per_loop;
    return deg;
}

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right,
                               const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_left_(n_left), n_right_(n_right) {
    for (auto [l, r] : edges) add_edge(l, r);
}

void BipartiteGraph::add_edge(Vertex left, Vertex right) {
    if (left >= n_left_ || right >= n_right_) {
        throw Error(ErrorCode::InvalidGraph,
                    "bipartite edge (" + std::to_string(left) + "," + std::to_string(right) +
                        ") out of range");
    }
    if (!edges_.insert({left, right}).second) {
        throw Error(ErrorCode::InvalidGraph, "duplicate bipartite edge (" + std::to_string(left) +
                                                 "," + std::to_string(right) + ")");
    }
}

std::vector<Degree> BipartiteGraph::left_degrees() const {
    std::vector<Degree> deg(n_left_, 0);
    for (auto [l, r] : edges_) ++deg[l];
    return deg;
}

std::vector<Degree> BipartiteGraph::right_degrees() const {
    std::vector<Degree> deg(n_right_, 0);
    for (auto [l, r] : edges_) ++deg[r];
    return deg;
}

int LoopMultigraph::multiplicity(Vertex a, Vertex b) const {
    if (a == b) return 0;
    auto it = mult_.find(Edge::of(a, b));
    return it == mult_.end() ? 0 : it->second;
}

void LoopMultigraph::add_edge(Vertex a, Vertex b) {
    if (a >= n_ || b >= n_)
        throw Error(ErrorCode::InvalidGraph, "multigraph edge " + pair_str(a, b) + " out of range");
    int& m = mult_[Edge::of(a, b)];
    if (m == 2) throw Error(ErrorCode::InvalidGraph, "multiplicity above 2 for " + pair_str(a, b));
    ++m;
}

std::size_t LoopMultigraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& [e, m] : mult_) total += static_cast<std::size_t>(m);
    return total;
}

std::vector<Degree> LoopMultigraph::vertex_degrees() const {
    std::vector<Degree> deg(n_, 0);
    for (const auto& [e, m] : mult_) {
        deg[e.u] += m;
        deg[e.v] += m;
    }
    return deg;
}

DegreeSequence degrees(const GraphWithLoops& g, Convention convention) {
    return make_sequence(g.vertex_degrees(convention), true);
}

DegreeSequence degrees_double(const GraphWithLoops& g) {
    return degrees(g, Convention::Double);
}

DegreeSequence degrees_reduced(const GraphWithLoops& g) {
    return degrees(g, Convention::Reduced);
}

std::pair<DegreeSequence, DegreeSequence> bipartite_part_degrees(const BipartiteGraph& b) {
    return {make_sequence(b.left_degrees(), true), make_sequence(b.right_degrees(), true)};
}

bool verify_realization(const GraphWithLoops& g, const DegreeSequence& d, Convention convention) {
    return g.order() == d.size() && degrees(g, convention) == d;
}

GraphWithLoops complete_graph_with_loops(std::size_t n) {
    GraphWithLoops g(n);
    for (Vertex a = 0; a < n; ++a) {
        g.add_loop(a);
        for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
    }
    return g;
}

}  // namespace loopdeg
