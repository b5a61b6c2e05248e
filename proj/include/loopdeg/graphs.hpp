#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "loopdeg/sequences.hpp"

namespace loopdeg {

using Vertex = std::size_t;

/// Unordered pair {u, v} with u != v, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    static Edge of(Vertex a, Vertex b);
    auto operator<=>(const Edge&) const = default;
};

/// Simple graph with at most one loop per vertex, on vertices 0..n-1.
class GraphWithLoops {
public:
    GraphWithLoops() = default;
    explicit GraphWithLoops(std::size_t n) : n_(n) {}
    /// Throws InvalidGraph on out-of-range ids, self-pairs in `edges`, or
    /// duplicates (in either orientation).
    GraphWithLoops(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                   const std::vector<Vertex>& loops);

    std::size_t order() const noexcept { return n_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }
    const std::set<Vertex>& loops() const noexcept { return loops_; }

    bool has_edge(Vertex a, Vertex b) const;
    bool has_loop(Vertex v) const { return loops_.contains(v); }

    // Mutators throw InvalidGraph when the result would break the
    // no-multiple-edges / one-loop-per-vertex rules.
    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    void add_loop(Vertex v);
    void remove_loop(Vertex v);

    /// Per-vertex degree, unsorted, indexed by vertex id.
    std::vector<Degree> vertex_degrees(Convention convention) const;

    friend bool operator==(const GraphWithLoops&, const GraphWithLoops&) = default;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::set<Edge> edges_;
    std::set<Vertex> loops_;
};

/// Simple bipartite graph; edges are (left, right) index pairs.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t n_left, std::size_t n_right)
        : n_left_(n_left), n_right_(n_right) {}
    BipartiteGraph(std::size_t n_left, std::size_t n_right,
                   const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t left_size() const noexcept { return n_left_; }
    std::size_t right_size() const noexcept { return n_right_; }
    const std::set<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }

    bool has_edge(Vertex left, Vertex right) const { return edges_.contains({left, right}); }
    void add_edge(Vertex left, Vertex right);

    std::vector<Degree> left_degrees() const;
    std::vector<Degree> right_degrees() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::size_t n_left_ = 0;
    std::size_t n_right_ = 0;
    std::set<std::pair<Vertex, Vertex>> edges_;
};

/// Loopless multigraph whose parallel classes have multiplicity 1 or 2.
class LoopMultigraph {
public:
    LoopMultigraph() = default;
    explicit LoopMultigraph(std::size_t n) : n_(n) {}

    std::size_t order() const noexcept { return n_; }
    const std::map<Edge, int>& multiplicities() const noexcept { return mult_; }
    int multiplicity(Vertex a, Vertex b) const;

    /// Adds one parallel copy of {a, b}. Throws InvalidGraph for a == b or
    /// when the multiplicity would exceed 2.
    void add_edge(Vertex a, Vertex b);

    std::size_t edge_count() const;  // counting multiplicity
    std::vector<Degree> vertex_degrees() const;

    friend bool operator==(const LoopMultigraph&, const LoopMultigraph&) = default;

private:
    std::size_t n_ = 0;
    std::map<Edge, int> mult_;
};

/// Sorted nonincreasing degree sequence, loops counted twice.
DegreeSequence degrees_double(const GraphWithLoops& g);
/// Sorted nonincreasing degree sequence, loops counted once.
DegreeSequence degrees_reduced(const GraphWithLoops& g);
DegreeSequence degrees(const GraphWithLoops& g, Convention convention);

std::pair<DegreeSequence, DegreeSequence> bipartite_part_degrees(const BipartiteGraph& b);

/// True iff the sorted degrees of g under `convention` equal d.
bool verify_realization(const GraphWithLoops& g, const DegreeSequence& d, Convention convention);

GraphWithLoops complete_graph_with_loops(std::size_t n);

}  // namespace loopdeg
