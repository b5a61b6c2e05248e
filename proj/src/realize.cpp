#include "loopdeg/realize.hpp"

#include <algorithm>
#include <string>

#include "loopdeg/error.hpp"

namespace loopdeg {

std::string_view to_string(PatchKind kind) {
    switch (kind) {
        case PatchKind::AddEdge: return "AddEdge";
        case PatchKind::SwapEdgeForTwoLoops: return "SwapEdgeForTwoLoops";
        case PatchKind::AddTwoLoops: return "AddTwoLoops";
        case PatchKind::ThreeVertexReroute: return "ThreeVertexReroute";
        case PatchKind::LoopAtTail: return "LoopAtTail";
        case PatchKind::LoopSplitToTwoEdges: return "LoopSplitToTwoEdges";
        case PatchKind::HeadLoopShift: return "HeadLoopShift";
        case PatchKind::LoopTransferViaEdge: return "LoopTransferViaEdge";
        case PatchKind::TailLoopReroute: return "TailLoopReroute";
        case PatchKind::SingleVertexLoop: return "SingleVertexLoop";
    }
    return "Unknown";
}

namespace {

Vertex need(const std::optional<Vertex>& v, PatchKind kind) {
    if (!v) {
        throw Error(ErrorCode::InvalidGraph,
                    std::string("patch ") + std::string(to_string(kind)) + " lacks a witness");
    }
    return *v;
}

}  // namespace

void apply_patch(GraphWithLoops& g, const PatchCase& p) {
    const Vertex h = p.head;
    const Vertex t = p.tail;
    switch (p.kind) {
        case PatchKind::AddEdge:
            g.add_edge(h, t);
            break;
        case PatchKind::SwapEdgeForTwoLoops:
            g.remove_edge(h, t);
            g.add_loop(h);
            g.add_loop(t);
            break;
        case PatchKind::AddTwoLoops:
            g.add_loop(h);
            g.add_loop(t);
            break;
        case PatchKind::ThreeVertexReroute: {
            const Vertex i = need(p.vi, p.kind), j = need(p.vj, p.kind);
            g.remove_edge(i, j);
            g.add_edge(h, i);
            g.add_edge(j, t);
            break;
        }
        case PatchKind::LoopAtTail: {
            const Vertex i = need(p.vi, p.kind);
            g.remove_edge(i, t);
            g.add_edge(h, i);
            g.add_loop(t);
            break;
        }
        case PatchKind::LoopSplitToTwoEdges: {
            const Vertex i = need(p.vi, p.kind);
            g.remove_loop(i);
            g.add_edge(h, i);
            g.add_edge(i, t);
            break;
        }
        case PatchKind::HeadLoopShift: {
            const Vertex i = need(p.vi, p.kind);
            g.remove_edge(h, i);
            g.add_edge(i, t);
            g.add_loop(h);
            break;
        }
        case PatchKind::LoopTransferViaEdge: {
            const Vertex i = need(p.vi, p.kind);
            g.remove_loop(i);
            g.add_edge(h, i);
            g.add_loop(t);
            break;
        }
        case PatchKind::TailLoopReroute: {
            const Vertex i = need(p.vi, p.kind), j = need(p.vj, p.kind);
            g.remove_loop(t);
            g.remove_edge(i, j);
            g.add_edge(j, t);
            g.add_edge(i, t);
            g.add_loop(h);
            break;
        }
        case PatchKind::SingleVertexLoop:
            g.add_loop(h);
            break;
    }
}

GraphWithLoops replay(const RealizationTrace& trace) {
    GraphWithLoops g(trace.order);
    for (const PatchCase& p : trace.rebuild_steps) apply_patch(g, p);
    return g;
}

namespace {

enum class Mode { Simple, Double, Reduced };

struct Target {
    Vertex id;
    Degree degree;
};

struct Level {
    Vertex head;
    Vertex tail;
    std::vector<Vertex> members;  // positive-target vertices, ascending id
};

[[noreturn]] void patch_failure(const std::string& what) {
    throw Error(ErrorCode::InternalPatchFailure, what);
}

DegreeSequence as_sequence(const std::vector<Target>& level) {
    std::vector<Degree> v;
    v.reserve(level.size());
    for (const Target& t : level) v.push_back(t.degree);
    return make_sequence(v, true);
}

// Lowers the targets of the head and tail vertices until every target is
// zero, recording the sequence at each level.
std::vector<Level> descend(const DegreeSequence& d, Mode mode, ReductionTrace& trace) {
    std::vector<Target> current;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 0) current.push_back({i, d[i]});

    std::vector<Level> levels;
    while (!current.empty()) {
        std::sort(current.begin(), current.end(), [](const Target& a, const Target& b) {
            return a.degree != b.degree ? a.degree > b.degree : a.id < b.id;
        });

        ReductionStep step;
        step.original = as_sequence(current);
        step.tail_index = current.size();

        Level level{current.front().id, current.back().id, {}};
        for (const Target& t : current) level.members.push_back(t.id);
        std::sort(level.members.begin(), level.members.end());

        if (current.size() == 1) {
            const Degree drop = mode == Mode::Double ? 2 : 1;
            if (mode == Mode::Simple || current[0].degree < drop)
                patch_failure("descent reached an unrealizable single entry");
            current[0].degree -= drop;
            step.reduced_sorted = make_sequence({current[0].degree});
            step.pivot_m = 0;
        } else {
            Reduction r = choudum_reduce(step.original);
            step.reduced_sorted = r.reduced;
            step.pivot_m = r.pivot_m;
            current.front().degree -= 1;
            current.back().degree -= 1;
        }
        trace.steps.push_back(std::move(step));
        levels.push_back(std::move(level));
        std::erase_if(current, [](const Target& t) { return t.degree == 0; });
    }
    trace.terminal = make_sequence(std::vector<Degree>(d.size(), 0));
    return levels;
}

struct Rebuilder {
    const GraphWithLoops& g;
    const Level& level;
    std::vector<Degree> deg;  // current degrees under the mode's convention

    // Smallest member other than the head that is not adjacent to it.
    Vertex non_neighbor_of_head() const {
        for (Vertex v : level.members)
            if (v != level.head && !g.has_edge(level.head, v)) return v;
        patch_failure("every vertex is adjacent to the head");
    }

    // Smallest neighbor of `from`, distinct from the tail, not adjacent
    // to the tail.
    Vertex neighbor_avoiding_tail(Vertex from) const {
        for (Vertex v : level.members)
            if (v != level.tail && g.has_edge(from, v) && !g.has_edge(v, level.tail)) return v;
        patch_failure("no neighbor of " + std::to_string(from) + " avoids the tail");
    }

    void require_degree_gap(Vertex vi) const {
        if (deg[vi] <= deg[level.tail])
            patch_failure("degree of " + std::to_string(vi) + " does not exceed the tail's");
    }

    PatchCase reroute(Vertex vi) const {
        require_degree_gap(vi);
        return {PatchKind::ThreeVertexReroute, level.head, level.tail, vi,
                neighbor_avoiding_tail(vi)};
    }

    PatchCase choose(Mode mode) const {
        const Vertex h = level.head, t = level.tail;
        if (h == t) {
            if (g.has_loop(h)) patch_failure("single vertex already carries a loop");
            return {PatchKind::SingleVertexLoop, h, t, {}, {}};
        }
        if (!g.has_edge(h, t)) return {PatchKind::AddEdge, h, t, {}, {}};

        if (mode == Mode::Simple) return reroute(non_neighbor_of_head());

        if (!g.has_loop(h) && !g.has_loop(t)) {
            return {mode == Mode::Double ? PatchKind::SwapEdgeForTwoLoops : PatchKind::AddTwoLoops,
                    h, t, {}, {}};
        }

        if (g.has_loop(h)) {
            const Vertex vi = non_neighbor_of_head();
            if (g.has_loop(t) || !g.has_loop(vi)) return reroute(vi);
            // loop at vi, none at the tail
            if (mode == Mode::Reduced) return {PatchKind::LoopTransferViaEdge, h, t, vi, {}};
            if (g.has_edge(vi, t)) return {PatchKind::LoopAtTail, h, t, vi, {}};
            return {PatchKind::LoopSplitToTwoEdges, h, t, vi, {}};
        }

        // loop at the tail only
        std::optional<Vertex> vi;
        for (Vertex v : level.members) {
            if (v != t && g.has_edge(h, v) && !g.has_edge(v, t)) {
                vi = v;
                break;
            }
        }
        if (!vi) patch_failure("no neighbor of the head avoids the tail");
        if (mode == Mode::Double) return {PatchKind::HeadLoopShift, h, t, vi, {}};
        require_degree_gap(*vi);
        return {PatchKind::TailLoopReroute, h, t, vi, neighbor_avoiding_tail(*vi)};
    }
};

Realization realize(const DegreeSequence& d, Mode mode) {
    const CheckReport report = mode == Mode::Simple   ? check_erdos_gallai(d)
                               : mode == Mode::Double ? check_loops_double(d)
                                                      : check_loops_reduced(d);
    if (!report.passed) {
        std::string why = !report.parity_ok ? "odd degree sum"
                                            : "inequality fails at k = " +
                                                  std::to_string(*report.first_violation);
        throw Error(ErrorCode::InfeasibleSequence, "sequence is not realizable: " + why);
    }

    const Convention convention = mode == Mode::Reduced ? Convention::Reduced : Convention::Double;
    Realization out;
    out.trace.order = d.size();
    std::vector<Level> levels = descend(d, mode, out.trace.reductions);

    GraphWithLoops g(d.size());
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        Rebuilder rb{g, *it, g.vertex_degrees(convention)};
        PatchCase patch = rb.choose(mode);
        try {
            apply_patch(g, patch);
        } catch (const Error& e) {
            patch_failure(std::string("patch ") + std::string(to_string(patch.kind)) +
                          " did not apply: " + e.what());
        }
        out.trace.rebuild_steps.push_back(patch);
    }

    const std::vector<Degree> got = g.vertex_degrees(convention);
    if (!std::equal(got.begin(), got.end(), d.begin(), d.end()))
        patch_failure("rebuilt graph does not match the requested degrees");
    out.graph = std::move(g);
    return out;
}

}  // namespace

Realization realize_loops_double(const DegreeSequence& d) { return realize(d, Mode::Double); }

Realization realize_loops_reduced(const DegreeSequence& d) { return realize(d, Mode::Reduced); }

Realization realize_simple_traced(const DegreeSequence& d) { return realize(d, Mode::Simple); }

GraphWithLoops realize_simple(const DegreeSequence& d) { return realize(d, Mode::Simple).graph; }

bool feasibility_descends(const DegreeSequence& d, Convention convention) {
    if (d.empty() || !d.all_positive())
        throw Error(ErrorCode::ZeroEntry, "descent needs a nonempty strictly positive sequence");
    if (!check_loops(d, convention).passed)
        throw Error(ErrorCode::InfeasibleSequence, "descent needs a feasible sequence");
    if (convention == Convention::Reduced && d.size() == 1)
        return check_loops_reduced(make_sequence({d[0] - 1})).passed;
    return check_loops(choudum_reduce(d).reduced, convention).passed;
}

}  // namespace loopdeg
