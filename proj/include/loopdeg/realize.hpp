#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "loopdeg/graphs.hpp"
#include "loopdeg/sequences.hpp"

namespace loopdeg {

/// The local rewrites used when rebuilding a realization one induction
/// level at a time. Each level must raise the degree of `head` (the
/// vertex of largest target) and `tail` (smallest target) by exactly one
/// while leaving every other degree fixed.
enum class PatchKind {
    AddEdge,              // head-tail not adjacent: add it
    SwapEdgeForTwoLoops,  // double: drop head-tail, loop both ends
    AddTwoLoops,          // reduced: loop both ends, keep head-tail
    ThreeVertexReroute,   // drop vi-vj, add head-vi and vj-tail
    LoopAtTail,           // double: drop vi-tail, add head-vi, loop tail
    LoopSplitToTwoEdges,  // double: unloop vi, add head-vi and vi-tail
    HeadLoopShift,        // double: drop head-vi, add vi-tail, loop head
    LoopTransferViaEdge,  // reduced: unloop vi, add head-vi, loop tail
    TailLoopReroute,      // reduced: unloop tail, drop vi-vj, add vj-tail
                          //   and vi-tail, loop head
    SingleVertexLoop,     // one positive vertex left: loop it
};

std::string_view to_string(PatchKind kind);

struct PatchCase {
    PatchKind kind;
    Vertex head;
    Vertex tail;
    std::optional<Vertex> vi;
    std::optional<Vertex> vj;

    friend bool operator==(const PatchCase&, const PatchCase&) = default;
};

/// Applies one rewrite. Throws InvalidGraph if the graph does not admit it.
void apply_patch(GraphWithLoops& g, const PatchCase& patch);

struct RealizationTrace {
    std::size_t order = 0;
    ReductionTrace reductions;
    std::vector<PatchCase> rebuild_steps;  // in application order
};

/// Rebuilds the realization from the edgeless graph on `trace.order`
/// vertices by applying every rebuild step in turn.
GraphWithLoops replay(const RealizationTrace& trace);

struct Realization {
    GraphWithLoops graph;
    RealizationTrace trace;
};

// Vertex i of every returned graph has degree d[i].
// All three throw InfeasibleSequence when the matching check fails, and
// InternalPatchFailure if the rebuild ever finds no applicable move.
Realization realize_loops_double(const DegreeSequence& d);
Realization realize_loops_reduced(const DegreeSequence& d);
Realization realize_simple_traced(const DegreeSequence& d);
GraphWithLoops realize_simple(const DegreeSequence& d);

/// Whether the one-step reduction of a strictly positive feasible d is
/// again feasible under the same convention. Always true; exposed so the
/// descent can be tested on its own. The reduced single entry (1)
/// descends to (0) by dropping its loop.
bool feasibility_descends(const DegreeSequence& d, Convention convention);

}  // namespace loopdeg
