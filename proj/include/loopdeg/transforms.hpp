#pragma once

#include "loopdeg/graphs.hpp"
#include "loopdeg/sequences.hpp"

namespace loopdeg {

/// G x K2: left copy i, right copy i'. Edge {a,b} gives (a,b') and (b,a');
/// a loop at a gives the single edge (a,a'). Part degrees are the reduced
/// degrees of g.
BipartiteGraph tensor_double_cover(const GraphWithLoops& g);

/// Two-sheeted cover on 2n vertices (sheet 0 is [0,n), sheet 1 is [n,2n)).
/// Edge {a,b} lifts to {a,b+n} and {a+n,b}; a loop at a lifts to a double
/// edge {a,a+n}. Vertex degrees are the double-convention degrees of g.
LoopMultigraph topological_double_cover(const GraphWithLoops& g);

/// Complement inside the complete graph-with-loops on the same vertices.
GraphWithLoops complement_graph(const GraphWithLoops& g);

/// Bipartite graph with both part sequences equal to d, built as the
/// tensor cover of a reduced-degree realization. Throws InfeasibleSequence.
BipartiteGraph symmetric_bipartite_realization(const DegreeSequence& d);

/// True iff swapping left i with right i is an automorphism.
/// Throws PartSizeMismatch when the parts differ in size.
bool involution_check(const BipartiteGraph& b);

}  // namespace loopdeg
