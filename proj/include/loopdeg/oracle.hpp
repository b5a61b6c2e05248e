#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "loopdeg/graphs.hpp"
#include "loopdeg/sequences.hpp"

namespace loopdeg {

/// Limits for the exhaustive searches. A query is refused up front when
/// the order exceeds the cap, and aborted when it outlives the timeout.
struct OracleBudget {
    std::size_t max_n = 5;
    std::size_t max_bipartite_n = 4;
    std::chrono::milliseconds timeout{10'000};

    /// Defaults overridden by LOOPDEG_ORACLE_MAX_N,
    /// LOOPDEG_ORACLE_MAX_BIPARTITE_N and LOOPDEG_ORACLE_TIMEOUT_MS.
    static OracleBudget from_env();
};

struct OracleResult {
    bool realizable = false;
    std::optional<GraphWithLoops> witness;
};

struct BipartiteOracleResult {
    bool realizable = false;
    std::optional<BipartiteGraph> witness;
};

/// Searches all graphs-with-loops on n labelled vertices, slots in the
/// order {0,1},{0,2},...,{n-2,n-1}, then loops 0..n-1, absent before
/// present. The witness is the first hit in that order, with vertex i
/// of degree d[i]. Throws BudgetExceeded.
OracleResult oracle_realizable(const DegreeSequence& d, Convention convention,
                               const OracleBudget& budget = {});

/// Searches all bipartite graphs on n + n vertices for part degrees (d, d).
BipartiteOracleResult oracle_bipartite_symmetric(const DegreeSequence& d,
                                                 const OracleBudget& budget = {});

/// Every nonincreasing sequence of length n with entries in [0, d_max],
/// in increasing lexicographic order.
std::vector<DegreeSequence> enumerate_sequences(std::size_t n, Degree d_max);

struct ScanEntry {
    DegreeSequence sequence;
    bool realizable;
    std::optional<GraphWithLoops> witness;
};

std::vector<ScanEntry> exhaustive_sequence_scan(std::size_t n, Degree d_max,
                                                Convention convention,
                                                const OracleBudget& budget = {});

}  // namespace loopdeg
