#include <gtest/gtest.h>

#include <cstdlib>

#include "loopdeg/error.hpp"
#include "loopdeg/oracle.hpp"

namespace loopdeg {
namespace {

DegreeSequence seq(std::initializer_list<Degree> v) { return make_sequence(v); }

TEST(Oracle, ReducedExamples) {
    const OracleResult k3 = oracle_realizable(seq({3, 3, 3}), Convention::Reduced);
    ASSERT_TRUE(k3.realizable);
    EXPECT_EQ(*k3.witness, complete_graph_with_loops(3));

    EXPECT_FALSE(oracle_realizable(seq({2}), Convention::Reduced).realizable);

    // First hit in slot order, cross-checked with a separate brute force.
    const OracleResult r = oracle_realizable(seq({3, 3, 1, 1}), Convention::Reduced);
    ASSERT_TRUE(r.realizable);
    EXPECT_EQ(*r.witness, GraphWithLoops(4, {{0, 1}, {0, 3}, {1, 2}}, {0, 1}));
}

TEST(Oracle, DoubleExamples) {
    const OracleResult loop = oracle_realizable(seq({2}), Convention::Double);
    ASSERT_TRUE(loop.realizable);
    EXPECT_EQ(*loop.witness, GraphWithLoops(1, {}, {0}));
    EXPECT_FALSE(oracle_realizable(seq({3}), Convention::Double).realizable);
    EXPECT_TRUE(oracle_realizable({}, Convention::Double).realizable);
}

TEST(Oracle, BipartiteExamples) {
    const BipartiteOracleResult r = oracle_bipartite_symmetric(seq({4, 4, 2, 2}));
    ASSERT_TRUE(r.realizable);
    EXPECT_EQ(bipartite_part_degrees(*r.witness), std::pair(seq({4, 4, 2, 2}), seq({4, 4, 2, 2})));
    EXPECT_FALSE(oracle_bipartite_symmetric(seq({2})).realizable);
    EXPECT_TRUE(oracle_bipartite_symmetric(seq({1, 1})).realizable);
}

TEST(Oracle, BudgetIsEnforced) {
    OracleBudget small;
    small.max_n = 3;
    small.max_bipartite_n = 2;
    try {
        oracle_realizable(seq({1, 1, 1, 1}), Convention::Reduced, small);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
    EXPECT_THROW(oracle_bipartite_symmetric(seq({1, 1, 1}), small), Error);
    EXPECT_THROW(exhaustive_sequence_scan(4, 2, Convention::Double, small), Error);

    // a zero timeout trips the first clock check of a long search
    OracleBudget no_time;
    no_time.max_n = 7;
    no_time.timeout = std::chrono::milliseconds(0);
    EXPECT_THROW(oracle_realizable(seq({7, 7, 7, 7, 7, 7, 1}), Convention::Double, no_time),
                 Error);
}

TEST(Oracle, BudgetFromEnvironment) {
    ::setenv("LOOPDEG_ORACLE_MAX_N", "6", 1);
    ::setenv("LOOPDEG_ORACLE_TIMEOUT_MS", "250", 1);
    const OracleBudget b = OracleBudget::from_env();
    EXPECT_EQ(b.max_n, 6u);
    EXPECT_EQ(b.max_bipartite_n, 4u);
    EXPECT_EQ(b.timeout, std::chrono::milliseconds(250));
    ::unsetenv("LOOPDEG_ORACLE_MAX_N");
    ::unsetenv("LOOPDEG_ORACLE_TIMEOUT_MS");
    EXPECT_EQ(OracleBudget::from_env().max_n, 5u);
}

TEST(EnumerateSequences, CountsAndOrder) {
    EXPECT_EQ(enumerate_sequences(0, 3).size(), 1u);
    EXPECT_EQ(enumerate_sequences(2, 2).size(), 6u);
    EXPECT_EQ(enumerate_sequences(5, 6).size(), 462u);
    const auto two = enumerate_sequences(2, 2);
    EXPECT_EQ(two.front(), seq({0, 0}));
    EXPECT_EQ(two.back(), seq({2, 2}));
}

TEST(ExhaustiveScan, Examples) {
    const auto a = exhaustive_sequence_scan(1, 1, Convention::Reduced);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].sequence, seq({0}));
    EXPECT_TRUE(a[0].realizable);
    EXPECT_EQ(a[1].sequence, seq({1}));
    EXPECT_TRUE(a[1].realizable);

    const auto b = exhaustive_sequence_scan(1, 2, Convention::Double);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_TRUE(b[0].realizable);
    EXPECT_FALSE(b[1].realizable);
    EXPECT_TRUE(b[2].realizable);

    for (const ScanEntry& e : exhaustive_sequence_scan(2, 2, Convention::Reduced))
        EXPECT_EQ(e.realizable, check_loops_reduced(e.sequence).passed);
}

// Realizable counts computed by enumerating every graph without pruning
// and collecting the degree multisets.
TEST(ExhaustiveScan, FrozenRealizableCounts) {
    const std::size_t reduced[] = {2, 5, 14, 43, 140};
    const std::size_t dbl[] = {2, 6, 16, 51, 162};
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t r = 0, d = 0;
        for (const ScanEntry& e :
             exhaustive_sequence_scan(n, static_cast<Degree>(n), Convention::Reduced)) {
            r += e.realizable;
            if (e.witness) {
                EXPECT_TRUE(verify_realization(*e.witness, e.sequence, Convention::Reduced));
            }
        }
        for (const ScanEntry& e :
             exhaustive_sequence_scan(n, static_cast<Degree>(n) + 1, Convention::Double)) {
            d += e.realizable;
            if (e.witness) {
                EXPECT_TRUE(verify_realization(*e.witness, e.sequence, Convention::Double));
            }
            EXPECT_EQ(e.realizable, e.witness.has_value());
        }
        EXPECT_EQ(r, reduced[n - 1]) << "n=" << n;
        EXPECT_EQ(d, dbl[n - 1]) << "n=" << n;
    }
    const std::size_t bip[] = {2, 5, 14, 43};
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t b = 0;
        for (const DegreeSequence& s : enumerate_sequences(n, static_cast<Degree>(n)))
            b += oracle_bipartite_symmetric(s).realizable;
        EXPECT_EQ(b, bip[n - 1]) << "n=" << n;
    }
}

// Lowering one entry does not preserve realizability: deleting an edge
// lowers two entries. Counterexamples agree with a separate brute force.
TEST(Oracle, LoweringOneEntryCanBreakRealizability) {
    EXPECT_TRUE(oracle_realizable(seq({2, 1}), Convention::Reduced).realizable);
    EXPECT_FALSE(oracle_realizable(seq({2, 0}), Convention::Reduced).realizable);
    EXPECT_TRUE(oracle_realizable(seq({4, 4, 2, 2}), Convention::Reduced).realizable);
    EXPECT_FALSE(oracle_realizable(seq({4, 4, 2, 1}), Convention::Reduced).realizable);
}

// Deleting any edge or loop of a witness leaves a realizable sequence.
TEST(Oracle, DeletionFromWitnessStaysRealizable) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const ScanEntry& e :
             exhaustive_sequence_scan(n, static_cast<Degree>(n), Convention::Reduced)) {
            if (!e.witness) continue;
            for (const Edge& edge : e.witness->edges()) {
                GraphWithLoops g = *e.witness;
                g.remove_edge(edge.u, edge.v);
                EXPECT_TRUE(oracle_realizable(degrees_reduced(g), Convention::Reduced).realizable);
            }
            for (Vertex v : e.witness->loops()) {
                GraphWithLoops g = *e.witness;
                g.remove_loop(v);
                EXPECT_TRUE(oracle_realizable(degrees_reduced(g), Convention::Reduced).realizable);
            }
        }
    }
}

}  // namespace
}  // namespace loopdeg
