#include "loopdeg/oracle.hpp"

#include <cstdlib>
#include <string>

#include "loopdeg/error.hpp"

namespace loopdeg {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0') throw Error(ErrorCode::ParseError, std::string("bad value for ") + name);
    return static_cast<std::size_t>(v);
}

using Clock = std::chrono::steady_clock;

// Depth-first search over a fixed list of 0/1 slots. Each slot adds
// `gain_a` to vertex a and `gain_b` to vertex b (b unused when gain_b == 0).
// `remaining[s][v]` is the most vertex v can still gain from slots s.. end,
// which prunes branches that can no longer reach their target.
class SlotSearch {
public:
    struct Slot {
        std::size_t a, b;
        Degree gain_a, gain_b;
    };

    SlotSearch(std::vector<Slot> slots, std::vector<Degree> target,
               std::chrono::milliseconds timeout)
        : slots_(std::move(slots)),
          target_(std::move(target)),
          deadline_(Clock::now() + timeout),
          chosen_(slots_.size(), false),
          degree_(target_.size(), 0) {
        remaining_.assign(slots_.size() + 1, std::vector<Degree>(target_.size(), 0));
        for (std::size_t s = slots_.size(); s-- > 0;) {
            remaining_[s] = remaining_[s + 1];
            remaining_[s][slots_[s].a] += slots_[s].gain_a;
            remaining_[s][slots_[s].b] += slots_[s].gain_b;
        }
    }

    bool run() { return visit(0); }
    const std::vector<bool>& chosen() const { return chosen_; }

private:
    bool visit(std::size_t s) {
        if ((nodes_++ & 0xFFF) == 0 && Clock::now() > deadline_)
            throw Error(ErrorCode::BudgetExceeded, "oracle search timed out");
        for (std::size_t v = 0; v < target_.size(); ++v)
            if (degree_[v] + remaining_[s][v] < target_[v]) return false;
        if (s == slots_.size()) return true;  // all targets met exactly

        if (visit(s + 1)) return true;

        const Slot& slot = slots_[s];
        degree_[slot.a] += slot.gain_a;
        degree_[slot.b] += slot.gain_b;
        if (degree_[slot.a] <= target_[slot.a] && degree_[slot.b] <= target_[slot.b]) {
            chosen_[s] = true;
            if (visit(s + 1)) return true;
            chosen_[s] = false;
        }
        degree_[slot.a] -= slot.gain_a;
        degree_[slot.b] -= slot.gain_b;
        return false;
    }

    std::vector<Slot> slots_;
    std::vector<Degree> target_;
    Clock::time_point deadline_;
    std::vector<bool> chosen_;
    std::vector<Degree> degree_;
    std::vector<std::vector<Degree>> remaining_;
    std::size_t nodes_ = 0;
};

void enumerate_into(std::size_t n, Degree cap, std::vector<Degree>& prefix,
                    std::vector<DegreeSequence>& out) {
    if (prefix.size() == n) {
        out.push_back(make_sequence(prefix));
        return;
    }
    for (Degree x = 0; x <= cap; ++x) {
        prefix.push_back(x);
        enumerate_into(n, x, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    b.max_n = env_or("LOOPDEG_ORACLE_MAX_N", b.max_n);
    b.max_bipartite_n = env_or("LOOPDEG_ORACLE_MAX_BIPARTITE_N", b.max_bipartite_n);
    b.timeout = std::chrono::milliseconds(
        env_or("LOOPDEG_ORACLE_TIMEOUT_MS", static_cast<std::size_t>(b.timeout.count())));
    return b;
}

OracleResult oracle_realizable(const DegreeSequence& d, Convention convention,
                               const OracleBudget& budget) {
    const std::size_t n = d.size();
    if (n > budget.max_n) {
        throw Error(ErrorCode::BudgetExceeded, "n = " + std::to_string(n) +
                                                   " exceeds oracle cap " +
                                                   std::to_string(budget.max_n));
    }
    std::vector<SlotSearch::Slot> slots;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) slots.push_back({a, b, 1, 1});
    const Degree loop_gain = convention == Convention::Double ? 2 : 1;
    for (std::size_t a = 0; a < n; ++a) slots.push_back({a, a, loop_gain, 0});

    SlotSearch search(slots, {d.begin(), d.end()}, budget.timeout);
    OracleResult result;
    if (!search.run()) return result;

    GraphWithLoops g(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (!search.chosen()[s]) continue;
        if (slots[s].a == slots[s].b)
            g.add_loop(slots[s].a);
        else
            g.add_edge(slots[s].a, slots[s].b);
    }
    result.realizable = true;
    result.witness = std::move(g);
    return result;
}

BipartiteOracleResult oracle_bipartite_symmetric(const DegreeSequence& d,
                                                 const OracleBudget& budget) {
    const std::size_t n = d.size();
    if (n > budget.max_bipartite_n) {
        throw Error(ErrorCode::BudgetExceeded, "n = " + std::to_string(n) +
                                                   " exceeds bipartite oracle cap " +
                                                   std::to_string(budget.max_bipartite_n));
    }
    // Left vertex l is search vertex l, right vertex r is search vertex n + r.
    std::vector<SlotSearch::Slot> slots;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t r = 0; r < n; ++r) slots.push_back({l, n + r, 1, 1});
    std::vector<Degree> target(d.begin(), d.end());
    target.insert(target.end(), d.begin(), d.end());

    SlotSearch search(slots, target, budget.timeout);
    BipartiteOracleResult result;
    if (!search.run()) return result;

    BipartiteGraph b(n, n);
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (search.chosen()[s]) b.add_edge(slots[s].a, slots[s].b - n);
    result.realizable = true;
    result.witness = std::move(b);
    return result;
}

std::vector<DegreeSequence> enumerate_sequences(std::size_t n, Degree d_max) {
    std::vector<DegreeSequence> out;
    std::vector<Degree> prefix;
    if (d_max >= 0) enumerate_into(n, d_max, prefix, out);
    return out;
}

std::vector<ScanEntry> exhaustive_sequence_scan(std::size_t n, Degree d_max,
                                                Convention convention,
                                                const OracleBudget& budget) {
    if (n > budget.max_n) {
        throw Error(ErrorCode::BudgetExceeded, "scan order " + std::to_string(n) +
                                                   " exceeds oracle cap " +
                                                   std::to_string(budget.max_n));
    }
    std::vector<ScanEntry> out;
    for (DegreeSequence& d : enumerate_sequences(n, d_max)) {
        OracleResult r = oracle_realizable(d, convention, budget);
        out.push_back({std::move(d), r.realizable, std::move(r.witness)});
    }
    return out;
}

}  // namespace loopdeg
