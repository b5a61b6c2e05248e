#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace loopdeg {

using Degree = std::int64_t;

/// How a loop contributes to the degree of its vertex.
///   Double:  loop counts twice (ordinary multigraph degree).
///   Reduced: loop counts once.
enum class Convention { Double, Reduced };

/// A nonincreasing sequence of nonnegative integers.
///
/// The only way to obtain one is through make_sequence (or the
/// operations below), so every instance satisfies the ordering invariant.
class DegreeSequence {
public:
    DegreeSequence() = default;

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    Degree operator[](std::size_t i) const { return values_[i]; }
    Degree front() const { return values_.front(); }
    Degree back() const { return values_.back(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }
    std::span<const Degree> values() const noexcept { return values_; }

    Degree sum() const noexcept;
    bool all_positive() const noexcept;

    /// Drops the trailing zero entries.
    DegreeSequence strip_zeros() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    friend DegreeSequence make_sequence(std::span<const Degree>, bool);
    explicit DegreeSequence(std::vector<Degree> v) : values_(std::move(v)) {}

    std::vector<Degree> values_;
};

/// Throws NegativeEntry, or NotSorted when `autosort` is false and the
/// input is not nonincreasing.
DegreeSequence make_sequence(std::span<const Degree> raw, bool autosort = false);
DegreeSequence make_sequence(std::initializer_list<Degree> raw, bool autosort = false);

struct CheckRow {
    std::size_t k;  // 1-based
    Degree lhs;     // sum of the first k entries
    Degree rhs;     // check-specific bound
    Degree slack() const noexcept { return rhs - lhs; }
};

struct CheckReport {
    bool passed = true;
    bool parity_ok = true;
    std::vector<CheckRow> rows;
    std::optional<std::size_t> first_violation;
};

/// sum(d_1..d_k) <= k(k-1) + sum_{i>k} min(k, d_i), with even total.
CheckReport check_erdos_gallai(const DegreeSequence& d);
/// sum(d_1..d_k) <= k(k+1) + sum_{i>k} min(k, d_i), with even total.
CheckReport check_loops_double(const DegreeSequence& d);
/// sum(d_1..d_k) <= k^2 + sum_{i>k} min(k, d_i). No parity condition.
CheckReport check_loops_reduced(const DegreeSequence& d);
/// (d, d) is the part-degree pair of a bipartite simple graph iff
/// sum(d_1..d_k) <= sum_{i=1..n} min(k, d_i) for all k.
CheckReport check_gale_ryser_symmetric(const DegreeSequence& d);

/// The check matching the realizability question for a convention.
CheckReport check_loops(const DegreeSequence& d, Convention convention);

/// result[k-1] = #{i : d_i >= k} for k = 1..d_1.
DegreeSequence conjugate(const DegreeSequence& d);

struct Reduction {
    DegreeSequence reduced;  // sorted nonincreasing, zeros kept
    std::size_t pivot_m;     // 1-based; 0 only for n == 1
};

/// Lowers d_1 and d_n by one and re-sorts, by lowering d_m and d_n where
/// d_1 = ... = d_m > d_{m+1} (m = n-1 when all entries are equal).
/// For n == 1 the single entry drops by 2 (removal of a loop counted
/// twice). Throws ZeroEntry on any zero, Underflow for the sequence (1).
Reduction choudum_reduce(const DegreeSequence& d);

DegreeSequence increment_all(const DegreeSequence& d);

/// (n - d_n, ..., n - d_1). Throws DegreeExceedsOrder when d_1 > n.
DegreeSequence complement_sequence(const DegreeSequence& d);

struct ReductionStep {
    DegreeSequence original;        // positive part at this level
    DegreeSequence reduced_sorted;  // after lowering, zeros kept
    std::size_t pivot_m = 0;        // 1-based; 0 for a single-vertex step
    std::size_t tail_index = 0;     // n at this level
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    DegreeSequence terminal;  // all-zero
};

}  // namespace loopdeg
