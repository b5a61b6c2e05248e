#include "loopdeg/sequences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "loopdeg/error.hpp"

namespace loopdeg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::NotSorted: return "NotSorted";
        case ErrorCode::ZeroEntry: return "ZeroEntry";
        case ErrorCode::Underflow: return "Underflow";
        case ErrorCode::DegreeExceedsOrder: return "DegreeExceedsOrder";
        case ErrorCode::InfeasibleSequence: return "InfeasibleSequence";
        case ErrorCode::InternalPatchFailure: return "InternalPatchFailure";
        case ErrorCode::PartSizeMismatch: return "PartSizeMismatch";
        case ErrorCode::InvalidGraph: return "InvalidGraph";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Degree DegreeSequence::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), Degree{0});
}

bool DegreeSequence::all_positive() const noexcept {
    return values_.empty() || values_.back() > 0;
}

DegreeSequence DegreeSequence::strip_zeros() const {
    std::vector<Degree> v = values_;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return DegreeSequence(std::move(v));
}

DegreeSequence make_sequence(std::span<const Degree> raw, bool autosort) {
    std::vector<Degree> v(raw.begin(), raw.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
            throw Error(ErrorCode::NegativeEntry,
                        "negative degree " + std::to_string(v[i]) + " at position " +
                            std::to_string(i + 1));
        }
    }
    if (autosort) {
        std::sort(v.begin(), v.end(), std::greater<>());
    } else {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i - 1] < v[i]) {
                throw Error(ErrorCode::NotSorted,
                            "sequence is not nonincreasing at position " + std::to_string(i + 1));
            }
        }
    }
    return DegreeSequence(std::move(v));
}

DegreeSequence make_sequence(std::initializer_list<Degree> raw, bool autosort) {
    return make_sequence(std::span<const Degree>(raw.begin(), raw.size()), autosort);
}

namespace {

// Evaluates sum_{i<=k} d_i <= bound(k) + sum_{i>k} min(k, d_i) for every k.
// `counts[k]` = #{i : d_i >= k} lets the tail sum be computed in O(1):
// entries k+1..max(k,c) contribute k each, the rest contribute themselves.
template <typename Bound>
CheckReport run_inequalities(const DegreeSequence& d, bool need_even, Bound bound) {
    const std::size_t n = d.size();
    std::vector<Degree> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];

    CheckReport report;
    report.parity_ok = !need_even || prefix[n] % 2 == 0;
    report.rows.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const auto kd = static_cast<Degree>(k);
        // Number of entries >= k; d is nonincreasing.
        std::size_t c = static_cast<std::size_t>(
            std::partition_point(d.begin(), d.end(), [kd](Degree x) { return x >= kd; }) -
            d.begin());
        Degree tail = 0;
        if (c > k) tail += kd * static_cast<Degree>(c - k);
        const std::size_t from = std::max(k, c);
        tail += prefix[n] - prefix[from];

        CheckRow row{k, prefix[k], bound(kd) + tail};
        if (row.lhs > row.rhs && !report.first_violation) report.first_violation = k;
        report.rows.push_back(row);
    }
    report.passed = report.parity_ok && !report.first_violation;
    return report;
}

}  // namespace

CheckReport check_erdos_gallai(const DegreeSequence& d) {
    return run_inequalities(d, true, [](Degree k) { return k * (k - 1); });
}

CheckReport check_loops_double(const DegreeSequence& d) {
    return run_inequalities(d, true, [](Degree k) { return k * (k + 1); });
}

CheckReport check_loops_reduced(const DegreeSequence& d) {
    return run_inequalities(d, false, [](Degree k) { return k * k; });
}

CheckReport check_loops(const DegreeSequence& d, Convention convention) {
    return convention == Convention::Double ? check_loops_double(d) : check_loops_reduced(d);
}

DegreeSequence conjugate(const DegreeSequence& d) {
    std::vector<Degree> out;
    if (d.empty()) return make_sequence(out);
    out.reserve(static_cast<std::size_t>(d.front()));
    std::size_t count = d.size();
    for (Degree k = 1; k <= d.front(); ++k) {
        while (count > 0 && d[count - 1] < k) --count;
        out.push_back(static_cast<Degree>(count));
    }
    return make_sequence(out);
}

CheckReport check_gale_ryser_symmetric(const DegreeSequence& d) {
    // sum_{i=1..n} min(k, d_i) is the k-th prefix sum of the conjugate.
    const DegreeSequence conj = conjugate(d);
    const std::size_t n = d.size();
    CheckReport report;
    report.rows.reserve(n);
    Degree lhs = 0;
    Degree rhs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        if (k <= conj.size()) rhs += conj[k - 1];
        CheckRow row{k, lhs, rhs};
        if (row.lhs > row.rhs && !report.first_violation) report.first_violation = k;
        report.rows.push_back(row);
    }
    report.passed = !report.first_violation;
    return report;
}

Reduction choudum_reduce(const DegreeSequence& d) {
    if (d.empty()) throw Error(ErrorCode::ZeroEntry, "cannot reduce the empty sequence");
    if (!d.all_positive()) throw Error(ErrorCode::ZeroEntry, "sequence contains a zero entry");

    std::vector<Degree> v(d.begin(), d.end());
    const std::size_t n = v.size();
    if (n == 1) {
        if (v[0] < 2) throw Error(ErrorCode::Underflow, "single entry 1 cannot lose a loop");
        v[0] -= 2;
        return {make_sequence(v), 0};
    }

    std::size_t m = 1;
    while (m < n && v[m] == v[0]) ++m;
    if (m == n) m = n - 1;
    v[m - 1] -= 1;
    v[n - 1] -= 1;
    return {make_sequence(v), m};
}

DegreeSequence increment_all(const DegreeSequence& d) {
    std::vector<Degree> v(d.begin(), d.end());
    for (auto& x : v) ++x;
    return make_sequence(v);
}

DegreeSequence complement_sequence(const DegreeSequence& d) {
    const auto n = static_cast<Degree>(d.size());
    if (!d.empty() && d.front() > n) {
        throw Error(ErrorCode::DegreeExceedsOrder,
                    "largest degree " + std::to_string(d.front()) + " exceeds n = " +
                        std::to_string(n));
    }
    std::vector<Degree> v;
    v.reserve(d.size());
    for (auto it = d.values().rbegin(); it != d.values().rend(); ++it) v.push_back(n - *it);
    return make_sequence(v);
}

}  // namespace loopdeg
