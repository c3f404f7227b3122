#ifndef RRULES_METRICS_HPP
#define RRULES_METRICS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rrules/conditions.hpp"
#include "rrules/dataset.hpp"
#include "rrules/induction.hpp"

namespace rrules {

struct MetricsReport {
    std::size_t n_rules = 0;
    double mean_precision = 0.0;
    double overall_coverage = 0.0;
    std::optional<double> test_accuracy;
    double induction_time_ms = 0.0;
    std::size_t default_rule_uses = 0;
};

/// Correctly-classified fraction of the rows matching the antecedent.
/// nullopt when the rule matches nothing in d (possible only off-train).
inline std::optional<double> rule_precision(const Rule &r, const Dataset &d,
                                            const MatchIndex &index) {
    RowSet m = index.match(r.antecedent, RowSet::all(d.n_rows()));
    std::size_t total = m.count();
    if (total == 0) return std::nullopt;
    std::size_t correct = 0;
    m.for_each([&](std::size_t row) { correct += d.classes[row] == r.consequent; });
    return static_cast<double>(correct) / static_cast<double>(total);
}

inline std::optional<double> rule_precision(const Rule &r, const Dataset &d) {
    return rule_precision(r, d, MatchIndex(d));
}

/// Unweighted mean of per-rule precisions over rules with at least one
/// match in d. Unmatched rules are excluded, not scored zero.
inline double mean_precision(const RuleSet &rs, const Dataset &d) {
    if (rs.rules.empty()) throw std::invalid_argument("mean_precision: empty rule set");
    MatchIndex index(d);
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto &r : rs.rules) {
        if (auto p = rule_precision(r, d, index)) {
            sum += *p;
            ++n;
        }
    }
    if (n == 0) throw std::invalid_argument("mean_precision: no rule matches the dataset");
    return sum / static_cast<double>(n);
}

/// Sum of per-rule coverages |match| / |d|; the default rule never counts.
/// Exceeds 1 when rows are covered by several rules.
inline double overall_coverage(const RuleSet &rs, const Dataset &d) {
    if (d.n_rows() == 0) throw std::invalid_argument("overall_coverage: empty dataset");
    MatchIndex index(d);
    const RowSet all_rows = RowSet::all(d.n_rows());
    std::size_t total = 0;
    for (const auto &r : rs.rules) total += index.match(r.antecedent, all_rows).count();
    return static_cast<double>(total) / static_cast<double>(d.n_rows());
}

struct AccuracyResult {
    double accuracy = 0.0;
    std::size_t default_rule_uses = 0;
};

inline AccuracyResult test_accuracy(const RuleSet &rs, const Dataset &test) {
    if (test.n_rows() == 0) throw std::invalid_argument("test_accuracy: empty test set");
    AccuracyResult res;
    std::size_t correct = 0;
    for (std::size_t r = 0; r < test.n_rows(); ++r) {
        auto [cls, used_default] = predict_traced(rs, test.rows[r]);
        correct += cls == test.classes[r];
        res.default_rule_uses += used_default;
    }
    res.accuracy = static_cast<double>(correct) / static_cast<double>(test.n_rows());
    return res;
}

/// Median wall-clock induction time over `repeats` runs, induction call
/// only, in milliseconds.
inline double time_induction(Algorithm a, const Dataset &train, std::size_t repeats = 3) {
    if (repeats == 0) throw std::invalid_argument("time_induction: repeats must be >= 1");
    std::vector<double> samples;
    samples.reserve(repeats);
    for (std::size_t i = 0; i < repeats; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        auto result = induce(a, train);
        auto t1 = std::chrono::steady_clock::now();
        (void)result;
        samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

/// Assembles the full report for one (rule set, train, optional test) run.
inline MetricsReport evaluate(const RuleSet &rs, const Dataset &train,
                              const Dataset *test, double induction_time_ms) {
    MetricsReport rep;
    rep.n_rules = rs.rules.size();
    rep.mean_precision = mean_precision(rs, train);
    rep.overall_coverage = overall_coverage(rs, train);
    rep.induction_time_ms = induction_time_ms;
    if (test) {
        auto acc = test_accuracy(rs, *test);
        rep.test_accuracy = acc.accuracy;
        rep.default_rule_uses = acc.default_rule_uses;
    }
    return rep;
}

} // namespace rrules

#endif
