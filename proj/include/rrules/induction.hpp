#ifndef RRULES_INDUCTION_HPP
#define RRULES_INDUCTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrules/conditions.hpp"
#include "rrules/dataset.hpp"
#include "rrules/row_set.hpp"

namespace rrules {

struct Rule {
    Condition antecedent;
    std::uint32_t consequent = 0;
    std::uint32_t order = 0;          // creation sequence number
    std::uint32_t n_c_at_creation = 0;
    bool from_inconsistency = false;
};

enum class Algorithm { rules, rrules };

inline const char *algorithm_name(Algorithm a) {
    return a == Algorithm::rules ? "rules" : "rrules";
}

struct RuleSet {
    std::vector<Rule> rules;
    std::optional<std::uint32_t> default_class;
    Algorithm algorithm = Algorithm::rules;
    std::size_t n_attributes = 0; // training schema width, for prediction checks
};

struct IterationCounts {
    std::size_t n_c = 0;
    std::size_t conditions_generated = 0;
    std::size_t discarded_empty = 0;      // |M| = 0 (rules) / |M_T| = 0 (rrules)
    std::size_t discarded_irrelevant = 0; // subset rule exists / |M_N| = 0
    std::size_t skipped_mixed = 0;        // impure match below n_c = n_a
    std::size_t rules_created = 0;
    std::size_t remaining_unclassified = 0; // |N| after the iteration
};

struct InductionTrace {
    std::vector<IterationCounts> iterations;
};

/// Irrelevance in the baseline sense: some existing rule's antecedent is a
/// subset of the candidate, so a more general rule already classifies
/// everything the candidate would match.
inline bool is_irrelevant(const Condition &c, const RuleSet &existing) {
    for (const auto &r : existing.rules)
        if (r.antecedent.size() <= c.size() && r.antecedent.is_subset_of(c)) return true;
    return false;
}

namespace detail {

/// Consequent class if every row of m shares one; nullopt on a mixed match.
inline std::optional<std::uint32_t> pure_class(const RowSet &m, const Dataset &d) {
    std::size_t r0 = m.first();
    if (r0 >= d.n_rows()) return std::nullopt;
    std::uint32_t c = d.classes[r0];
    bool pure = true;
    m.for_each([&](std::size_t r) { pure = pure && d.classes[r] == c; });
    if (!pure) return std::nullopt;
    return c;
}

/// Modal class of m; ties go to the lowest class index.
inline std::uint32_t modal_class(const RowSet &m, const Dataset &d) {
    std::vector<std::size_t> counts(d.n_classes(), 0);
    m.for_each([&](std::size_t r) { ++counts[d.classes[r]]; });
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c)
        if (counts[c] > counts[best]) best = c;
    return static_cast<std::uint32_t>(best);
}

inline std::uint32_t modal_training_class(const Dataset &d) {
    std::vector<std::size_t> counts(d.n_classes(), 0);
    for (auto c : d.classes) ++counts[c];
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c)
        if (counts[c] > counts[best]) best = c;
    return static_cast<std::uint32_t>(best);
}

} // namespace detail

/// Baseline covering induction. Outer loop over condition length n_c with
/// the everything-classified check only at the top of each iteration;
/// candidates are all distinct-attribute combinations of the selectors
/// present in the unclassified set N; matches are taken against the full
/// training set T. A pure, non-irrelevant match becomes a rule and its
/// T-matches leave N. At n_c = n_a a mixed match is an inconsistency and
/// yields a modal-class rule.
inline std::pair<RuleSet, InductionTrace> induce_rules(const Dataset &train) {
    if (train.n_rows() == 0) throw std::invalid_argument("induce_rules: empty training set");
    MatchIndex index(train);
    RowSet unclassified = RowSet::all(train.n_rows());
    const RowSet all_rows = RowSet::all(train.n_rows());

    RuleSet rs;
    rs.algorithm = Algorithm::rules;
    rs.n_attributes = train.n_attributes();
    InductionTrace trace;

    std::size_t n_a = train.n_attributes();
    for (std::size_t n_c = 1; n_c <= n_a; ++n_c) {
        if (unclassified.empty()) break;
        IterationCounts it;
        it.n_c = n_c;
        auto pool = selectors_present(train, unclassified);
        for_each_condition(pool, n_c, [&](std::span<const Selector> sels) {
            ++it.conditions_generated;
            RowSet matched = all_rows;
            for (const auto &s : sels) matched &= index.mask(s);
            if (matched.empty()) {
                ++it.discarded_empty;
                return true;
            }
            auto cls = detail::pure_class(matched, train);
            if (cls) {
                Condition cond{std::vector<Selector>(sels.begin(), sels.end())};
                if (is_irrelevant(cond, rs)) {
                    ++it.discarded_irrelevant;
                    return true;
                }
                rs.rules.push_back({std::move(cond), *cls,
                                    static_cast<std::uint32_t>(rs.rules.size()),
                                    static_cast<std::uint32_t>(n_c), false});
                unclassified -= matched;
                ++it.rules_created;
            } else if (n_c == n_a) {
                // Inconsistency: identical attributes, different classes.
                Condition cond{std::vector<Selector>(sels.begin(), sels.end())};
                rs.rules.push_back({std::move(cond), detail::modal_class(matched, train),
                                    static_cast<std::uint32_t>(rs.rules.size()),
                                    static_cast<std::uint32_t>(n_c), true});
                unclassified -= matched;
                ++it.rules_created;
            } else {
                ++it.skipped_mixed;
            }
            return true;
        });
        it.remaining_unclassified = unclassified.count();
        trace.iterations.push_back(it);
    }
    rs.default_class = detail::modal_training_class(train);
    return {std::move(rs), std::move(trace)};
}

/// Optimized induction: a candidate is matched against both the full set T
/// and the unclassified set N. Candidates matching no unclassified row are
/// irrelevant; rule creation removes the N-matches and the run stops as soon
/// as N empties rather than at the next outer iteration.
inline std::pair<RuleSet, InductionTrace> induce_rrules(const Dataset &train) {
    if (train.n_rows() == 0) throw std::invalid_argument("induce_rrules: empty training set");
    MatchIndex index(train);
    RowSet unclassified = RowSet::all(train.n_rows());
    const RowSet all_rows = RowSet::all(train.n_rows());

    RuleSet rs;
    rs.algorithm = Algorithm::rrules;
    rs.n_attributes = train.n_attributes();
    InductionTrace trace;

    std::size_t n_a = train.n_attributes();
    for (std::size_t n_c = 1; n_c <= n_a && !unclassified.empty(); ++n_c) {
        IterationCounts it;
        it.n_c = n_c;
        auto pool = selectors_present(train, unclassified);
        for_each_condition(pool, n_c, [&](std::span<const Selector> sels) {
            ++it.conditions_generated;
            RowSet matched_t = all_rows;
            for (const auto &s : sels) matched_t &= index.mask(s);
            if (matched_t.empty()) {
                ++it.discarded_empty;
                return true;
            }
            RowSet matched_n = matched_t & unclassified;
            if (matched_n.empty()) {
                ++it.discarded_irrelevant;
                return true;
            }
            auto cls = detail::pure_class(matched_t, train);
            if (cls) {
                rs.rules.push_back({Condition{std::vector<Selector>(sels.begin(), sels.end())},
                                    *cls, static_cast<std::uint32_t>(rs.rules.size()),
                                    static_cast<std::uint32_t>(n_c), false});
                unclassified -= matched_n;
                ++it.rules_created;
                return !unclassified.empty();
            }
            if (n_c == n_a) {
                rs.rules.push_back({Condition{std::vector<Selector>(sels.begin(), sels.end())},
                                    detail::modal_class(matched_t, train),
                                    static_cast<std::uint32_t>(rs.rules.size()),
                                    static_cast<std::uint32_t>(n_c), true});
                unclassified -= matched_n;
                ++it.rules_created;
                return !unclassified.empty();
            }
            ++it.skipped_mixed;
            return true;
        });
        it.remaining_unclassified = unclassified.count();
        trace.iterations.push_back(it);
    }
    rs.default_class = detail::modal_training_class(train);
    return {std::move(rs), std::move(trace)};
}

inline std::pair<RuleSet, InductionTrace> induce(Algorithm a, const Dataset &train) {
    return a == Algorithm::rules ? induce_rules(train) : induce_rrules(train);
}

/// First-match prediction in creation order, falling back to the default
/// class when no rule matches.
inline std::uint32_t predict(const RuleSet &rs, std::span<const std::uint32_t> row) {
    if (row.size() != rs.n_attributes)
        throw std::invalid_argument("predict: row width does not match training schema");
    for (const auto &r : rs.rules)
        if (r.antecedent.matches_row(row)) return r.consequent;
    if (!rs.default_class)
        throw std::invalid_argument("predict: no matching rule and no default class");
    return *rs.default_class;
}

/// predict plus a flag telling whether the default rule fired.
inline std::pair<std::uint32_t, bool> predict_traced(const RuleSet &rs,
                                                     std::span<const std::uint32_t> row) {
    if (row.size() != rs.n_attributes)
        throw std::invalid_argument("predict: row width does not match training schema");
    for (const auto &r : rs.rules)
        if (r.antecedent.matches_row(row)) return {r.consequent, false};
    if (!rs.default_class)
        throw std::invalid_argument("predict: no matching rule and no default class");
    return {*rs.default_class, true};
}

struct VerificationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Replayable sanity checks against the training data: purity of every
/// non-inconsistency rule, coverage of every training row, and (for the
/// optimized variant) a nonempty unclassified match at each rule's creation.
inline VerificationReport verify_ruleset(const RuleSet &rs, const Dataset &train) {
    VerificationReport rep;
    MatchIndex index(train);
    const RowSet all_rows = RowSet::all(train.n_rows());

    RowSet covered(train.n_rows());
    for (const auto &r : rs.rules) {
        RowSet m = index.match(r.antecedent, all_rows);
        covered |= m;
        if (r.from_inconsistency) continue;
        bool pure = true;
        m.for_each([&](std::size_t row) { pure = pure && train.classes[row] == r.consequent; });
        if (!pure)
            rep.violations.push_back("rule " + std::to_string(r.order) +
                                     " is not class-pure on the training set");
    }
    for (std::size_t row = 0; row < train.n_rows(); ++row)
        if (!covered.contains(row))
            rep.violations.push_back("training row " + std::to_string(row) +
                                     " is not covered by any rule");
    if (rs.algorithm == Algorithm::rrules) {
        RowSet unclassified = RowSet::all(train.n_rows());
        for (const auto &r : rs.rules) {
            RowSet m_n = index.match(r.antecedent, unclassified);
            if (m_n.empty())
                rep.violations.push_back("rule " + std::to_string(r.order) +
                                         " classified no new row at creation");
            unclassified -= m_n;
        }
    }
    return rep;
}

/// One rule per line in creation order, then the default class.
inline std::string dump_ruleset(const RuleSet &rs, const Dataset &d) {
    std::string out;
    for (const auto &r : rs.rules) {
        out += "[" + std::to_string(r.order) + "] " + r.antecedent.render(d) +
               " THEN " + d.class_names[r.consequent] +
               "  (nc=" + std::to_string(r.n_c_at_creation) +
               ", inconsistent=" + (r.from_inconsistency ? "true" : "false") + ")\n";
    }
    if (rs.default_class) out += "DEFAULT " + d.class_names[*rs.default_class] + "\n";
    return out;
}

} // namespace rrules

#endif
