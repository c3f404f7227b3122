#ifndef RRULES_REPORT_HPP
#define RRULES_REPORT_HPP

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrules/dataset.hpp"
#include "rrules/induction.hpp"
#include "rrules/metrics.hpp"

namespace rrules {

/// One emitted line of a results table.
struct ReportRow {
    std::string dataset;
    std::string algorithm;
    MetricsReport metrics;
    bool failed = false;
    std::string error;
};

namespace detail {

inline std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", v * 100.0);
    return buf;
}

inline std::string ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1fms", v);
    return buf;
}

inline std::string pad(std::string s, std::size_t w) {
    while (s.size() < w) s += ' ';
    return s;
}

} // namespace detail

/// Human-readable aligned table with the usual comparison columns.
inline std::string format_table(const std::vector<ReportRow> &rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"Dataset", "Algorithm", "N Rules", "Train Prec.", "Train Cov.",
                     "Test Acc.", "Ind. Time"});
    for (const auto &r : rows) {
        if (r.failed) {
            cells.push_back({r.dataset, r.algorithm, "FAILED: " + r.error, "", "", "", ""});
            continue;
        }
        const auto &m = r.metrics;
        cells.push_back({r.dataset, r.algorithm, std::to_string(m.n_rules),
                         detail::pct(m.mean_precision), detail::pct(m.overall_coverage),
                         m.test_accuracy ? detail::pct(*m.test_accuracy) : "-",
                         detail::ms(m.induction_time_ms)});
    }
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto &row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::string out;
    for (const auto &row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += detail::pad(row[c], widths[c]);
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

inline std::string format_csv(const std::vector<ReportRow> &rows) {
    std::string out = "dataset,algorithm,n_rules,mean_precision,overall_coverage,"
                      "test_accuracy,induction_time_ms,default_rule_uses\n";
    char buf[160];
    for (const auto &r : rows) {
        if (r.failed) {
            out += r.dataset + "," + r.algorithm + ",FAILED,,,,,\n";
            continue;
        }
        const auto &m = r.metrics;
        std::snprintf(buf, sizeof(buf), "%s,%s,%zu,%.6f,%.6f,%s,%.3f,%zu\n",
                      r.dataset.c_str(), r.algorithm.c_str(), m.n_rules, m.mean_precision,
                      m.overall_coverage,
                      m.test_accuracy ? std::to_string(*m.test_accuracy).c_str() : "",
                      m.induction_time_ms, m.default_rule_uses);
        out += buf;
    }
    return out;
}

inline nlohmann::ordered_json report_to_json(const std::vector<ReportRow> &rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json rec;
        rec["dataset"] = r.dataset;
        rec["algorithm"] = r.algorithm;
        if (r.failed) {
            rec["failed"] = true;
            rec["error"] = r.error;
        } else {
            const auto &m = r.metrics;
            rec["n_rules"] = m.n_rules;
            rec["mean_precision"] = m.mean_precision;
            rec["overall_coverage"] = m.overall_coverage;
            if (m.test_accuracy)
                rec["test_accuracy"] = *m.test_accuracy;
            else
                rec["test_accuracy"] = nullptr;
            rec["induction_time_ms"] = m.induction_time_ms;
            rec["default_rule_uses"] = m.default_rule_uses;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

/// Structured rule-set export with attribute/value names, not indices.
inline nlohmann::ordered_json ruleset_to_json(const RuleSet &rs, const Dataset &d) {
    nlohmann::ordered_json out;
    out["algorithm"] = algorithm_name(rs.algorithm);
    out["rules"] = nlohmann::ordered_json::array();
    for (const auto &r : rs.rules) {
        nlohmann::ordered_json rec;
        rec["order"] = r.order;
        rec["if"] = nlohmann::ordered_json::array();
        for (const auto &s : r.antecedent.selectors()) {
            rec["if"].push_back({{"attribute", d.attributes[s.attribute].name},
                                 {"value", d.attributes[s.attribute].values[s.value]}});
        }
        rec["then"] = d.class_names[r.consequent];
        rec["n_c"] = r.n_c_at_creation;
        rec["from_inconsistency"] = r.from_inconsistency;
        out["rules"].push_back(std::move(rec));
    }
    if (rs.default_class)
        out["default"] = d.class_names[*rs.default_class];
    else
        out["default"] = nullptr;
    return out;
}

/// Per-dataset RULES/RRULES ratios for suite summaries.
struct RatioRow {
    std::string dataset;
    double rules_ratio = 0.0;    // n_rules(RULES) / n_rules(RRULES)
    double coverage_ratio = 0.0; // coverage(RULES) / coverage(RRULES)
    double time_ratio = 0.0;     // time(RULES) / time(RRULES)
};

inline std::string format_ratio_summary(const std::vector<RatioRow> &rows) {
    if (rows.empty()) return {};
    std::string out = "Ratios RULES/RRULES:\n";
    char buf[160];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "  %-16s rules %.2f  coverage %.2f  time %.2f\n",
                      r.dataset.c_str(), r.rules_ratio, r.coverage_ratio, r.time_ratio);
        out += buf;
    }
    return out;
}

} // namespace rrules

#endif
