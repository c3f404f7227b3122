#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrules/rrules.hpp"

namespace {

struct ExperimentConfig {
    std::string data;                 // file path or built-in fixture name
    std::string algorithm = "both";   // rules | rrules | both
    double test_fraction = 0.2;       // 0 means train-only
    std::uint64_t seed = 0;
    std::size_t bins = 7;
    std::size_t repeats = 3;
    std::string class_column = "last"; // first | last | zero-based index
    std::string format = "table";      // table | csv | json
    bool dump_rules = false;
    bool verify = true;
};

std::optional<std::size_t> resolve_class_column(const std::string &s, std::size_t) {
    if (s == "last") return std::nullopt;
    if (s == "first") return 0;
    return static_cast<std::size_t>(std::stoul(s));
}

bool looks_numeric(const std::string &path, bool has_header,
                   std::optional<std::size_t> class_col) {
    std::ifstream in(path);
    try {
        rrules::load_numeric_csv(in, has_header, class_col);
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

rrules::Dataset load_dataset(const ExperimentConfig &cfg) {
    if (cfg.data == "paper-example") return rrules::paper_example();
    auto class_col = resolve_class_column(cfg.class_column, 0);
    std::ifstream probe(cfg.data);
    if (!probe) throw std::runtime_error("cannot open dataset file: " + cfg.data);
    // Fully numeric attribute columns get equal-width binning.
    if (looks_numeric(cfg.data, true, class_col)) {
        std::ifstream in(cfg.data);
        auto table = rrules::load_numeric_csv(in, true, class_col);
        return rrules::discretize(table, cfg.bins).first;
    }
    std::ifstream in(cfg.data);
    return rrules::load_csv(in, true, class_col);
}

std::vector<rrules::Algorithm> selected_algorithms(const std::string &s) {
    if (s == "rules") return {rrules::Algorithm::rules};
    if (s == "rrules") return {rrules::Algorithm::rrules};
    if (s == "both") return {rrules::Algorithm::rules, rrules::Algorithm::rrules};
    throw std::runtime_error("unknown algorithm: " + s);
}

std::string dataset_label(const std::string &source) {
    auto slash = source.find_last_of('/');
    std::string name = slash == std::string::npos ? source : source.substr(slash + 1);
    auto dot = name.rfind('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

struct ExperimentResult {
    std::vector<rrules::ReportRow> rows;
    bool ok = true;
};

ExperimentResult run_experiment(const ExperimentConfig &cfg, std::ostream &err) {
    ExperimentResult result;
    std::string label = dataset_label(cfg.data);
    try {
        auto full = load_dataset(cfg);
        rrules::Dataset train = full;
        std::optional<rrules::Dataset> test;
        if (cfg.test_fraction > 0.0) {
            auto [tr, te] = rrules::split(full, {cfg.test_fraction, cfg.seed});
            train = std::move(tr);
            test = std::move(te);
        }

        auto stats = rrules::dataset_stats(full);
        err << label << ": " << stats.n_examples << " examples, " << stats.n_attributes
            << " attributes, " << stats.n_selectors << " selectors, " << stats.n_classes
            << " classes\n";

        for (auto algo : selected_algorithms(cfg.algorithm)) {
            auto [rs, trace] = rrules::induce(algo, train);
            if (cfg.verify) {
                auto rep = rrules::verify_ruleset(rs, train);
                if (!rep.ok()) {
                    for (const auto &v : rep.violations)
                        err << label << " [" << rrules::algorithm_name(algo)
                            << "] verification: " << v << "\n";
                    result.ok = false;
                }
            }
            double t = rrules::time_induction(algo, train, cfg.repeats);
            auto metrics = rrules::evaluate(rs, train, test ? &*test : nullptr, t);
            result.rows.push_back({label, rrules::algorithm_name(algo), metrics, false, ""});
            if (cfg.dump_rules) std::cout << rrules::dump_ruleset(rs, train);
        }
    } catch (const std::exception &e) {
        err << label << ": " << e.what() << "\n";
        result.rows.push_back({label, cfg.algorithm, {}, true, e.what()});
        result.ok = false;
    }
    return result;
}

void emit(const std::vector<rrules::ReportRow> &rows, const std::string &format) {
    if (format == "csv")
        std::cout << rrules::format_csv(rows);
    else if (format == "json")
        std::cout << rrules::report_to_json(rows).dump(2) << "\n";
    else
        std::cout << rrules::format_table(rows);
}

/// Manifest: one experiment per non-empty, non-# line, `key=value` pairs
/// separated by whitespace, keys matching the CLI flag names.
std::vector<ExperimentConfig> parse_manifest(const std::string &path,
                                             const ExperimentConfig &defaults) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest: " + path);
    std::vector<ExperimentConfig> configs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        ExperimentConfig cfg = defaults;
        bool any = false;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                         ": expected key=value, got '" + tok + "'");
            std::string key = tok.substr(0, eq);
            std::string val = tok.substr(eq + 1);
            if (key == "data") cfg.data = val;
            else if (key == "algorithm") cfg.algorithm = val;
            else if (key == "test-fraction") cfg.test_fraction = std::stod(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "bins") cfg.bins = std::stoul(val);
            else if (key == "repeats") cfg.repeats = std::stoul(val);
            else if (key == "class-column") cfg.class_column = val;
            else
                throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                         ": unknown key '" + key + "'");
            any = true;
        }
        if (!any) continue;
        if (cfg.data.empty())
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": missing data=");
        configs.push_back(cfg);
    }
    return configs;
}

int run_suite(const std::vector<ExperimentConfig> &manifest, const std::string &format) {
    std::vector<rrules::ReportRow> rows;
    std::vector<rrules::RatioRow> ratios;
    bool ok = true;
    for (const auto &cfg : manifest) {
        auto res = run_experiment(cfg, std::cerr);
        ok = ok && res.ok;
        std::optional<rrules::ReportRow> rules_row, rrules_row;
        for (const auto &r : res.rows) {
            rows.push_back(r);
            if (r.failed) continue;
            if (r.algorithm == "rules") rules_row = r;
            if (r.algorithm == "rrules") rrules_row = r;
        }
        if (rules_row && rrules_row && rrules_row->metrics.n_rules > 0) {
            ratios.push_back(
                {rules_row->dataset,
                 static_cast<double>(rules_row->metrics.n_rules) /
                     static_cast<double>(rrules_row->metrics.n_rules),
                 rules_row->metrics.overall_coverage / rrules_row->metrics.overall_coverage,
                 rules_row->metrics.induction_time_ms /
                     std::max(rrules_row->metrics.induction_time_ms, 1e-9)});
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const rrules::ReportRow &a, const rrules::ReportRow &b) {
                         return a.dataset != b.dataset ? a.dataset < b.dataset
                                                       : a.algorithm < b.algorithm;
                     });
    emit(rows, format);
    if (format == "table") std::cout << rrules::format_ratio_summary(ratios);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"RULES / RRULES rule induction and benchmarking"};

    ExperimentConfig cfg;
    std::string suite_path;
    app.add_option("--data", cfg.data,
                   "Dataset CSV path or built-in fixture name (paper-example)");
    app.add_option("--algorithm", cfg.algorithm, "rules | rrules | both")
        ->check(CLI::IsMember({"rules", "rrules", "both"}));
    app.add_option("--test-fraction", cfg.test_fraction,
                   "Test split fraction in [0,1); 0 = train-only")
        ->check(CLI::Range(0.0, 0.999999));
    app.add_option("--seed", cfg.seed, "Split shuffle seed");
    app.add_option("--bins", cfg.bins, "Bin count for numeric datasets")
        ->check(CLI::PositiveNumber);
    app.add_option("--repeats", cfg.repeats, "Timing repeat count (median reported)")
        ->check(CLI::PositiveNumber);
    app.add_option("--class-column", cfg.class_column,
                   "Class column: first, last, or zero-based index");
    app.add_option("--format", cfg.format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_flag("--dump-rules", cfg.dump_rules, "Print induced rules");
    app.add_flag("--verify,!--no-verify", cfg.verify,
                 "Check purity/coverage of induced rule sets (default on)");
    app.add_option("--suite", suite_path, "Manifest file: one experiment per line");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!suite_path.empty()) return run_suite(parse_manifest(suite_path, cfg), cfg.format);
        if (cfg.data.empty()) {
            std::cerr << "error: --data or --suite is required\n";
            return 2;
        }
        auto res = run_experiment(cfg, std::cerr);
        emit(res.rows, cfg.format);
        return res.ok ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
