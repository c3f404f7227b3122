#ifndef RRULES_DATASET_HPP
#define RRULES_DATASET_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rrules {

struct AttributeSchema {
    enum class Kind { categorical, binned };

    std::string name;
    std::vector<std::string> values; // vocabulary, first-appearance order
    Kind kind = Kind::categorical;
};

/// Categorical table: every cell stored as an index into its attribute's
/// vocabulary, every class as an index into class_names. Immutable once built.
struct Dataset {
    std::vector<AttributeSchema> attributes;
    std::vector<std::vector<std::uint32_t>> rows; // row-major value indices
    std::vector<std::uint32_t> classes;           // one class index per row
    std::vector<std::string> class_names;

    std::size_t n_attributes() const { return attributes.size(); }
    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_classes() const { return class_names.size(); }
};

struct DiscretizationSpec {
    std::size_t n_bins = 0;
    std::vector<std::vector<double>> edges; // per attribute, n_bins+1 cut points
};

struct SplitSpec {
    double test_fraction = 0.2;
    std::uint64_t seed = 0;
};

/// Numeric table awaiting discretization.
struct NumericTable {
    std::vector<std::string> attribute_names;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> class_labels; // one per row
};

/// Summary statistics in the shape of a dataset-overview table:
/// examples, attributes, occupied selectors, classes.
struct DatasetStats {
    std::size_t n_examples = 0;
    std::size_t n_attributes = 0;
    std::size_t n_selectors = 0; // (attribute, value) pairs occurring in >= 1 row
    std::size_t n_classes = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string_view cell = (comma == std::string_view::npos)
                                    ? line.substr(start)
                                    : line.substr(start, comma - start);
        out.emplace_back(trim(cell));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

struct RawTable {
    std::vector<std::string> column_names;
    std::vector<std::vector<std::string>> cells;
    std::size_t class_col = 0;
};

/// Shared CSV parse: trims cells, rejects ragged rows and empty cells.
/// class_column: nullopt selects the last column.
inline RawTable parse_csv(std::istream &in, bool has_header,
                          std::optional<std::size_t> class_column) {
    RawTable t;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto cells = split_line(line);
        if (width == 0) {
            width = cells.size();
            if (width < 2)
                throw std::runtime_error("csv: need at least one attribute column plus a class column (line " +
                                         std::to_string(line_no) + ")");
        } else if (cells.size() != width) {
            throw std::runtime_error("csv: ragged row at line " + std::to_string(line_no) +
                                     " (expected " + std::to_string(width) + " cells, got " +
                                     std::to_string(cells.size()) + ")");
        }
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].empty())
                throw std::runtime_error("csv: empty cell at line " + std::to_string(line_no) +
                                         ", column " + std::to_string(c + 1));
        if (has_header && t.column_names.empty() && t.cells.empty()) {
            t.column_names = std::move(cells);
            continue;
        }
        t.cells.push_back(std::move(cells));
    }
    if (width == 0) throw std::runtime_error("csv: empty input");
    if (t.cells.empty()) throw std::runtime_error("csv: no data rows");
    std::size_t cc = class_column.value_or(width - 1);
    if (cc >= width)
        throw std::runtime_error("csv: class column " + std::to_string(cc) +
                                 " out of range for " + std::to_string(width) + " columns");
    t.class_col = cc;
    if (t.column_names.empty()) {
        for (std::size_t c = 0; c < width; ++c)
            t.column_names.push_back(c == cc ? "class" : "att" + std::to_string(c + 1));
    }
    return t;
}

inline std::optional<double> parse_number(const std::string &s) {
    double v = 0;
    const char *b = s.data();
    const char *e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e) return std::nullopt;
    return v;
}

} // namespace detail

/// Loads a categorical dataset from delimiter-separated text. Vocabularies
/// and class names follow first appearance in file order.
inline Dataset load_csv(std::istream &in, bool has_header = true,
                        std::optional<std::size_t> class_column = std::nullopt) {
    auto t = detail::parse_csv(in, has_header, class_column);
    Dataset d;
    std::size_t width = t.column_names.size();
    std::vector<std::unordered_map<std::string, std::uint32_t>> vocab_index(width);
    std::unordered_map<std::string, std::uint32_t> class_index;
    for (std::size_t c = 0; c < width; ++c)
        if (c != t.class_col)
            d.attributes.push_back({t.column_names[c], {}, AttributeSchema::Kind::categorical});

    for (auto &cells : t.cells) {
        std::vector<std::uint32_t> row;
        row.reserve(width - 1);
        std::size_t a = 0;
        for (std::size_t c = 0; c < width; ++c) {
            if (c == t.class_col) {
                auto [it, fresh] = class_index.try_emplace(
                    cells[c], static_cast<std::uint32_t>(d.class_names.size()));
                if (fresh) d.class_names.push_back(cells[c]);
                d.classes.push_back(it->second);
            } else {
                auto &vi = vocab_index[c];
                auto [it, fresh] = vi.try_emplace(
                    cells[c], static_cast<std::uint32_t>(d.attributes[a].values.size()));
                if (fresh) d.attributes[a].values.push_back(cells[c]);
                row.push_back(it->second);
                ++a;
            }
        }
        d.rows.push_back(std::move(row));
    }
    return d;
}

/// Loads a table whose attribute columns are all numeric. The class column
/// stays textual.
inline NumericTable load_numeric_csv(std::istream &in, bool has_header = true,
                                     std::optional<std::size_t> class_column = std::nullopt) {
    auto t = detail::parse_csv(in, has_header, class_column);
    NumericTable nt;
    std::size_t width = t.column_names.size();
    for (std::size_t c = 0; c < width; ++c)
        if (c != t.class_col) nt.attribute_names.push_back(t.column_names[c]);
    for (std::size_t r = 0; r < t.cells.size(); ++r) {
        std::vector<double> row;
        for (std::size_t c = 0; c < width; ++c) {
            if (c == t.class_col) {
                nt.class_labels.push_back(t.cells[r][c]);
                continue;
            }
            auto v = detail::parse_number(t.cells[r][c]);
            if (!v)
                throw std::runtime_error("csv: non-numeric cell '" + t.cells[r][c] +
                                         "' at data row " + std::to_string(r + 1));
            row.push_back(*v);
        }
        nt.rows.push_back(std::move(row));
    }
    return nt;
}

/// Equal-width binning over the full table. Edges span [min, max] per
/// attribute; v maps to floor((v - min) / width), with v == max assigned to
/// the last bin. A constant column maps every value to bin 0.
inline std::pair<Dataset, DiscretizationSpec> discretize(const NumericTable &t,
                                                         std::size_t n_bins) {
    if (n_bins == 0) throw std::invalid_argument("discretize: n_bins must be >= 1");
    if (t.rows.empty()) throw std::invalid_argument("discretize: empty table");
    std::size_t n_attr = t.attribute_names.size();

    DiscretizationSpec spec;
    spec.n_bins = n_bins;
    Dataset d;
    for (std::size_t a = 0; a < n_attr; ++a) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (auto &row : t.rows) {
            lo = std::min(lo, row[a]);
            hi = std::max(hi, row[a]);
        }
        // Constant column: keep edges strictly increasing with unit width.
        double width = (hi > lo) ? (hi - lo) / static_cast<double>(n_bins) : 1.0;
        std::vector<double> edges(n_bins + 1);
        for (std::size_t b = 0; b <= n_bins; ++b)
            edges[b] = lo + width * static_cast<double>(b);
        spec.edges.push_back(std::move(edges));

        AttributeSchema schema{t.attribute_names[a], {}, AttributeSchema::Kind::binned};
        for (std::size_t b = 0; b < n_bins; ++b)
            schema.values.push_back("bin" + std::to_string(b));
        d.attributes.push_back(std::move(schema));
    }

    std::unordered_map<std::string, std::uint32_t> class_index;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::vector<std::uint32_t> row(n_attr);
        for (std::size_t a = 0; a < n_attr; ++a) {
            const auto &edges = spec.edges[a];
            double v = t.rows[r][a];
            double width = edges[1] - edges[0];
            auto bin = static_cast<std::int64_t>(std::floor((v - edges.front()) / width));
            bin = std::clamp<std::int64_t>(bin, 0, static_cast<std::int64_t>(n_bins) - 1);
            row[a] = static_cast<std::uint32_t>(bin);
        }
        d.rows.push_back(std::move(row));
        auto [it, fresh] = class_index.try_emplace(
            t.class_labels[r], static_cast<std::uint32_t>(d.class_names.size()));
        if (fresh) d.class_names.push_back(t.class_labels[r]);
        d.classes.push_back(it->second);
    }
    return {std::move(d), std::move(spec)};
}

namespace detail {

/// The documented shuffle: std::mt19937 seeded with spec.seed; for i from
/// n-1 down to 1, j = rng() % (i + 1), swap(order[i], order[j]). Test rows
/// are the last round(test_fraction * n) entries of the shuffled order.
inline std::vector<std::size_t> shuffled_order(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t j = rng() % (i + 1);
        std::swap(order[i], order[j]);
    }
    return order;
}

} // namespace detail

/// Seeded uniform train/test split. Both halves share the parent's schemas
/// and class names; no re-encoding happens.
inline std::pair<Dataset, Dataset> split(const Dataset &d, const SplitSpec &spec) {
    if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
        throw std::invalid_argument("split: test_fraction must be in (0,1)");
    if (d.n_rows() < 2) throw std::invalid_argument("split: need at least 2 rows");

    auto order = detail::shuffled_order(d.n_rows(), spec.seed);
    auto n_test = static_cast<std::size_t>(
        std::llround(spec.test_fraction * static_cast<double>(d.n_rows())));
    n_test = std::clamp<std::size_t>(n_test, 1, d.n_rows() - 1);

    Dataset train, test;
    train.attributes = test.attributes = d.attributes;
    train.class_names = test.class_names = d.class_names;
    std::size_t n_train = d.n_rows() - n_test;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Dataset &dst = (i < n_train) ? train : test;
        dst.rows.push_back(d.rows[order[i]]);
        dst.classes.push_back(d.classes[order[i]]);
    }
    return {std::move(train), std::move(test)};
}

inline DatasetStats dataset_stats(const Dataset &d) {
    DatasetStats s;
    s.n_examples = d.n_rows();
    s.n_attributes = d.n_attributes();
    s.n_classes = d.n_classes();
    for (std::size_t a = 0; a < d.n_attributes(); ++a) {
        std::vector<bool> seen(d.attributes[a].values.size(), false);
        for (auto &row : d.rows) seen[row[a]] = true;
        s.n_selectors += static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
    }
    return s;
}

/// The built-in `paper-example` fixture: three binary attributes, five rows,
/// four classes.
inline Dataset paper_example() {
    static const char *csv =
        "A,B,C,Class\n"
        "A1,B1,C1,0\n"
        "A1,B1,C1,0\n"
        "A2,B1,C2,1\n"
        "A2,B2,C1,2\n"
        "A2,B2,C2,3\n";
    std::istringstream in(csv);
    return load_csv(in, true);
}

} // namespace rrules

#endif
