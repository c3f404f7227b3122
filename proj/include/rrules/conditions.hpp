#ifndef RRULES_CONDITIONS_HPP
#define RRULES_CONDITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrules/dataset.hpp"
#include "rrules/row_set.hpp"

namespace rrules {

/// One Attribute-Value pair. Selectors are totally ordered by attribute
/// index, then value index; every enumeration in the toolkit follows that
/// order.
struct Selector {
    std::uint32_t attribute = 0;
    std::uint32_t value = 0;

    auto operator<=>(const Selector &) const = default;
};

/// Conjunction of selectors over pairwise-distinct attributes, kept sorted
/// in selector order. Equality is selector-set equality.
class Condition {
  public:
    Condition() = default;

    explicit Condition(std::vector<Selector> selectors) : selectors_(std::move(selectors)) {
        if (selectors_.empty())
            throw std::invalid_argument("Condition: needs at least one selector");
        std::sort(selectors_.begin(), selectors_.end());
        for (std::size_t i = 1; i < selectors_.size(); ++i)
            if (selectors_[i].attribute == selectors_[i - 1].attribute)
                throw std::invalid_argument("Condition: duplicate attribute");
    }

    const std::vector<Selector> &selectors() const { return selectors_; }
    std::size_t size() const { return selectors_.size(); }

    bool operator==(const Condition &) const = default;

    /// True iff every selector of this condition appears in other.
    bool is_subset_of(const Condition &other) const {
        return std::includes(other.selectors_.begin(), other.selectors_.end(),
                             selectors_.begin(), selectors_.end());
    }

    /// True iff the row satisfies every selector.
    bool matches_row(std::span<const std::uint32_t> row) const {
        for (const auto &s : selectors_)
            if (row[s.attribute] != s.value) return false;
        return true;
    }

    /// `IF attr1 is val1 AND attr2 is val2` with names from the schema.
    std::string render(const Dataset &d) const {
        std::string out = "IF ";
        for (std::size_t i = 0; i < selectors_.size(); ++i) {
            if (i) out += " AND ";
            const auto &s = selectors_[i];
            out += d.attributes[s.attribute].name;
            out += " is ";
            out += d.attributes[s.attribute].values[s.value];
        }
        return out;
    }

  private:
    std::vector<Selector> selectors_;
};

/// Precomputed per-selector and per-class row masks for one dataset.
class MatchIndex {
  public:
    explicit MatchIndex(const Dataset &d) : n_rows_(d.n_rows()) {
        selector_masks_.resize(d.n_attributes());
        for (std::size_t a = 0; a < d.n_attributes(); ++a)
            selector_masks_[a].assign(d.attributes[a].values.size(), RowSet(n_rows_));
        class_masks_.assign(d.n_classes(), RowSet(n_rows_));
        for (std::size_t r = 0; r < n_rows_; ++r) {
            for (std::size_t a = 0; a < d.n_attributes(); ++a)
                selector_masks_[a][d.rows[r][a]].insert(r);
            class_masks_[d.classes[r]].insert(r);
        }
    }

    std::size_t n_rows() const { return n_rows_; }

    const RowSet &mask(const Selector &s) const {
        return selector_masks_[s.attribute][s.value];
    }

    const RowSet &class_mask(std::uint32_t c) const { return class_masks_[c]; }

    /// Rows of `within` matching the condition.
    RowSet match(const Condition &c, const RowSet &within) const {
        RowSet m = within;
        for (const auto &s : c.selectors()) m &= mask(s);
        return m;
    }

  private:
    std::size_t n_rows_;
    std::vector<std::vector<RowSet>> selector_masks_; // [attribute][value]
    std::vector<RowSet> class_masks_;
};

/// All (attribute, value) pairs occurring in at least one listed row, in
/// selector order. Empty input rows give an empty list.
inline std::vector<Selector> selectors_present(const Dataset &d, const RowSet &rows) {
    std::vector<std::vector<bool>> seen(d.n_attributes());
    for (std::size_t a = 0; a < d.n_attributes(); ++a)
        seen[a].assign(d.attributes[a].values.size(), false);
    rows.for_each([&](std::size_t r) {
        for (std::size_t a = 0; a < d.n_attributes(); ++a) seen[a][d.rows[r][a]] = true;
    });
    std::vector<Selector> out;
    for (std::uint32_t a = 0; a < d.n_attributes(); ++a)
        for (std::uint32_t v = 0; v < seen[a].size(); ++v)
            if (seen[a][v]) out.push_back({a, v});
    return out;
}

namespace detail {

// Depth-first walk over size-n_c combinations of the selector pool in
// lexicographic order by pool position, skipping same-attribute picks.
// The pool is sorted, so a duplicate attribute can only be the previous
// pick's. Visitor returns false to abort the whole enumeration.
template <typename F>
bool enumerate_rec(std::span<const Selector> pool, std::size_t n_c,
                   std::vector<Selector> &picked, std::size_t next, F &&visit) {
    if (picked.size() == n_c) return visit(std::span<const Selector>(picked));
    for (std::size_t i = next; i < pool.size(); ++i) {
        if (!picked.empty() && pool[i].attribute == picked.back().attribute) continue;
        picked.push_back(pool[i]);
        bool keep_going = enumerate_rec(pool, n_c, picked, i + 1, visit);
        picked.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

} // namespace detail

/// Streams every size-n_c combination of the pool whose attributes are
/// pairwise distinct, lexicographically by pool position. The visitor gets
/// a span of selectors valid only during the call and returns false to stop.
template <typename F>
void for_each_condition(std::span<const Selector> pool, std::size_t n_c, F &&visit) {
    if (n_c == 0) throw std::invalid_argument("for_each_condition: n_c must be >= 1");
    std::vector<Selector> picked;
    picked.reserve(n_c);
    detail::enumerate_rec(pool, n_c, picked, 0, visit);
}

/// Materialized form of the stream above.
inline std::vector<Condition> enumerate_conditions(std::span<const Selector> pool,
                                                   std::size_t n_c) {
    std::vector<Condition> out;
    for_each_condition(pool, n_c, [&](std::span<const Selector> sels) {
        out.emplace_back(std::vector<Selector>(sels.begin(), sels.end()));
        return true;
    });
    return out;
}

} // namespace rrules

#endif
