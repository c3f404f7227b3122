#ifndef RRULES_ROW_SET_HPP
#define RRULES_ROW_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rrules {

/// Fixed-capacity set of row indices backed by a dense bitmask.
/// All binary operations require both operands to have the same capacity.
class RowSet {
  public:
    RowSet() = default;

    explicit RowSet(std::size_t n_rows)
        : n_rows_(n_rows), words_((n_rows + 63) / 64, 0) {}

    static RowSet none(std::size_t n_rows) { return RowSet(n_rows); }

    static RowSet all(std::size_t n_rows) {
        RowSet s(n_rows);
        for (auto &w : s.words_) w = ~std::uint64_t{0};
        s.clear_tail();
        return s;
    }

    std::size_t capacity() const { return n_rows_; }

    void insert(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void erase(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool contains(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    RowSet &operator&=(const RowSet &rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
        return *this;
    }

    RowSet &operator|=(const RowSet &rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
        return *this;
    }

    /// Set difference: removes every row present in rhs.
    RowSet &operator-=(const RowSet &rhs) {
        check_same(rhs);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~rhs.words_[i];
        return *this;
    }

    friend RowSet operator&(RowSet lhs, const RowSet &rhs) { return lhs &= rhs; }
    friend RowSet operator|(RowSet lhs, const RowSet &rhs) { return lhs |= rhs; }
    friend RowSet operator-(RowSet lhs, const RowSet &rhs) { return lhs -= rhs; }

    bool operator==(const RowSet &rhs) const = default;

    /// True iff every row of this set is also in rhs.
    bool is_subset_of(const RowSet &rhs) const {
        check_same(rhs);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~rhs.words_[i]) return false;
        return true;
    }

    bool intersects(const RowSet &rhs) const {
        check_same(rhs);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & rhs.words_[i]) return true;
        return false;
    }

    /// Index of the lowest row in the set; capacity() if empty.
    std::size_t first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return n_rows_;
    }

    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

  private:
    void check_index(std::size_t i) const {
        if (i >= n_rows_) throw std::out_of_range("RowSet: row index out of range");
    }

    void check_same(const RowSet &rhs) const {
        if (n_rows_ != rhs.n_rows_)
            throw std::invalid_argument("RowSet: capacity mismatch");
    }

    void clear_tail() {
        if (n_rows_ & 63) words_.back() &= (std::uint64_t{1} << (n_rows_ & 63)) - 1;
    }

    std::size_t n_rows_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rrules

#endif
