#pragma once

#include "polyperm/shape.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polyperm {

/// A subset of I_n^d stored as a bit-vector in lexicographic cell order.
///
/// Ordering compares the bit sequences cell by cell with 0 < 1, so the set whose
/// first differing cell is absent is the smaller one.
class SupportSet
{
public:
    explicit SupportSet(Shape shape);
    SupportSet(Shape shape, const std::vector<Index> &cells);

    static SupportSet full(Shape shape);
    /// Only for shapes with at most 64 cells.
    static SupportSet from_word(Shape shape, std::uint64_t bits);

    const Shape &shape() const { return shape_; }
    std::size_t cell_count() const { return shape_.cell_count(); }

    bool test(std::size_t offset) const { return (words_[offset >> 6] >> (offset & 63)) & 1u; }
    void set(std::size_t offset) { words_[offset >> 6] |= std::uint64_t{1} << (offset & 63); }
    void reset(std::size_t offset) { words_[offset >> 6] &= ~(std::uint64_t{1} << (offset & 63)); }
    void assign(std::size_t offset, bool on) { on ? set(offset) : reset(offset); }

    bool contains(const Index &idx) const { return test(offset_of(shape_, idx)); }
    void insert(const Index &idx) { set(offset_of(shape_, idx)); }
    void erase(const Index &idx) { reset(offset_of(shape_, idx)); }

    std::size_t count() const;
    bool empty() const;

    /// Calls f(offset) for every member in increasing order.
    template <class F>
    void for_each(F &&f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> offsets() const;
    std::vector<Index> indices() const;

    /// Number of members on the line through `offset` in `direction`.
    int line_count(std::size_t offset, int direction) const;

    bool is_subset_of(const SupportSet &other) const;

    SupportSet &operator|=(const SupportSet &other);
    SupportSet &operator&=(const SupportSet &other);
    SupportSet &operator^=(const SupportSet &other);
    SupportSet &operator-=(const SupportSet &other);
    SupportSet complement() const;

    friend SupportSet operator|(SupportSet a, const SupportSet &b) { return a |= b; }
    friend SupportSet operator&(SupportSet a, const SupportSet &b) { return a &= b; }
    friend SupportSet operator^(SupportSet a, const SupportSet &b) { return a ^= b; }
    friend SupportSet operator-(SupportSet a, const SupportSet &b) { return a -= b; }

    friend bool operator==(const SupportSet &a, const SupportSet &b)
    {
        return a.shape_ == b.shape_ && a.words_ == b.words_;
    }
    friend std::strong_ordering operator<=>(const SupportSet &a, const SupportSet &b);

    const std::vector<std::uint64_t> &words() const { return words_; }
    std::uint64_t word() const { return words_.front(); }

    std::size_t hash() const;

    /// One index per line, e.g. "(0,0,0) (0,1,3)".
    std::string to_string() const;

private:
    void require_same_shape(const SupportSet &other) const;
    void clear_padding();

    Shape shape_;
    std::vector<std::uint64_t> words_;
};

/// True iff every line of every direction holds between `lo` and `hi` members.
bool every_line_count_within(const SupportSet &s, int lo, int hi);

/// Support of a multidimensional permutation: every line holds exactly one member.
inline bool is_permutation_support(const SupportSet &s)
{
    return every_line_count_within(s, 1, 1);
}

} // namespace polyperm

template <>
struct std::hash<polyperm::SupportSet>
{
    std::size_t operator()(const polyperm::SupportSet &s) const noexcept { return s.hash(); }
};
