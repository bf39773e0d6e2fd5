#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace polyperm {

inline constexpr std::size_t default_cell_budget = std::size_t{1} << 24;

/// Dimension d and order n of a hypermatrix. Positions and coordinate values are 0-based.
class Shape
{
public:
    /// Throws ShapeError for d < 1 or n outside 2..5, CapacityError when n^d exceeds the budget.
    Shape(int d, int n = 4, std::size_t cell_budget = default_cell_budget);

    int d() const { return d_; }
    int n() const { return n_; }
    std::size_t cell_count() const { return cells_; }

    /// Offset step of a position in the lexicographic cell order (last position fastest).
    std::size_t stride(int position) const { return strides_[static_cast<std::size_t>(position)]; }

    friend bool operator==(const Shape &a, const Shape &b) { return a.d_ == b.d_ && a.n_ == b.n_; }

    std::string to_string() const;

private:
    int d_;
    int n_;
    std::size_t cells_;
    std::vector<std::size_t> strides_;
};

/// A cell of I_n^d.
struct Index
{
    std::vector<int> coords;

    Index() = default;
    explicit Index(std::vector<int> c) : coords(std::move(c)) {}
    Index(std::initializer_list<int> c) : coords(c) {}

    int size() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    int &operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

    friend auto operator<=>(const Index &, const Index &) = default;
    friend bool operator==(const Index &, const Index &) = default;

    std::string to_string() const;
};

/// Throws ShapeError unless `idx` has d coordinates, each below n.
void check_index(const Shape &shape, const Index &idx);

std::size_t offset_of(const Shape &shape, const Index &idx);
Index index_of(const Shape &shape, std::size_t offset);

/// Number of positions where the two indices differ.
int hamming(const Index &a, const Index &b);

/// The n cells agreeing with `idx` off `direction`, in coordinate order.
std::vector<Index> line_through(const Shape &shape, const Index &idx, int direction);

/// Offsets of the cells of the line through `offset` in `direction`.
std::vector<std::size_t> line_offsets(const Shape &shape, std::size_t offset, int direction);

/// Calls f(first_offset) once per line of the given direction; the line's cells are
/// first_offset + k * shape.stride(direction) for k = 0..n-1.
template <class F>
void for_each_line(const Shape &shape, int direction, F &&f)
{
    const std::size_t stride = shape.stride(direction);
    const std::size_t block = stride * static_cast<std::size_t>(shape.n());
    for (std::size_t hi = 0; hi < shape.cell_count(); hi += block)
        for (std::size_t lo = 0; lo < stride; ++lo)
            f(hi + lo);
}

} // namespace polyperm
