#include "polyperm/shape.hpp"

#include "polyperm/errors.hpp"

#include <sstream>

namespace polyperm {

Shape::Shape(int d, int n, std::size_t cell_budget) : d_(d), n_(n), cells_(1)
{
    if (d < 1)
        throw ShapeError("dimension must be at least 1, got " + std::to_string(d));
    if (n < 2 || n > 5)
        throw ShapeError("order must lie in 2..5, got " + std::to_string(n));
    for (int i = 0; i < d; ++i) {
        if (cells_ > cell_budget / static_cast<std::size_t>(n))
            throw CapacityError("shape d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                " exceeds the cell budget of " + std::to_string(cell_budget));
        cells_ *= static_cast<std::size_t>(n);
    }
    strides_.assign(static_cast<std::size_t>(d), 1);
    for (int i = d - 2; i >= 0; --i)
        strides_[static_cast<std::size_t>(i)] = strides_[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(n);
}

std::string Shape::to_string() const
{
    return "d=" + std::to_string(d_) + " n=" + std::to_string(n_);
}

std::string Index::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords.size(); ++i)
        out << (i ? "," : "") << coords[i];
    out << ')';
    return out.str();
}

void check_index(const Shape &shape, const Index &idx)
{
    if (idx.size() != shape.d())
        throw ShapeError("index " + idx.to_string() + " does not have " + std::to_string(shape.d()) + " coordinates");
    for (int c : idx.coords)
        if (c < 0 || c >= shape.n())
            throw ShapeError("index " + idx.to_string() + " has a coordinate outside 0.." + std::to_string(shape.n() - 1));
}

std::size_t offset_of(const Shape &shape, const Index &idx)
{
    check_index(shape, idx);
    std::size_t off = 0;
    for (int i = 0; i < shape.d(); ++i)
        off += static_cast<std::size_t>(idx[i]) * shape.stride(i);
    return off;
}

Index index_of(const Shape &shape, std::size_t offset)
{
    if (offset >= shape.cell_count())
        throw ShapeError("cell offset " + std::to_string(offset) + " out of range for " + shape.to_string());
    Index idx(std::vector<int>(static_cast<std::size_t>(shape.d())));
    for (int i = shape.d() - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(offset % static_cast<std::size_t>(shape.n()));
        offset /= static_cast<std::size_t>(shape.n());
    }
    return idx;
}

int hamming(const Index &a, const Index &b)
{
    if (a.size() != b.size())
        throw ShapeError("hamming distance of indices of different length");
    int dist = 0;
    for (int i = 0; i < a.size(); ++i)
        dist += a[i] != b[i];
    return dist;
}

std::vector<Index> line_through(const Shape &shape, const Index &idx, int direction)
{
    check_index(shape, idx);
    if (direction < 0 || direction >= shape.d())
        throw ShapeError("direction " + std::to_string(direction) + " out of range for " + shape.to_string());
    std::vector<Index> line;
    line.reserve(static_cast<std::size_t>(shape.n()));
    for (int v = 0; v < shape.n(); ++v) {
        Index cell = idx;
        cell[direction] = v;
        line.push_back(std::move(cell));
    }
    return line;
}

std::vector<std::size_t> line_offsets(const Shape &shape, std::size_t offset, int direction)
{
    if (direction < 0 || direction >= shape.d())
        throw ShapeError("direction " + std::to_string(direction) + " out of range for " + shape.to_string());
    const std::size_t stride = shape.stride(direction);
    const std::size_t coord = (offset / stride) % static_cast<std::size_t>(shape.n());
    const std::size_t base = offset - coord * stride;
    std::vector<std::size_t> out(static_cast<std::size_t>(shape.n()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = base + k * stride;
    return out;
}

} // namespace polyperm
