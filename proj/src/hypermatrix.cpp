#include "polyperm/hypermatrix.hpp"

#include "polyperm/errors.hpp"

namespace polyperm {

HyperMatrix::HyperMatrix(Shape shape) : shape_(std::move(shape)), entries_(shape_.cell_count(), Rational(0)) {}

HyperMatrix::HyperMatrix(Shape shape, std::vector<Rational> entries) : shape_(std::move(shape)), entries_(std::move(entries))
{
    if (entries_.size() != shape_.cell_count())
        throw ShapeError("expected " + std::to_string(shape_.cell_count()) + " entries for " + shape_.to_string() +
                         ", got " + std::to_string(entries_.size()));
    for (auto &e : entries_) {
        e.canonicalize();
        if (sgn(e) < 0)
            throw MalformedInput("negative entry " + to_string(e) + " in a nonnegative matrix");
    }
}

HyperMatrix HyperMatrix::indicator(const SupportSet &support)
{
    HyperMatrix m(support.shape());
    support.for_each([&](std::size_t off) { m.entries_[off] = 1; });
    return m;
}

HyperMatrix HyperMatrix::constant(Shape shape, const Rational &value)
{
    return HyperMatrix(shape, std::vector<Rational>(shape.cell_count(), value));
}

void HyperMatrix::set(std::size_t offset, const Rational &value)
{
    if (sgn(value) < 0)
        throw MalformedInput("negative entry " + to_string(value) + " in a nonnegative matrix");
    entries_.at(offset) = value;
}

SupportSet HyperMatrix::support() const
{
    SupportSet s(shape_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (sgn(entries_[i]) != 0)
            s.set(i);
    return s;
}

Rational weight(const HyperMatrix &m)
{
    Rational total = 0;
    for (const auto &e : m.entries())
        total += e;
    return total;
}

std::size_t weight(const SupportSet &s)
{
    return s.count();
}

void check_selector(const Shape &shape, const PlaneSelector &sel)
{
    if (sel.fixed_positions.size() != sel.fixed_values.size())
        throw ShapeError("plane selector lists differ in length");
    if (static_cast<int>(sel.fixed_positions.size()) >= shape.d())
        throw ShapeError("plane selector fixes every position of " + shape.to_string());
    for (std::size_t i = 0; i < sel.fixed_positions.size(); ++i) {
        const int p = sel.fixed_positions[i];
        if (p < 0 || p >= shape.d())
            throw ShapeError("plane selector position " + std::to_string(p) + " out of range");
        if (i && p <= sel.fixed_positions[i - 1])
            throw ShapeError("plane selector positions must be strictly increasing");
        if (sel.fixed_values[i] < 0 || sel.fixed_values[i] >= shape.n())
            throw ShapeError("plane selector value out of range");
    }
}

std::vector<std::size_t> plane_offsets(const Shape &shape, const PlaneSelector &sel)
{
    check_selector(shape, sel);
    std::size_t base = 0;
    std::vector<bool> fixed(static_cast<std::size_t>(shape.d()), false);
    for (std::size_t i = 0; i < sel.fixed_positions.size(); ++i) {
        fixed[static_cast<std::size_t>(sel.fixed_positions[i])] = true;
        base += static_cast<std::size_t>(sel.fixed_values[i]) * shape.stride(sel.fixed_positions[i]);
    }
    std::vector<std::size_t> free_strides;
    for (int p = 0; p < shape.d(); ++p)
        if (!fixed[static_cast<std::size_t>(p)])
            free_strides.push_back(shape.stride(p));

    const std::size_t n = static_cast<std::size_t>(shape.n());
    std::size_t count = 1;
    for (std::size_t i = 0; i < free_strides.size(); ++i)
        count *= n;
    std::vector<std::size_t> out(count);
    std::vector<std::size_t> digit(free_strides.size(), 0);
    std::size_t off = base;
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = off;
        for (std::size_t j = free_strides.size(); j-- > 0;) {
            if (++digit[j] < n) {
                off += free_strides[j];
                break;
            }
            digit[j] = 0;
            off -= (n - 1) * free_strides[j];
        }
    }
    return out;
}

HyperMatrix extract_plane(const HyperMatrix &m, const PlaneSelector &sel)
{
    const auto offs = plane_offsets(m.shape(), sel);
    Shape sub(m.shape().d() - static_cast<int>(sel.fixed_positions.size()), m.shape().n());
    std::vector<Rational> entries;
    entries.reserve(offs.size());
    for (auto o : offs)
        entries.push_back(m.at(o));
    return HyperMatrix(sub, std::move(entries));
}

SupportSet extract_plane(const SupportSet &s, const PlaneSelector &sel)
{
    const auto offs = plane_offsets(s.shape(), sel);
    SupportSet out(Shape(s.shape().d() - static_cast<int>(sel.fixed_positions.size()), s.shape().n()));
    for (std::size_t k = 0; k < offs.size(); ++k)
        if (s.test(offs[k]))
            out.set(k);
    return out;
}

void embed_plane(HyperMatrix &target, const PlaneSelector &sel, const HyperMatrix &plane)
{
    const auto offs = plane_offsets(target.shape(), sel);
    const Shape expected(target.shape().d() - static_cast<int>(sel.fixed_positions.size()), target.shape().n());
    if (!(plane.shape() == expected))
        throw ShapeError("plane of shape " + plane.shape().to_string() + " does not fit selector (" +
                         expected.to_string() + ")");
    for (std::size_t k = 0; k < offs.size(); ++k)
        target.set(offs[k], plane.at(k));
}

namespace {

Shape stacked_shape(const Shape &plane, std::size_t count)
{
    if (static_cast<int>(count) != plane.n())
        throw ShapeError("stacking needs exactly n hyperplanes");
    return Shape(plane.d() + 1, plane.n());
}

} // namespace

HyperMatrix stack_hyperplanes(const std::vector<HyperMatrix> &planes, int direction)
{
    if (planes.empty())
        throw ShapeError("no hyperplanes to stack");
    HyperMatrix out(stacked_shape(planes.front().shape(), planes.size()));
    for (std::size_t v = 0; v < planes.size(); ++v)
        embed_plane(out, PlaneSelector{{direction}, {static_cast<int>(v)}}, planes[v]);
    return out;
}

SupportSet stack_hyperplanes(const std::vector<SupportSet> &planes, int direction)
{
    if (planes.empty())
        throw ShapeError("no hyperplanes to stack");
    SupportSet out(stacked_shape(planes.front().shape(), planes.size()));
    for (std::size_t v = 0; v < planes.size(); ++v) {
        if (!(planes[v].shape() == planes.front().shape()))
            throw ShapeError("hyperplanes of different shapes");
        const auto offs = plane_offsets(out.shape(), PlaneSelector{{direction}, {static_cast<int>(v)}});
        for (std::size_t k = 0; k < offs.size(); ++k)
            if (planes[v].test(k))
                out.set(offs[k]);
    }
    return out;
}

} // namespace polyperm
