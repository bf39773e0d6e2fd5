#pragma once

#include "polyperm/rational.hpp"
#include "polyperm/shape.hpp"
#include "polyperm/support_set.hpp"

#include <vector>

namespace polyperm {

/// Dense d-dimensional array of nonnegative exact rationals, lexicographic cell order.
class HyperMatrix
{
public:
    /// Zero matrix.
    explicit HyperMatrix(Shape shape);
    /// Throws ShapeError on a wrong entry count and MalformedInput on a negative entry.
    HyperMatrix(Shape shape, std::vector<Rational> entries);

    /// Entries 1 on the support, 0 elsewhere.
    static HyperMatrix indicator(const SupportSet &support);
    static HyperMatrix constant(Shape shape, const Rational &value);

    const Shape &shape() const { return shape_; }
    const std::vector<Rational> &entries() const { return entries_; }

    const Rational &at(std::size_t offset) const { return entries_[offset]; }
    const Rational &at(const Index &idx) const { return entries_[offset_of(shape_, idx)]; }
    /// Throws MalformedInput on a negative value.
    void set(std::size_t offset, const Rational &value);

    SupportSet support() const;

    friend bool operator==(const HyperMatrix &a, const HyperMatrix &b)
    {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }

private:
    Shape shape_;
    std::vector<Rational> entries_;
};

/// Sum of all entries.
Rational weight(const HyperMatrix &m);
/// Number of members.
std::size_t weight(const SupportSet &s);

/// Fixes `fixed_positions` (strictly increasing) to `fixed_values`.
struct PlaneSelector
{
    std::vector<int> fixed_positions;
    std::vector<int> fixed_values;
};

/// Throws ShapeError when the selector does not fit the shape.
void check_selector(const Shape &shape, const PlaneSelector &sel);

/// The plane cut out by the selector; free positions keep their relative order.
/// Fixing every position is rejected (a plane has dimension at least 1).
HyperMatrix extract_plane(const HyperMatrix &m, const PlaneSelector &sel);
SupportSet extract_plane(const SupportSet &s, const PlaneSelector &sel);

/// Writes `plane` into the cells of `target` selected by `sel`.
void embed_plane(HyperMatrix &target, const PlaneSelector &sel, const HyperMatrix &plane);

/// Stacks n hyperplanes (each of dimension d-1) along `direction`.
HyperMatrix stack_hyperplanes(const std::vector<HyperMatrix> &planes, int direction = 0);
SupportSet stack_hyperplanes(const std::vector<SupportSet> &planes, int direction = 0);

/// Offsets (in the parent) of the cells of the plane, in the plane's own cell order.
std::vector<std::size_t> plane_offsets(const Shape &shape, const PlaneSelector &sel);

} // namespace polyperm
