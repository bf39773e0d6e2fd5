#include "polyperm/realizability.hpp"

#include "polyperm/simplex.hpp"

#include <unordered_map>

namespace polyperm {

bool is_polystochastic(const HyperMatrix &m)
{
    const Shape &shape = m.shape();
    const std::size_t n = static_cast<std::size_t>(shape.n());
    for (int dir = 0; dir < shape.d(); ++dir) {
        const std::size_t stride = shape.stride(dir);
        bool ok = true;
        for_each_line(shape, dir, [&](std::size_t first) {
            if (!ok)
                return;
            Rational sum = 0;
            for (std::size_t k = 0; k < n; ++k)
                sum += m.at(first + k * stride);
            ok = sum == 1;
        });
        if (!ok)
            return false;
    }
    return true;
}

std::optional<Realization> realize_polystochastic(const SupportSet &s)
{
    const Shape &shape = s.shape();
    if (!every_line_count_within(s, 1, shape.n()))
        return std::nullopt;

    // Variables: y_c >= 0 for every member c, then t >= 0, with entry x_c = t + y_c.
    // Each line: sum of its y_c + (members on the line) * t = 1. Maximize t.
    const auto members = s.offsets();
    std::unordered_map<std::size_t, std::size_t> column;
    for (std::size_t k = 0; k < members.size(); ++k)
        column.emplace(members[k], k);
    const std::size_t vars = members.size() + 1;
    const std::size_t n = static_cast<std::size_t>(shape.n());

    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int dir = 0; dir < shape.d(); ++dir) {
        const std::size_t stride = shape.stride(dir);
        for_each_line(shape, dir, [&](std::size_t first) {
            std::vector<Rational> row(vars, 0);
            long on_line = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t off = first + k * stride;
                if (s.test(off)) {
                    row[column.at(off)] = 1;
                    ++on_line;
                }
            }
            row[vars - 1] = on_line;
            A.push_back(std::move(row));
            b.emplace_back(1);
        });
    }
    std::vector<Rational> c(vars, 0);
    c[vars - 1] = 1;

    const LpResult lp = maximize(A, b, c);
    if (lp.status != LpResult::Status::optimal || sgn(lp.value) <= 0)
        return std::nullopt;
    HyperMatrix m(shape);
    for (std::size_t k = 0; k < members.size(); ++k)
        m.set(members[k], lp.x[vars - 1] + lp.x[k]);
    return Realization{std::move(m)};
}

std::optional<HyperMatrix> realize_sesquialteral(const SupportSet &s)
{
    const Shape &shape = s.shape();
    if (!every_line_count_within(s, 1, 2))
        return std::nullopt;
    HyperMatrix m(shape);
    bool ok = true;
    const Rational half(1, 2);
    s.for_each([&](std::size_t off) {
        if (!ok)
            return;
        const int first = s.line_count(off, 0);
        for (int dir = 1; dir < shape.d(); ++dir)
            if (s.line_count(off, dir) != first) {
                ok = false;
                return;
            }
        m.set(off, first == 1 ? Rational(1) : half);
    });
    if (!ok)
        return std::nullopt;
    return m;
}

bool is_double_permutation_support(const SupportSet &s)
{
    return every_line_count_within(s, 2, 2);
}

} // namespace polyperm
