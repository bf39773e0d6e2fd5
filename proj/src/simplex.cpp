#include "polyperm/simplex.hpp"

#include "polyperm/errors.hpp"

namespace polyperm {

namespace {

class Tableau
{
public:
    Tableau(const std::vector<std::vector<Rational>> &A, const std::vector<Rational> &b, std::size_t vars)
        : m_(A.size()), vars_(vars), cols_(vars + A.size()), t_(A.size() + 1, std::vector<Rational>(cols_ + 1, 0)),
          basis_(A.size()), active_(A.size(), true)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < vars_; ++j)
                t_[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
            t_[i][vars_ + i] = 1;
            t_[i][cols_] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = vars_ + i;
        }
    }

    /// Phase one: drive the artificial variables to zero. Returns false when infeasible.
    bool phase_one()
    {
        auto &obj = t_[m_];
        for (auto &e : obj)
            e = 0;
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j <= cols_; ++j)
                if (j < vars_ || j == cols_)
                    obj[j] -= t_[i][j];
        run(cols_);
        if (sgn(t_[m_][cols_]) != 0)
            return false;

        // Pivot remaining zero-level artificials out of the basis; rows without an original
        // nonzero are redundant and are switched off.
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < vars_)
                continue;
            std::size_t col = vars_;
            for (std::size_t j = 0; j < vars_; ++j)
                if (sgn(t_[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col < vars_)
                pivot(i, col);
            else
                active_[i] = false;
        }
        return true;
    }

    /// Phase two on the original columns. Returns false when unbounded.
    bool phase_two(const std::vector<Rational> &c)
    {
        auto &obj = t_[m_];
        for (auto &e : obj)
            e = 0;
        for (std::size_t j = 0; j < vars_; ++j)
            obj[j] = -c[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (!active_[i] || basis_[i] >= vars_)
                continue;
            const Rational cb = c[basis_[i]];
            if (sgn(cb) == 0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(t_[i][j]) != 0)
                    obj[j] += cb * t_[i][j];
        }
        return run(vars_);
    }

    Rational value() const { return t_[m_][cols_]; }

    std::vector<Rational> solution() const
    {
        std::vector<Rational> x(vars_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            if (active_[i] && basis_[i] < vars_)
                x[basis_[i]] = t_[i][cols_];
        return x;
    }

    std::uint64_t pivots() const { return pivots_; }

private:
    /// Bland's rule over columns below `limit`. Returns false on an unbounded column.
    bool run(std::size_t limit)
    {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (sgn(t_[m_][j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit)
                return true;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (!active_[i] || sgn(t_[i][enter]) <= 0)
                    continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m_)
                return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        ++pivots_;
        auto &r = t_[row];
        const Rational p = r[col];
        for (auto &e : r)
            if (sgn(e) != 0)
                e /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == row || (i < m_ && !active_[i]))
                continue;
            const Rational f = t_[i][col];
            if (sgn(f) == 0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(r[j]) != 0)
                    t_[i][j] -= f * r[j];
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t vars_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
    std::uint64_t pivots_ = 0;
};

} // namespace

LpResult maximize(const std::vector<std::vector<Rational>> &A, const std::vector<Rational> &b,
                  const std::vector<Rational> &c)
{
    if (A.size() != b.size())
        throw ShapeError("constraint matrix and right-hand side differ in length");
    for (const auto &row : A)
        if (row.size() != c.size())
            throw ShapeError("constraint row length differs from the objective length");

    LpResult result;
    Tableau tab(A, b, c.size());
    if (!tab.phase_one()) {
        result.status = LpResult::Status::infeasible;
    } else if (!tab.phase_two(c)) {
        result.status = LpResult::Status::unbounded;
    } else {
        result.status = LpResult::Status::optimal;
        result.value = tab.value();
        result.x = tab.solution();
    }
    result.pivots = tab.pivots();
    return result;
}

} // namespace polyperm
