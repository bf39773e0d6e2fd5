#include "cube3.hpp"

#include "polyperm/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polyperm::detail {

namespace {

std::array<Word, 48> build_lines()
{
    std::array<Word, 48> lines{};
    int k = 0;
    for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c, ++k)
            for (int a = 0; a < 4; ++a)
                lines[static_cast<std::size_t>(k)] |= Word{1} << cube3_cell(a, b, c);
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c, ++k)
            for (int b = 0; b < 4; ++b)
                lines[static_cast<std::size_t>(k)] |= Word{1} << cube3_cell(a, b, c);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b, ++k)
            for (int c = 0; c < 4; ++c)
                lines[static_cast<std::size_t>(k)] |= Word{1} << cube3_cell(a, b, c);
    return lines;
}

// Cells are filled in lexicographic order; every line carries 2 half-units, a cell taking 0, 1
// (entry 1/2) or 2 (entry 1). The last cell of a line must use up what is left.
class SesquialteralEnumerator
{
public:
    std::vector<Word> run()
    {
        for (auto &dir : remaining_)
            dir.fill(2);
        visit(0, 0);
        return std::move(out_);
    }

private:
    void visit(int cell, Word mask)
    {
        if (cell == 64) {
            out_.push_back(mask);
            return;
        }
        const int a = cell / 16;
        const int b = (cell / 4) % 4;
        const int c = cell % 4;
        int &r0 = remaining_[0][static_cast<std::size_t>(b * 4 + c)];
        int &r1 = remaining_[1][static_cast<std::size_t>(a * 4 + c)];
        int &r2 = remaining_[2][static_cast<std::size_t>(a * 4 + b)];
        for (int v = 0; v <= 2; ++v) {
            if (v > r0 || v > r1 || v > r2)
                break;
            if ((a == 3 && r0 != v) || (b == 3 && r1 != v) || (c == 3 && r2 != v))
                continue;
            r0 -= v;
            r1 -= v;
            r2 -= v;
            visit(cell + 1, v ? mask | (Word{1} << cell) : mask);
            r0 += v;
            r1 += v;
            r2 += v;
        }
    }

    std::array<std::array<int, 16>, 3> remaining_{};
    std::vector<Word> out_;
};

} // namespace

const std::array<Word, 48> &cube3_lines()
{
    static const std::array<Word, 48> lines = build_lines();
    return lines;
}

std::vector<Word> sesquialteral_words()
{
    auto words = SesquialteralEnumerator().run();
    std::sort(words.begin(), words.end());
    return words;
}

Shape cube3_shape()
{
    return Shape(3, 4);
}

SupportSet to_support(Word w)
{
    return SupportSet::from_word(cube3_shape(), w);
}

Word to_word(const SupportSet &s)
{
    if (!(s.shape() == cube3_shape()))
        throw std::logic_error("expected a 3-dimensional support of order 4");
    return s.word();
}

const std::vector<CellMap> &cube3_cell_maps()
{
    static const std::vector<CellMap> maps = [] {
        std::vector<CellMap> out;
        const Shape shape = cube3_shape();
        for_each_element(shape, [&](const EquivalenceElement &g) {
            const auto m = cell_mapping(shape, g);
            CellMap cm{};
            for (std::size_t i = 0; i < 64; ++i)
                cm[i] = static_cast<std::uint8_t>(m[i]);
            out.push_back(cm);
            return true;
        });
        return out;
    }();
    return maps;
}

Word apply_cell_map(const CellMap &map, Word w)
{
    Word out = 0;
    while (w) {
        out |= Word{1} << map[static_cast<std::size_t>(std::countr_zero(w))];
        w &= w - 1;
    }
    return out;
}

std::vector<OrbitClass> orbit_classes(const std::vector<Word> &sorted_words)
{
    const auto &maps = cube3_cell_maps();
    std::vector<char> seen(sorted_words.size(), 0);
    std::vector<OrbitClass> classes;
    for (std::size_t i = 0; i < sorted_words.size(); ++i) {
        if (seen[i])
            continue;
        const Word w = sorted_words[i];
        std::size_t size = 0;
        for (const auto &map : maps) {
            const Word image = apply_cell_map(map, w);
            const auto it = std::lower_bound(sorted_words.begin(), sorted_words.end(), image);
            if (it == sorted_words.end() || *it != image)
                throw std::logic_error("word list is not closed under equivalence");
            char &mark = seen[static_cast<std::size_t>(it - sorted_words.begin())];
            if (!mark) {
                mark = 1;
                ++size;
            }
        }
        classes.push_back({canonical_form(to_support(w)), w, size});
    }
    std::sort(classes.begin(), classes.end(),
              [](const OrbitClass &x, const OrbitClass &y) { return x.representative < y.representative; });
    return classes;
}

} // namespace polyperm::detail
