#pragma once

#include "polyperm/support_set.hpp"

#include <array>
#include <cstdint>
#include <vector>

// Word-level helpers for 3-dimensional supports of order 4: the 64 cells fit one machine word,
// cell (a, b, c) being bit 16a + 4b + c.
namespace polyperm::detail {

using Word = std::uint64_t;
using CellMap = std::array<std::uint8_t, 64>;

constexpr int cube3_cell(int a, int b, int c)
{
    return a * 16 + b * 4 + c;
}

/// The 48 lines as masks: direction 0 first (indexed 4b + c), then direction 1 (4a + c), then 2 (4a + b).
const std::array<Word, 48> &cube3_lines();

/// Every support of a 3-dimensional sesquialteral permutation of order 4, sorted increasingly.
std::vector<Word> sesquialteral_words();

/// Cell images under every element of the equivalence group, in for_each_element order.
const std::vector<CellMap> &cube3_cell_maps();

Word apply_cell_map(const CellMap &map, Word w);

Shape cube3_shape();
SupportSet to_support(Word w);
Word to_word(const SupportSet &s);

struct OrbitClass
{
    /// canonical_form of the members.
    SupportSet representative;
    /// Smallest member word.
    Word first_member = 0;
    std::size_t orbit_size = 0;
};

/// Splits a sorted, equivalence-closed word list into orbits, marking each orbit through the cell
/// maps. Classes come back sorted by representative. Throws std::logic_error when the list is not
/// closed under equivalence.
std::vector<OrbitClass> orbit_classes(const std::vector<Word> &sorted_words);

} // namespace polyperm::detail
