#pragma once

#include "polyperm/shape.hpp"
#include "polyperm/support_set.hpp"

#include <string>
#include <vector>

namespace polyperm {

/// Parses a 2-dimensional order-4 display: one string per row, '1' marking a member.
SupportSet parse_square(const std::vector<std::string> &rows);

/// Parses a 3-dimensional order-4 display: one string per display row holding the four blocks
/// separated by spaces. Block k is the hyperplane with first coordinate k, the display row is the
/// second coordinate and the column inside a block the third.
SupportSet parse_blocks(const std::vector<std::string> &rows);

/// A labelled support from the catalog of reference configurations.
struct CatalogEntry
{
    std::string label;
    SupportSet support;
};

/// The eight 3-dimensional hyperplane types (a)..(h) admitting zero-permanent 4-dimensional configurations.
std::vector<CatalogEntry> catalog_plane_types();
/// The 3-dimensional double permutation (i) with two F-coloured and one H-coloured direction pair.
CatalogEntry catalog_type_i();

/// The two minimal supports (A1), (A2) of a 2-dimensional plane with a line of three nonzeros.
std::vector<CatalogEntry> catalog_minimal_a();
/// The supports of B paired with (A1) ("List 1") and with (A2) ("List 2").
std::vector<CatalogEntry> catalog_b_list(int list);

/// A residue-2 index together with three cells of m4d completing it to a diagonal.
struct CompletionEntry
{
    Index added;
    std::vector<Index> completion;
};

/// Listed completions for d = 3 (five entries) and d = 5 (two entries).
std::vector<CompletionEntry> catalog_completions(int d);

} // namespace polyperm
