#include "polyperm/catalog.hpp"

#include "polyperm/errors.hpp"

#include <sstream>

namespace polyperm {

SupportSet parse_square(const std::vector<std::string> &rows)
{
    if (rows.size() != 4)
        throw ParseError("a square display needs 4 rows");
    SupportSet out(Shape(2, 4));
    for (int r = 0; r < 4; ++r) {
        const std::string &row = rows[static_cast<std::size_t>(r)];
        if (row.size() != 4)
            throw ParseError("a square row needs 4 cells: '" + row + "'");
        for (int c = 0; c < 4; ++c) {
            const char ch = row[static_cast<std::size_t>(c)];
            if (ch != '0' && ch != '1')
                throw ParseError("unexpected cell character in '" + row + "'");
            if (ch == '1')
                out.insert({r, c});
        }
    }
    return out;
}

SupportSet parse_blocks(const std::vector<std::string> &rows)
{
    if (rows.size() != 4)
        throw ParseError("a block display needs 4 rows");
    SupportSet out(Shape(3, 4));
    for (int b = 0; b < 4; ++b) {
        std::istringstream in(rows[static_cast<std::size_t>(b)]);
        std::string block;
        int k = 0;
        for (; in >> block; ++k) {
            if (k >= 4 || block.size() != 4)
                throw ParseError("malformed block row '" + rows[static_cast<std::size_t>(b)] + "'");
            for (int c = 0; c < 4; ++c) {
                const char ch = block[static_cast<std::size_t>(c)];
                if (ch != '0' && ch != '1')
                    throw ParseError("unexpected cell character in '" + block + "'");
                if (ch == '1')
                    out.insert({k, b, c});
            }
        }
        if (k != 4)
            throw ParseError("a block row needs 4 blocks");
    }
    return out;
}

std::vector<CatalogEntry> catalog_plane_types()
{
    return {
        {"a", parse_blocks({"1000 0100 0010 0001", "0100 1000 0001 0010", "0010 0001 1000 0100",
                            "0001 0010 0100 1000"})},
        {"b", parse_blocks({"1000 0100 0010 0001", "0100 0010 0001 1000", "0010 0001 1000 0100",
                            "0001 1000 0100 0010"})},
        {"c", parse_blocks({"1000 0100 0010 0001", "0100 1000 0001 0010", "0010 0001 1100 1100",
                            "0001 0010 1100 1100"})},
        {"d", parse_blocks({"1000 0100 0011 0011", "0100 1000 0011 0011", "0010 0001 1100 1100",
                            "0001 0010 1100 1100"})},
        {"e", parse_blocks({"1000 0100 0011 0011", "0100 1000 0011 0011", "0011 0011 1100 1100",
                            "0011 0011 1100 1100"})},
        {"f", parse_blocks({"1100 1100 0011 0011", "1100 1100 0011 0011", "0011 0011 1100 1100",
                            "0011 0011 1100 1100"})},
        {"g", parse_blocks({"1000 0100 0011 0011", "0100 0010 1001 1001", "0010 0001 1100 1100",
                            "0001 1000 0110 0110"})},
        {"h", parse_blocks({"1100 0110 0011 1001", "0110 0011 1001 1100", "0011 1001 1100 0110",
                            "1001 1100 0110 0011"})},
    };
}

CatalogEntry catalog_type_i()
{
    return {"i", parse_blocks({"1100 1100 0011 0011", "0110 0110 1001 1001", "0011 0011 1100 1100",
                               "1001 1001 0110 0110"})};
}

std::vector<CatalogEntry> catalog_minimal_a()
{
    return {
        {"A1", parse_square({"1000", "0111", "0101", "0110"})},
        {"A2", parse_square({"0111", "1100", "1010", "1001"})},
    };
}

std::vector<CatalogEntry> catalog_b_list(int list)
{
    if (list == 1)
        return {
            {"L1.1", parse_square({"1000", "0011", "0110", "0101"})},
            {"L1.2", parse_square({"1000", "0101", "0010", "0101"})},
            {"L1.3", parse_square({"0010", "0101", "1000", "0101"})},
            {"L1.4", parse_square({"1000", "0110", "0110", "0001"})},
            {"L1.5", parse_square({"0001", "0110", "0110", "1000"})},
        };
    if (list == 2)
        return {
            {"L2.1", parse_square({"0110", "1010", "1100", "0001"})},
            {"L2.2", parse_square({"0101", "1001", "0010", "1100"})},
            {"L2.3", parse_square({"0011", "0100", "1001", "1010"})},
            {"L2.4", parse_square({"1000", "0101", "0110", "0011"})},
            {"L2.5", parse_square({"1000", "0110", "0011", "0101"})},
        };
    throw ShapeError("list number must be 1 or 2");
}

std::vector<CompletionEntry> catalog_completions(int d)
{
    if (d == 3)
        return {
            {{0, 0, 2}, {{1, 2, 1}, {2, 3, 3}, {3, 1, 0}}},
            {{0, 1, 1}, {{1, 0, 3}, {2, 2, 0}, {3, 3, 2}}},
            {{0, 3, 3}, {{1, 1, 2}, {2, 2, 0}, {3, 0, 1}}},
            {{1, 2, 3}, {{0, 3, 1}, {2, 0, 2}, {3, 1, 0}}},
            {{2, 2, 2}, {{0, 1, 3}, {1, 3, 0}, {3, 0, 1}}},
        };
    if (d == 5)
        return {
            {{1, 1, 1, 1, 2}, {{0, 0, 2, 2, 0}, {2, 2, 3, 0, 1}, {3, 3, 0, 3, 3}}},
            {{2, 3, 3, 3, 3}, {{0, 0, 1, 1, 2}, {1, 1, 0, 2, 0}, {3, 2, 2, 0, 1}}},
        };
    throw ShapeError("completions are listed for d = 3 and d = 5 only");
}

} // namespace polyperm
