#include "polyperm/support_set.hpp"

#include "polyperm/errors.hpp"

#include <sstream>

namespace polyperm {

SupportSet::SupportSet(Shape shape) : shape_(std::move(shape)), words_((shape_.cell_count() + 63) / 64, 0) {}

SupportSet::SupportSet(Shape shape, const std::vector<Index> &cells) : SupportSet(std::move(shape))
{
    for (const auto &c : cells)
        insert(c);
}

SupportSet SupportSet::full(Shape shape)
{
    SupportSet s(std::move(shape));
    for (auto &w : s.words_)
        w = ~std::uint64_t{0};
    s.clear_padding();
    return s;
}

SupportSet SupportSet::from_word(Shape shape, std::uint64_t bits)
{
    if (shape.cell_count() > 64)
        throw ShapeError("from_word needs at most 64 cells, got " + shape.to_string());
    SupportSet s(std::move(shape));
    s.words_[0] = bits;
    s.clear_padding();
    return s;
}

void SupportSet::clear_padding()
{
    const std::size_t tail = shape_.cell_count() & 63;
    if (tail)
        words_.back() &= (std::uint64_t{1} << tail) - 1;
}

void SupportSet::require_same_shape(const SupportSet &other) const
{
    if (!(shape_ == other.shape_))
        throw ShapeError("support shapes differ: " + shape_.to_string() + " vs " + other.shape_.to_string());
}

std::size_t SupportSet::count() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool SupportSet::empty() const
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

std::vector<std::size_t> SupportSet::offsets() const
{
    std::vector<std::size_t> out;
    for_each([&](std::size_t off) { out.push_back(off); });
    return out;
}

std::vector<Index> SupportSet::indices() const
{
    std::vector<Index> out;
    for_each([&](std::size_t off) { out.push_back(index_of(shape_, off)); });
    return out;
}

int SupportSet::line_count(std::size_t offset, int direction) const
{
    const std::size_t stride = shape_.stride(direction);
    const std::size_t n = static_cast<std::size_t>(shape_.n());
    const std::size_t base = offset - ((offset / stride) % n) * stride;
    int c = 0;
    for (std::size_t k = 0; k < n; ++k)
        c += test(base + k * stride);
    return c;
}

bool SupportSet::is_subset_of(const SupportSet &other) const
{
    require_same_shape(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

SupportSet &SupportSet::operator|=(const SupportSet &other)
{
    require_same_shape(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

SupportSet &SupportSet::operator&=(const SupportSet &other)
{
    require_same_shape(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

SupportSet &SupportSet::operator^=(const SupportSet &other)
{
    require_same_shape(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

SupportSet &SupportSet::operator-=(const SupportSet &other)
{
    require_same_shape(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

SupportSet SupportSet::complement() const
{
    SupportSet s = *this;
    for (auto &w : s.words_)
        w = ~w;
    s.clear_padding();
    return s;
}

std::strong_ordering operator<=>(const SupportSet &a, const SupportSet &b)
{
    if (auto c = a.shape_.d() <=> b.shape_.d(); c != 0)
        return c;
    if (auto c = a.shape_.n() <=> b.shape_.n(); c != 0)
        return c;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff) {
            const std::uint64_t low = diff & (~diff + 1);
            return (a.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t SupportSet::hash() const
{
    std::size_t h = static_cast<std::size_t>(shape_.d()) * 31 + static_cast<std::size_t>(shape_.n());
    for (auto w : words_)
        h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ULL + (h >> 29);
    return h;
}

std::string SupportSet::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for_each([&](std::size_t off) {
        out << (first ? "" : " ") << index_of(shape_, off).to_string();
        first = false;
    });
    return out.str();
}

bool every_line_count_within(const SupportSet &s, int lo, int hi)
{
    const Shape &shape = s.shape();
    const std::size_t n = static_cast<std::size_t>(shape.n());
    for (int dir = 0; dir < shape.d(); ++dir) {
        const std::size_t stride = shape.stride(dir);
        bool ok = true;
        for_each_line(shape, dir, [&](std::size_t first) {
            if (!ok)
                return;
            int c = 0;
            for (std::size_t k = 0; k < n; ++k)
                c += s.test(first + k * stride);
            ok = c >= lo && c <= hi;
        });
        if (!ok)
            return false;
    }
    return true;
}

} // namespace polyperm
