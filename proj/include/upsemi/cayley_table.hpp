#ifndef UPSEMI_CAYLEY_TABLE_HPP
#define UPSEMI_CAYLEY_TABLE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace upsemi {

/// Index of a carrier element. Tables are capped at order 16, so one byte
/// is always enough.
using ElementIndex = std::uint8_t;

/// Largest supported carrier size. Keeps the order^4 law scans at or below
/// 65536 tuples and element indices within one byte.
inline constexpr int max_order = 16;

/// The full multiplication table of a binary operation on {0,...,order-1},
/// stored row-major: at(x, y) is x op y with x selecting the row.
class CayleyTable
{
public:
    /// Validates order and entry range; throws std::invalid_argument on
    /// malformed input.
    CayleyTable(int order, std::vector<ElementIndex> entries);

    int order() const { return order_; }
    ElementIndex at(int x, int y) const { return entries_[x * order_ + y]; }
    std::span<const ElementIndex> entries() const { return entries_; }

    bool operator==(const CayleyTable&) const = default;

private:
    int order_;
    std::vector<ElementIndex> entries_;
};

} // namespace upsemi

#endif
