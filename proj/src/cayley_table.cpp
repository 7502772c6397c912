#include "upsemi/cayley_table.hpp"

#include <stdexcept>
#include <string>

namespace upsemi {

CayleyTable::CayleyTable(int order, std::vector<ElementIndex> entries)
    : order_(order), entries_(std::move(entries))
{
    if (order < 1 || order > max_order)
        throw std::invalid_argument("table order " + std::to_string(order) +
                                    " outside supported range 1.." + std::to_string(max_order));
    if (entries_.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument("table of order " + std::to_string(order) + " needs " +
                                    std::to_string(order * order) + " entries, got " +
                                    std::to_string(entries_.size()));
    for (ElementIndex e : entries_)
        if (e >= order)
            throw std::invalid_argument("table entry " + std::to_string(int(e)) +
                                        " out of range for order " + std::to_string(order));
}

} // namespace upsemi
