#ifndef UPSEMI_TESTS_FIXTURES_HPP
#define UPSEMI_TESTS_FIXTURES_HPP

#include <vector>

#include "upsemi/cayley_table.hpp"

namespace testfix {

inline upsemi::CayleyTable table(int order, const std::vector<int>& entries)
{
    std::vector<upsemi::ElementIndex> bytes(entries.begin(), entries.end());
    return upsemi::CayleyTable(order, std::move(bytes));
}

// The bundled order-4 f-UP-semigroup (same structure as fixtures/example4.alg).
inline const std::vector<int> dot4 = {
    0, 1, 2, 3,
    0, 0, 2, 3,
    0, 1, 0, 3,
    0, 1, 2, 0,
};

inline const std::vector<int> star4 = {
    0, 0, 0, 0,
    0, 0, 0, 0,
    0, 0, 0, 1,
    0, 0, 1, 0,
};

} // namespace testfix

#endif
