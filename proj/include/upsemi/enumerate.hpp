#ifndef UPSEMI_ENUMERATE_HPP
#define UPSEMI_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "upsemi/checks.hpp"
#include "upsemi/classify.hpp"

namespace upsemi {

/// Largest order the exhaustive searches accept. Order 5 already has 5^12
/// candidate dot tables before pruning and is the practical ceiling.
inline constexpr int max_search_order = 5;

struct SearchConfig
{
    int order = 1;
    bool up_to_iso = false;
    std::optional<ClassLabel> class_filter;
    std::optional<std::uint64_t> limit; // cap on emitted structures, not on counts
    int threads = 0;                    // worker cap for pair profiling; 0 = auto
};

/// Lexicographically least entry sequence of a table (or dot-then-star table
/// pair) over all carrier permutations fixing the zero element. Equal keys
/// characterize isomorphism by a zero-fixing bijection.
using CanonicalKey = std::vector<ElementIndex>;

/// Brute-force minimization over all (order-1)! zero-fixing permutations.
/// star may be null. Throws std::domain_error on order mismatch.
CanonicalKey canonical_key(const CayleyTable& dot, const CayleyTable* star, ElementIndex zero);

/// All UP-algebra tables of the given order with zero fixed at index 0,
/// exactly once each (once per isomorphism class when cfg.up_to_iso, emitted
/// in canonical-key ascending order; otherwise in lexicographic generation
/// order). Generation fixes the forced entries 0.x = x, x.0 = 0, x.x = 0 and
/// backtracks over the remaining cells with incremental UP-1/UP-4 pruning.
std::vector<UpAlgebra> enumerate_up_algebras(const SearchConfig& cfg);

/// All associative tables of the given order, in lexicographic order.
/// Memoized per order: the set does not depend on anything else.
const std::vector<CayleyTable>& associative_tables(int order);

struct EnumerationSummary
{
    int order = 0;
    bool up_to_iso = false;
    std::uint64_t count_up_algebras = 0;
    std::uint64_t count_semigroups = 0;
    std::uint64_t count_pairs = 0;
    /// For each label, the number of pairs whose label set contains it
    /// (indexed by ClassLabel). Monotone under label implication.
    std::array<std::uint64_t, class_label_count> class_counts{};
    /// Pairs matching class_filter; equals count_pairs when no filter.
    std::uint64_t matching_pairs = 0;

    bool operator==(const EnumerationSummary&) const = default;
};

struct EnumeratedPair
{
    UpAlgebra dot;
    SemigroupOp star;
    ClassLabelSet labels;
};

/// Enumerates every (UpAlgebra, SemigroupOp) pair of cfg.order (every
/// isomorphism class of pairs when up_to_iso) and classifies each one.
/// Summary counts are exact regardless of limit; emit receives the pairs
/// passing class_filter, up to limit, and may return false to stop further
/// emission (counting continues). Emission order matches
/// enumerate_up_algebras: generation order raw, key-ascending under iso.
EnumerationSummary enumerate_up_semigroups(
    const SearchConfig& cfg,
    const std::function<bool(const EnumeratedPair&)>& emit = {});

struct Prop8UniquenessReport
{
    struct OrderCounts
    {
        int order = 0;
        std::uint64_t rf = 0;
        std::uint64_t ff = 0;
    };

    bool pass = false;
    std::vector<OrderCounts> orders;
    /// An order >= 2 structure labeled RF or FF, should one ever exist.
    std::optional<EnumeratedPair> offender;
};

/// Confirms by full enumeration that order 1 carries exactly one RF and one
/// FF structure and no order in [2, max_order] carries any.
Prop8UniquenessReport confirm_prop8_uniqueness(int max_order);

} // namespace upsemi

#endif
