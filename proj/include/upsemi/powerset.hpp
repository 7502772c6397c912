#ifndef UPSEMI_POWERSET_HPP
#define UPSEMI_POWERSET_HPP

#include <optional>
#include <span>
#include <string_view>

#include "upsemi/checks.hpp"
#include "upsemi/classify.hpp"

namespace upsemi {

/// A finite universal set of m elements, m <= 4. Subsets of it are encoded
/// as integers 0..2^m-1 with bit i marking membership of element i, so the
/// empty set is index 0 and the full set is index 2^m-1, and complement,
/// intersection and union are single word operations.
struct Universe
{
    explicit Universe(int size);

    int size;

    int subset_count() const { return 1 << size; }
    ElementIndex empty_set() const { return 0; }
    ElementIndex full_set() const { return static_cast<ElementIndex>((1 << size) - 1); }
};

/// The eight binary operations on P(X) the workbench builds tables for.
enum class PowersetOpKind : std::uint8_t
{
    Dot,      // A' intersect B
    Star,     // A' union B
    Odot,     // constant X
    Otimes,   // constant empty set
    Boxdot,   // right projection B
    Boxtimes, // left projection A
    Cap,      // A intersect B
    Cup,      // A union B
};

std::string_view powerset_op_code(PowersetOpKind kind);
std::optional<PowersetOpKind> powerset_op_from_code(std::string_view code);

/// Cayley table of the chosen operation over all 2^m subsets.
CayleyTable build_table(Universe u, PowersetOpKind kind);

/// Type 1 is (P(X), dot, empty set); type 2 is (P(X), star, X). Validated
/// through the axiom checker; a failure would be an internal bug and throws
/// std::logic_error.
UpAlgebra build_power_up_algebra(Universe u, int type);

/// Semigroup table for one of Odot/Otimes/Boxdot/Boxtimes/Cap/Cup. Dot and
/// Star are not semigroup operations and are rejected with
/// std::invalid_argument; an associativity failure on an admissible kind
/// throws std::logic_error.
SemigroupOp build_power_semigroup(Universe u, PowersetOpKind kind);

/// Shape of a three-variable identity over P(X).
///   Left:  A f (B g C) == (A p B) q (A p C)
///   Right: (A g B) f C == (A p C) q (B p C)
enum class IdentityShape : std::uint8_t { Left, Right };

/// One of the thirty fixed identities. The id is frozen in
/// proposition-item order ("P2.1".."P7.2").
struct IdentityDef
{
    std::string_view id;
    IdentityShape shape;
    PowersetOpKind f, g, p, q;
};

inline constexpr int identity_count = 30;

/// All thirty identities in frozen order.
std::span<const IdentityDef> all_identities();

/// Lookup by id; nullptr when unknown.
const IdentityDef* find_identity(std::string_view id);

struct IdentityReport
{
    std::string id;
    bool pass = false;
    std::optional<Witness> counterexample; // elements are subset indices A, B, C
};

/// Exhaustive check of one identity over all (2^m)^3 subset triples.
IdentityReport verify_identity(Universe u, const IdentityDef& def);

struct SuiteReport
{
    std::vector<IdentityReport> results;

    bool all_pass() const;
    int passed() const;
};

/// Runs all thirty identities.
SuiteReport verify_identity_suite(Universe u);

/// Builds the (up_type, kind) combination and classifies it.
ClassLabelSet classify_paper_combo(Universe u, int up_type, PowersetOpKind kind);

} // namespace upsemi

#endif
