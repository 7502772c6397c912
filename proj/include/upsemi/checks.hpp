#ifndef UPSEMI_CHECKS_HPP
#define UPSEMI_CHECKS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "upsemi/cayley_table.hpp"

namespace upsemi {

// Every quantified law is scanned in lexicographic order of its variable
// tuple, (x, y, z, a) with x outermost, and the first counterexample found
// is the one reported. This makes all reports byte-identical across runs.

/// A concrete variable assignment under which a quantified law fails.
/// For equational laws lhs/rhs are the two evaluated sides; for UP-4 they
/// are the offending pair of distinct elements.
struct Witness
{
    std::string law;
    std::vector<ElementIndex> elements;
    ElementIndex lhs = 0;
    ElementIndex rhs = 0;

    bool operator==(const Witness&) const = default;
};

/// Result of the UP-1..UP-4 axiom scan. Violations hold at most one witness
/// per axiom, in axiom order.
struct AxiomReport
{
    bool pass = false;
    std::vector<Witness> violations;
};

/// Result of a single-law scan (associativity or one distributivity side).
struct LawReport
{
    bool pass = false;
    std::optional<Witness> counterexample;
};

/// Exhaustive check of UP-1 over all order^3 triples and UP-2/3/4 over all
/// elements/pairs. Throws std::domain_error if zero is out of range.
AxiomReport check_up_axioms(const CayleyTable& table, ElementIndex zero);

/// Exhaustive associativity scan: (x*y)*z == x*(y*z) for all triples.
LawReport check_associativity(const CayleyTable& table);

/// Does f left distribute over g?  x f (y g z) == (x f y) g (x f z).
/// Throws std::domain_error on order mismatch.
LawReport left_distributes(const CayleyTable& f, const CayleyTable& g);

/// Does f right distribute over g?  (y g z) f x == (y f x) g (z f x).
LawReport right_distributes(const CayleyTable& f, const CayleyTable& g);

/// A Cayley table plus distinguished zero satisfying UP-1..UP-4.
/// Construction validates eagerly; a failing table cannot become a value.
class UpAlgebra
{
public:
    UpAlgebra(CayleyTable table, ElementIndex zero);

    const CayleyTable& table() const { return table_; }
    ElementIndex zero() const { return zero_; }
    int order() const { return table_.order(); }

    bool operator==(const UpAlgebra&) const = default;

private:
    CayleyTable table_;
    ElementIndex zero_;
};

/// An associativity-validated Cayley table.
class SemigroupOp
{
public:
    explicit SemigroupOp(CayleyTable table);

    const CayleyTable& table() const { return table_; }
    int order() const { return table_.order(); }

    bool operator==(const SemigroupOp&) const = default;

private:
    CayleyTable table_;
};

/// The four atomic distributivity flags between a UP-operation "." and a
/// semigroup operation "*" on one carrier.
struct DistributivityProfile
{
    bool dl = false; // . left  distributes over *
    bool dr = false; // . right distributes over *
    bool sl = false; // * left  distributes over .
    bool sr = false; // * right distributes over .

    bool operator==(const DistributivityProfile&) const = default;
};

/// Computes all four flags by exhaustive scan. Throws std::domain_error on
/// order mismatch.
DistributivityProfile distributivity_profile(const UpAlgebra& dot, const SemigroupOp& star);

/// Profile over raw tables; callers promise the tables already hold the
/// UP/semigroup invariants. The enumerator's hot path uses this.
DistributivityProfile distributivity_profile(const CayleyTable& dot, const CayleyTable& star);

inline constexpr int derived_law_count = 13;

/// Identifiers "1.1".."1.13" in fixed order.
std::array<std::string, derived_law_count> derived_law_ids();

/// Result of the thirteen derived-law scans over a valid UP-algebra.
/// Any failure signals a bug in the checkers, never in the input.
struct DerivedReport
{
    std::array<bool, derived_law_count> pass{};
    std::vector<Witness> violations;

    bool all_pass() const;
};

/// Evaluates the thirteen laws that hold in every UP-algebra, exhaustively
/// (three of them over order^4 tuples).
DerivedReport check_derived_properties(const UpAlgebra& alg);

/// Result of the three implication checks tied to the profile flags.
struct Prop8Report
{
    bool pass = false;
    std::vector<Witness> violations;
};

/// Verifies: sl implies x*0 == 0, sr implies 0*x == 0, dr implies x*x == x.
/// The profile must have been computed from (dot, star).
Prop8Report check_prop8_implications(const UpAlgebra& dot, const SemigroupOp& star,
                                     const DistributivityProfile& profile);

} // namespace upsemi

#endif
