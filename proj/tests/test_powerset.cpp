#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "upsemi/checks.hpp"
#include "upsemi/powerset.hpp"

using namespace upsemi;

namespace {

// Set-theoretic reference: evaluate an operation on explicit element sets
// instead of bit masks.
using Subset = std::set<int>;

Subset decode(int index, int m)
{
    Subset s;
    for (int i = 0; i < m; ++i)
        if (index & (1 << i))
            s.insert(i);
    return s;
}

int encode(const Subset& s)
{
    int index = 0;
    for (int i : s)
        index |= 1 << i;
    return index;
}

Subset complement(const Subset& a, int m)
{
    Subset out;
    for (int i = 0; i < m; ++i)
        if (!a.count(i))
            out.insert(i);
    return out;
}

Subset intersect(const Subset& a, const Subset& b)
{
    Subset out;
    for (int i : a)
        if (b.count(i))
            out.insert(i);
    return out;
}

Subset unite(const Subset& a, const Subset& b)
{
    Subset out = a;
    out.insert(b.begin(), b.end());
    return out;
}

Subset reference_op(PowersetOpKind kind, int m, const Subset& a, const Subset& b)
{
    switch (kind) {
    case PowersetOpKind::Dot: return intersect(complement(a, m), b);
    case PowersetOpKind::Star: return unite(complement(a, m), b);
    case PowersetOpKind::Odot: return complement({}, m);
    case PowersetOpKind::Otimes: return {};
    case PowersetOpKind::Boxdot: return b;
    case PowersetOpKind::Boxtimes: return a;
    case PowersetOpKind::Cap: return intersect(a, b);
    case PowersetOpKind::Cup: return unite(a, b);
    }
    return {};
}

constexpr PowersetOpKind all_kinds[] = {
    PowersetOpKind::Dot,    PowersetOpKind::Star,     PowersetOpKind::Odot,
    PowersetOpKind::Otimes, PowersetOpKind::Boxdot,   PowersetOpKind::Boxtimes,
    PowersetOpKind::Cap,    PowersetOpKind::Cup,
};

constexpr PowersetOpKind semigroup_kinds[] = {
    PowersetOpKind::Odot,   PowersetOpKind::Otimes, PowersetOpKind::Boxdot,
    PowersetOpKind::Boxtimes, PowersetOpKind::Cap,  PowersetOpKind::Cup,
};

std::set<std::string> codes_of(const ClassLabelSet& labels)
{
    std::set<std::string> out;
    for (ClassLabel label : labels.to_vector())
        out.emplace(class_code(label));
    return out;
}

} // namespace

TEST_CASE("universe validation")
{
    CHECK_THROWS_AS(Universe(-1), std::invalid_argument);
    CHECK_THROWS_AS(Universe(5), std::invalid_argument);
    CHECK(Universe(0).subset_count() == 1);
    CHECK(Universe(4).subset_count() == 16);
    CHECK(Universe(3).full_set() == 7);
    CHECK(Universe(3).empty_set() == 0);
}

TEST_CASE("powerset op codes round-trip")
{
    for (PowersetOpKind kind : all_kinds) {
        const auto back = powerset_op_from_code(powerset_op_code(kind));
        REQUIRE(back.has_value());
        CHECK(*back == kind);
    }
    CHECK(!powerset_op_from_code("odd").has_value());
}

TEST_CASE("build_table small fixed cases")
{
    CHECK(build_table(Universe(0), PowersetOpKind::Dot) == CayleyTable(1, {0}));
    // over {empty, X}: A' intersect B
    CHECK(build_table(Universe(1), PowersetOpKind::Dot) == CayleyTable(2, {0, 1, 0, 0}));
    // the full-set row of star at m=2 is the identity row
    const CayleyTable star2 = build_table(Universe(2), PowersetOpKind::Star);
    for (int b = 0; b < 4; ++b)
        CHECK(star2.at(3, b) == b);
}

TEST_CASE("tables agree with the set-theoretic reference")
{
    for (int m = 0; m <= 3; ++m)
        for (PowersetOpKind kind : all_kinds) {
            const CayleyTable t = build_table(Universe(m), kind);
            REQUIRE(t.order() == (1 << m));
            for (int a = 0; a < t.order(); ++a)
                for (int b = 0; b < t.order(); ++b)
                    CHECK(int(t.at(a, b)) ==
                          encode(reference_op(kind, m, decode(a, m), decode(b, m))));
        }
}

TEST_CASE("power UP-algebras of both types satisfy the axioms at every size")
{
    for (int m = 0; m <= 4; ++m) {
        const UpAlgebra type1 = build_power_up_algebra(Universe(m), 1);
        CHECK(type1.zero() == 0);
        CHECK(check_up_axioms(type1.table(), type1.zero()).pass);
        CHECK(check_derived_properties(type1).all_pass());

        const UpAlgebra type2 = build_power_up_algebra(Universe(m), 2);
        CHECK(type2.zero() == (1 << m) - 1);
        CHECK(check_up_axioms(type2.table(), type2.zero()).pass);
        CHECK(check_derived_properties(type2).all_pass());
    }
    CHECK_THROWS_AS(build_power_up_algebra(Universe(2), 3), std::invalid_argument);
}

TEST_CASE("power semigroups are associative at every size")
{
    for (int m = 0; m <= 4; ++m)
        for (PowersetOpKind kind : semigroup_kinds)
            CHECK(check_associativity(build_power_semigroup(Universe(m), kind).table()).pass);

    CHECK_THROWS_AS(build_power_semigroup(Universe(2), PowersetOpKind::Dot),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_power_semigroup(Universe(2), PowersetOpKind::Star),
                    std::invalid_argument);
}

TEST_CASE("identity table is frozen and searchable")
{
    REQUIRE(all_identities().size() == identity_count);
    std::set<std::string_view> ids;
    for (const IdentityDef& def : all_identities())
        ids.insert(def.id);
    CHECK(ids.size() == identity_count);

    CHECK(all_identities().front().id == "P2.1");
    CHECK(all_identities().back().id == "P7.2");
    REQUIRE(find_identity("P4.1") != nullptr);
    CHECK(find_identity("P4.1")->shape == IdentityShape::Left);
    CHECK(find_identity("nope") == nullptr);
}

TEST_CASE("single identity checks")
{
    CHECK(verify_identity(Universe(3), *find_identity("P4.1")).pass);
    CHECK(verify_identity(Universe(4), *find_identity("P7.2")).pass);
    for (const IdentityDef& def : all_identities())
        CHECK(verify_identity(Universe(0), def).pass);
}

TEST_CASE("identity suite passes exhaustively for every universe size")
{
    for (int m = 0; m <= 4; ++m) {
        const SuiteReport suite = verify_identity_suite(Universe(m));
        CHECK(suite.results.size() == identity_count);
        CHECK(suite.passed() == identity_count);
        CHECK(suite.all_pass());
    }
}

TEST_CASE("spot-checked identities against handwritten set algebra")
{
    // A sample of the thirty, both sides evaluated exactly as stated.
    const int m = 2;
    const int n = 1 << m;
    const auto dot = [&](const Subset& x, const Subset& y) {
        return intersect(complement(x, m), y);
    };
    const auto star = [&](const Subset& x, const Subset& y) {
        return unite(complement(x, m), y);
    };
    const auto odot = [&](const Subset&, const Subset&) { return complement({}, m); };
    const auto otimes = [&](const Subset&, const Subset&) { return Subset{}; };
    const auto boxdot = [&](const Subset&, const Subset& y) { return y; };
    for (int ai = 0; ai < n; ++ai)
        for (int bi = 0; bi < n; ++bi)
            for (int ci = 0; ci < n; ++ci) {
                const Subset A = decode(ai, m), B = decode(bi, m), C = decode(ci, m);
                // P2.1: A.(B cap C) = (A.B) cap (A.C)
                CHECK(dot(A, intersect(B, C)) == intersect(dot(A, B), dot(A, C)));
                // P2.6: A*(B odot C) = (A*B) odot (A*C)
                CHECK(star(A, odot(B, C)) == odot(star(A, B), star(A, C)));
                // P2.7: A.(B boxdot C) = (A.B) boxdot (A.C)
                CHECK(dot(A, boxdot(B, C)) == boxdot(dot(A, B), dot(A, C)));
                // P3.1: (A boxdot B).C = (A.C) boxdot (B.C)
                CHECK(dot(boxdot(A, B), C) == boxdot(dot(A, C), dot(B, C)));
                // P4.1: A odot (B*C) = (A odot B)*(A odot C)
                CHECK(odot(A, star(B, C)) == star(odot(A, B), odot(A, C)));
                // P5.2: (A.B) otimes C = (A otimes C).(B otimes C)
                CHECK(otimes(dot(A, B), C) == dot(otimes(A, C), otimes(B, C)));
                // P6.1: (A cap B).C = (A.C) cup (B.C)
                CHECK(dot(intersect(A, B), C) == unite(dot(A, C), dot(B, C)));
                // P6.4: (A cup B)*C = (A*C) cap (B*C)
                CHECK(star(unite(A, B), C) == intersect(star(A, C), star(B, C)));
                // P6.5: (A odot B).C = (A.C) otimes (B.C)
                CHECK(dot(odot(A, B), C) == otimes(dot(A, C), dot(B, C)));
                // P7.1: (A.B) odot C = (A otimes C)*(B otimes C)
                CHECK(odot(dot(A, B), C) == star(otimes(A, C), otimes(B, C)));
                // P7.2: (A*B) otimes C = (A odot C).(B odot C)
                CHECK(otimes(star(A, B), C) == dot(odot(A, C), odot(B, C)));
            }
}

TEST_CASE("paper combo classifications are frozen and contain the claimed labels")
{
    using Claim = std::pair<std::pair<int, PowersetOpKind>, std::set<std::string>>;
    // exact label sets, identical for every m in 1..4
    const Claim exact[] = {
        {{2, PowersetOpKind::Odot}, {"l", "r", "f", "ll", "lr", "lf"}},
        {{1, PowersetOpKind::Otimes}, {"l", "r", "f", "ll", "lr", "lf"}},
        {{1, PowersetOpKind::Boxdot}, {"l", "ll", "rl", "fl"}},
        {{2, PowersetOpKind::Boxdot}, {"l", "ll", "rl", "fl"}},
        {{1, PowersetOpKind::Boxtimes}, {"r", "lr", "rr", "fr"}},
        {{2, PowersetOpKind::Boxtimes}, {"r", "lr", "rr", "fr"}},
        // combinations outside the published table, recorded as computed
        {{1, PowersetOpKind::Cap}, {"l", "r", "f", "ll", "lr", "lf"}},
        {{1, PowersetOpKind::Cup}, {}},
        {{2, PowersetOpKind::Cap}, {}},
        {{2, PowersetOpKind::Cup}, {"l", "r", "f", "ll", "lr", "lf"}},
        {{1, PowersetOpKind::Odot}, {}},
        {{2, PowersetOpKind::Otimes}, {}},
    };
    for (int m = 1; m <= 4; ++m)
        for (const auto& [combo, expected] : exact)
            CHECK(codes_of(classify_paper_combo(Universe(m), combo.first, combo.second)) ==
                  expected);

    // the published table's rows, as set inclusion
    const Claim claimed[] = {
        {{2, PowersetOpKind::Odot}, {"l", "r", "f", "lr", "lf"}},
        {{1, PowersetOpKind::Otimes}, {"l", "r", "f", "lr", "lf"}},
        {{1, PowersetOpKind::Boxdot}, {"l", "ll", "rl", "fl"}},
        {{2, PowersetOpKind::Boxdot}, {"l", "ll", "rl", "fl"}},
        {{1, PowersetOpKind::Boxtimes}, {"r", "lr", "rr", "fr"}},
        {{2, PowersetOpKind::Boxtimes}, {"r", "lr", "rr", "fr"}},
    };
    for (int m = 1; m <= 4; ++m)
        for (const auto& [combo, labels] : claimed) {
            const auto computed =
                codes_of(classify_paper_combo(Universe(m), combo.first, combo.second));
            for (const std::string& code : labels)
                CHECK(computed.count(code) == 1);
        }

    // at m = 0 every combination collapses to the one-element structure
    for (const auto& [combo, expected] : exact)
        CHECK(classify_paper_combo(Universe(0), combo.first, combo.second).size() == 12);
}

TEST_CASE("no powerset combination is rf or ff beyond the one-element case")
{
    for (int m = 1; m <= 4; ++m)
        for (int type : {1, 2})
            for (PowersetOpKind kind : semigroup_kinds) {
                const ClassLabelSet labels = classify_paper_combo(Universe(m), type, kind);
                CHECK(!labels.contains(ClassLabel::RF));
                CHECK(!labels.contains(ClassLabel::FF));
            }
}
