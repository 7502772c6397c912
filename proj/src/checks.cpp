#include "upsemi/checks.hpp"

#include <stdexcept>

namespace upsemi {

namespace {

Witness make_witness(const char* law, std::initializer_list<ElementIndex> elements,
                     ElementIndex lhs, ElementIndex rhs)
{
    return Witness{law, std::vector<ElementIndex>(elements), lhs, rhs};
}

void require_same_order(const CayleyTable& a, const CayleyTable& b)
{
    if (a.order() != b.order())
        throw std::domain_error("tables have different orders (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}

} // namespace

AxiomReport check_up_axioms(const CayleyTable& table, ElementIndex zero)
{
    const int n = table.order();
    if (zero >= n)
        throw std::domain_error("zero element " + std::to_string(int(zero)) +
                                " out of range for order " + std::to_string(n));

    AxiomReport report;

    // UP-1: (y.z).((x.y).(x.z)) == 0
    [&] {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    const ElementIndex v =
                        table.at(table.at(y, z), table.at(table.at(x, y), table.at(x, z)));
                    if (v != zero) {
                        report.violations.push_back(make_witness(
                            "UP-1", {ElementIndex(x), ElementIndex(y), ElementIndex(z)}, v, zero));
                        return;
                    }
                }
    }();

    // UP-2: 0.x == x
    for (int x = 0; x < n; ++x)
        if (table.at(zero, x) != x) {
            report.violations.push_back(
                make_witness("UP-2", {ElementIndex(x)}, table.at(zero, x), ElementIndex(x)));
            break;
        }

    // UP-3: x.0 == 0
    for (int x = 0; x < n; ++x)
        if (table.at(x, zero) != zero) {
            report.violations.push_back(
                make_witness("UP-3", {ElementIndex(x)}, table.at(x, zero), zero));
            break;
        }

    // UP-4: x.y == y.x == 0 forces x == y; the witness is the offending pair.
    [&] {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && table.at(x, y) == zero && table.at(y, x) == zero) {
                    report.violations.push_back(make_witness(
                        "UP-4", {ElementIndex(x), ElementIndex(y)}, ElementIndex(x), ElementIndex(y)));
                    return;
                }
    }();

    report.pass = report.violations.empty();
    return report;
}

LawReport check_associativity(const CayleyTable& table)
{
    const int n = table.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const ElementIndex lhs = table.at(table.at(x, y), z);
                const ElementIndex rhs = table.at(x, table.at(y, z));
                if (lhs != rhs)
                    return {false, make_witness("assoc",
                                                {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                                lhs, rhs)};
            }
    return {true, std::nullopt};
}

LawReport left_distributes(const CayleyTable& f, const CayleyTable& g)
{
    require_same_order(f, g);
    const int n = f.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const ElementIndex lhs = f.at(x, g.at(y, z));
                const ElementIndex rhs = g.at(f.at(x, y), f.at(x, z));
                if (lhs != rhs)
                    return {false, make_witness("left-dist",
                                                {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                                lhs, rhs)};
            }
    return {true, std::nullopt};
}

LawReport right_distributes(const CayleyTable& f, const CayleyTable& g)
{
    require_same_order(f, g);
    const int n = f.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const ElementIndex lhs = f.at(g.at(y, z), x);
                const ElementIndex rhs = g.at(f.at(y, x), f.at(z, x));
                if (lhs != rhs)
                    return {false, make_witness("right-dist",
                                                {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                                lhs, rhs)};
            }
    return {true, std::nullopt};
}

UpAlgebra::UpAlgebra(CayleyTable table, ElementIndex zero)
    : table_(std::move(table)), zero_(zero)
{
    const AxiomReport report = check_up_axioms(table_, zero_);
    if (!report.pass)
        throw std::invalid_argument("table is not a UP-algebra: axiom " +
                                    report.violations.front().law + " fails");
}

SemigroupOp::SemigroupOp(CayleyTable table) : table_(std::move(table))
{
    const LawReport report = check_associativity(table_);
    if (!report.pass)
        throw std::invalid_argument("table is not associative");
}

DistributivityProfile distributivity_profile(const CayleyTable& dot, const CayleyTable& star)
{
    require_same_order(dot, star);
    return {
        left_distributes(dot, star).pass,
        right_distributes(dot, star).pass,
        left_distributes(star, dot).pass,
        right_distributes(star, dot).pass,
    };
}

DistributivityProfile distributivity_profile(const UpAlgebra& dot, const SemigroupOp& star)
{
    return distributivity_profile(dot.table(), star.table());
}

std::array<std::string, derived_law_count> derived_law_ids()
{
    return {"1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7",
            "1.8", "1.9", "1.10", "1.11", "1.12", "1.13"};
}

bool DerivedReport::all_pass() const
{
    for (bool p : pass)
        if (!p)
            return false;
    return true;
}

namespace {

// One derived law: scans its tuple space in lexicographic (x, y, z, a)
// order and returns the first counterexample, if any.
using LawScan = std::optional<Witness> (*)(const CayleyTable&, ElementIndex);

std::optional<Witness> scan_1_1(const CayleyTable& t, ElementIndex zero)
{
    // x.x == 0
    for (int x = 0; x < t.order(); ++x)
        if (t.at(x, x) != zero)
            return make_witness("1.1", {ElementIndex(x)}, t.at(x, x), zero);
    return std::nullopt;
}

std::optional<Witness> scan_1_2(const CayleyTable& t, ElementIndex zero)
{
    // x.y == 0 and y.z == 0 imply x.z == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(x, y) == zero && t.at(y, z) == zero && t.at(x, z) != zero)
                    return make_witness("1.2", {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                        t.at(x, z), zero);
    return std::nullopt;
}

std::optional<Witness> scan_1_3(const CayleyTable& t, ElementIndex zero)
{
    // x.y == 0 implies (z.x).(z.y) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(x, y) == zero && t.at(t.at(z, x), t.at(z, y)) != zero)
                    return make_witness("1.3", {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                        t.at(t.at(z, x), t.at(z, y)), zero);
    return std::nullopt;
}

std::optional<Witness> scan_1_4(const CayleyTable& t, ElementIndex zero)
{
    // x.y == 0 implies (y.z).(x.z) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(x, y) == zero && t.at(t.at(y, z), t.at(x, z)) != zero)
                    return make_witness("1.4", {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                        t.at(t.at(y, z), t.at(x, z)), zero);
    return std::nullopt;
}

std::optional<Witness> scan_1_5(const CayleyTable& t, ElementIndex zero)
{
    // x.(y.x) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.at(x, t.at(y, x)) != zero)
                return make_witness("1.5", {ElementIndex(x), ElementIndex(y)},
                                    t.at(x, t.at(y, x)), zero);
    return std::nullopt;
}

std::optional<Witness> scan_1_6(const CayleyTable& t, ElementIndex zero)
{
    // (y.x).x == 0 iff x == y.x; on failure lhs/rhs expose the broken side
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const ElementIndex yx = t.at(y, x);
            const bool left = t.at(yx, x) == zero;
            const bool right = x == yx;
            if (left && !right)
                return make_witness("1.6", {ElementIndex(x), ElementIndex(y)}, ElementIndex(x), yx);
            if (right && !left)
                return make_witness("1.6", {ElementIndex(x), ElementIndex(y)}, t.at(yx, x), zero);
        }
    return std::nullopt;
}

std::optional<Witness> scan_1_7(const CayleyTable& t, ElementIndex zero)
{
    // x.(y.y) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.at(x, t.at(y, y)) != zero)
                return make_witness("1.7", {ElementIndex(x), ElementIndex(y)},
                                    t.at(x, t.at(y, y)), zero);
    return std::nullopt;
}

std::optional<Witness> scan_1_8(const CayleyTable& t, ElementIndex zero)
{
    // (x.(y.z)).(x.((a.y).(a.z))) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int a = 0; a < n; ++a) {
                    const ElementIndex v =
                        t.at(t.at(x, t.at(y, z)), t.at(x, t.at(t.at(a, y), t.at(a, z))));
                    if (v != zero)
                        return make_witness(
                            "1.8",
                            {ElementIndex(x), ElementIndex(y), ElementIndex(z), ElementIndex(a)}, v,
                            zero);
                }
    return std::nullopt;
}

std::optional<Witness> scan_1_9(const CayleyTable& t, ElementIndex zero)
{
    // (((a.x).(a.y)).z).((x.y).z) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int a = 0; a < n; ++a) {
                    const ElementIndex v =
                        t.at(t.at(t.at(t.at(a, x), t.at(a, y)), z), t.at(t.at(x, y), z));
                    if (v != zero)
                        return make_witness(
                            "1.9",
                            {ElementIndex(x), ElementIndex(y), ElementIndex(z), ElementIndex(a)}, v,
                            zero);
                }
    return std::nullopt;
}

std::optional<Witness> scan_1_10(const CayleyTable& t, ElementIndex zero)
{
    // ((x.y).z).(y.z) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const ElementIndex v = t.at(t.at(t.at(x, y), z), t.at(y, z));
                if (v != zero)
                    return make_witness("1.10", {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                        v, zero);
            }
    return std::nullopt;
}

std::optional<Witness> scan_1_11(const CayleyTable& t, ElementIndex zero)
{
    // x.y == 0 implies x.(z.y) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(x, y) == zero && t.at(x, t.at(z, y)) != zero)
                    return make_witness("1.11", {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                        t.at(x, t.at(z, y)), zero);
    return std::nullopt;
}

std::optional<Witness> scan_1_12(const CayleyTable& t, ElementIndex zero)
{
    // ((x.y).z).(x.(y.z)) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const ElementIndex v = t.at(t.at(t.at(x, y), z), t.at(x, t.at(y, z)));
                if (v != zero)
                    return make_witness("1.12", {ElementIndex(x), ElementIndex(y), ElementIndex(z)},
                                        v, zero);
            }
    return std::nullopt;
}

std::optional<Witness> scan_1_13(const CayleyTable& t, ElementIndex zero)
{
    // ((x.y).z).(y.(a.z)) == 0
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int a = 0; a < n; ++a) {
                    const ElementIndex v = t.at(t.at(t.at(x, y), z), t.at(y, t.at(a, z)));
                    if (v != zero)
                        return make_witness(
                            "1.13",
                            {ElementIndex(x), ElementIndex(y), ElementIndex(z), ElementIndex(a)}, v,
                            zero);
                }
    return std::nullopt;
}

constexpr LawScan derived_law_scans[derived_law_count] = {
    scan_1_1, scan_1_2, scan_1_3, scan_1_4,  scan_1_5,  scan_1_6, scan_1_7,
    scan_1_8, scan_1_9, scan_1_10, scan_1_11, scan_1_12, scan_1_13,
};

} // namespace

DerivedReport check_derived_properties(const UpAlgebra& alg)
{
    DerivedReport report;
    for (int i = 0; i < derived_law_count; ++i) {
        auto witness = derived_law_scans[i](alg.table(), alg.zero());
        report.pass[i] = !witness.has_value();
        if (witness)
            report.violations.push_back(std::move(*witness));
    }
    return report;
}

Prop8Report check_prop8_implications(const UpAlgebra& dot, const SemigroupOp& star,
                                     const DistributivityProfile& profile)
{
    const CayleyTable& s = star.table();
    const ElementIndex zero = dot.zero();
    const int n = s.order();

    Prop8Report report;
    if (profile.sl)
        for (int x = 0; x < n; ++x)
            if (s.at(x, zero) != zero) {
                report.violations.push_back(
                    make_witness("P8.1", {ElementIndex(x)}, s.at(x, zero), zero));
                break;
            }
    if (profile.sr)
        for (int x = 0; x < n; ++x)
            if (s.at(zero, x) != zero) {
                report.violations.push_back(
                    make_witness("P8.2", {ElementIndex(x)}, s.at(zero, x), zero));
                break;
            }
    if (profile.dr)
        for (int x = 0; x < n; ++x)
            if (s.at(x, x) != x) {
                report.violations.push_back(
                    make_witness("P8.3", {ElementIndex(x)}, s.at(x, x), ElementIndex(x)));
                break;
            }
    report.pass = report.violations.empty();
    return report;
}

} // namespace upsemi
