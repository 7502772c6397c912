#include "upsemi/powerset.hpp"

#include <stdexcept>

namespace upsemi {

Universe::Universe(int size_in) : size(size_in)
{
    if (size < 0 || size > 4)
        throw std::invalid_argument("universe size " + std::to_string(size) +
                                    " outside supported range 0..4");
}

namespace {

constexpr std::string_view op_codes[] = {"dot", "star", "odot", "otimes",
                                         "boxdot", "boxtimes", "cap", "cup"};

ElementIndex apply_op(PowersetOpKind kind, int mask, int a, int b)
{
    switch (kind) {
    case PowersetOpKind::Dot: return ElementIndex((~a & mask) & b);
    case PowersetOpKind::Star: return ElementIndex((~a & mask) | b);
    case PowersetOpKind::Odot: return ElementIndex(mask);
    case PowersetOpKind::Otimes: return 0;
    case PowersetOpKind::Boxdot: return ElementIndex(b);
    case PowersetOpKind::Boxtimes: return ElementIndex(a);
    case PowersetOpKind::Cap: return ElementIndex(a & b);
    case PowersetOpKind::Cup: return ElementIndex(a | b);
    }
    throw std::logic_error("unreachable powerset op kind");
}

} // namespace

std::string_view powerset_op_code(PowersetOpKind kind)
{
    return op_codes[static_cast<unsigned>(kind)];
}

std::optional<PowersetOpKind> powerset_op_from_code(std::string_view code)
{
    for (unsigned i = 0; i < std::size(op_codes); ++i)
        if (op_codes[i] == code)
            return static_cast<PowersetOpKind>(i);
    return std::nullopt;
}

CayleyTable build_table(Universe u, PowersetOpKind kind)
{
    const int n = u.subset_count();
    const int mask = n - 1;
    std::vector<ElementIndex> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            entries.push_back(apply_op(kind, mask, a, b));
    return CayleyTable(n, std::move(entries));
}

UpAlgebra build_power_up_algebra(Universe u, int type)
{
    if (type != 1 && type != 2)
        throw std::invalid_argument("power UP-algebra type must be 1 or 2");
    const PowersetOpKind kind = type == 1 ? PowersetOpKind::Dot : PowersetOpKind::Star;
    const ElementIndex zero = type == 1 ? u.empty_set() : u.full_set();
    CayleyTable table = build_table(u, kind);
    if (!check_up_axioms(table, zero).pass)
        throw std::logic_error("internal error: power UP-algebra failed the axiom check");
    return UpAlgebra(std::move(table), zero);
}

SemigroupOp build_power_semigroup(Universe u, PowersetOpKind kind)
{
    if (kind == PowersetOpKind::Dot || kind == PowersetOpKind::Star)
        throw std::invalid_argument(std::string(powerset_op_code(kind)) +
                                    " is not a semigroup operation");
    CayleyTable table = build_table(u, kind);
    if (!check_associativity(table).pass)
        throw std::logic_error("internal error: power semigroup failed the associativity check");
    return SemigroupOp(std::move(table));
}

namespace {

using K = PowersetOpKind;
using S = IdentityShape;

// Frozen in proposition-item order. Left: A f (B g C) == (A p B) q (A p C);
// right: (A g B) f C == (A p C) q (B p C).
constexpr IdentityDef identities[identity_count] = {
    {"P2.1", S::Left, K::Dot, K::Cap, K::Dot, K::Cap},
    {"P2.2", S::Left, K::Dot, K::Cup, K::Dot, K::Cup},
    {"P2.3", S::Left, K::Star, K::Cap, K::Star, K::Cap},
    {"P2.4", S::Left, K::Star, K::Cup, K::Star, K::Cup},
    {"P2.5", S::Left, K::Dot, K::Otimes, K::Dot, K::Otimes},
    {"P2.6", S::Left, K::Star, K::Odot, K::Star, K::Odot},
    {"P2.7", S::Left, K::Dot, K::Boxdot, K::Dot, K::Boxdot},
    {"P2.8", S::Left, K::Star, K::Boxdot, K::Star, K::Boxdot},
    {"P2.9", S::Left, K::Dot, K::Boxtimes, K::Dot, K::Boxtimes},
    {"P2.10", S::Left, K::Star, K::Boxtimes, K::Star, K::Boxtimes},
    {"P3.1", S::Right, K::Dot, K::Boxdot, K::Dot, K::Boxdot},
    {"P3.2", S::Right, K::Star, K::Boxdot, K::Star, K::Boxdot},
    {"P3.3", S::Right, K::Dot, K::Boxtimes, K::Dot, K::Boxtimes},
    {"P3.4", S::Right, K::Star, K::Boxtimes, K::Star, K::Boxtimes},
    {"P4.1", S::Left, K::Odot, K::Star, K::Odot, K::Star},
    {"P4.2", S::Left, K::Otimes, K::Dot, K::Otimes, K::Dot},
    {"P4.3", S::Left, K::Boxdot, K::Dot, K::Boxdot, K::Dot},
    {"P4.4", S::Left, K::Boxdot, K::Star, K::Boxdot, K::Star},
    {"P5.1", S::Right, K::Odot, K::Star, K::Odot, K::Star},
    {"P5.2", S::Right, K::Otimes, K::Dot, K::Otimes, K::Dot},
    {"P5.3", S::Right, K::Boxtimes, K::Dot, K::Boxtimes, K::Dot},
    {"P5.4", S::Right, K::Boxtimes, K::Star, K::Boxtimes, K::Star},
    {"P6.1", S::Right, K::Dot, K::Cap, K::Dot, K::Cup},
    {"P6.2", S::Right, K::Dot, K::Cup, K::Dot, K::Cap},
    {"P6.3", S::Right, K::Star, K::Cap, K::Star, K::Cup},
    {"P6.4", S::Right, K::Star, K::Cup, K::Star, K::Cap},
    {"P6.5", S::Right, K::Dot, K::Odot, K::Dot, K::Otimes},
    {"P6.6", S::Right, K::Star, K::Otimes, K::Star, K::Odot},
    {"P7.1", S::Right, K::Odot, K::Dot, K::Otimes, K::Star},
    {"P7.2", S::Right, K::Otimes, K::Star, K::Odot, K::Dot},
};

} // namespace

std::span<const IdentityDef> all_identities()
{
    return identities;
}

const IdentityDef* find_identity(std::string_view id)
{
    for (const IdentityDef& def : identities)
        if (def.id == id)
            return &def;
    return nullptr;
}

IdentityReport verify_identity(Universe u, const IdentityDef& def)
{
    const int n = u.subset_count();
    const int mask = n - 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                ElementIndex lhs, rhs;
                if (def.shape == IdentityShape::Left) {
                    lhs = apply_op(def.f, mask, a, apply_op(def.g, mask, b, c));
                    rhs = apply_op(def.q, mask, apply_op(def.p, mask, a, b),
                                   apply_op(def.p, mask, a, c));
                } else {
                    lhs = apply_op(def.f, mask, apply_op(def.g, mask, a, b), c);
                    rhs = apply_op(def.q, mask, apply_op(def.p, mask, a, c),
                                   apply_op(def.p, mask, b, c));
                }
                if (lhs != rhs)
                    return {std::string(def.id), false,
                            Witness{std::string(def.id),
                                    {ElementIndex(a), ElementIndex(b), ElementIndex(c)}, lhs, rhs}};
            }
    return {std::string(def.id), true, std::nullopt};
}

bool SuiteReport::all_pass() const
{
    return passed() == static_cast<int>(results.size());
}

int SuiteReport::passed() const
{
    int count = 0;
    for (const IdentityReport& r : results)
        count += r.pass ? 1 : 0;
    return count;
}

SuiteReport verify_identity_suite(Universe u)
{
    SuiteReport report;
    report.results.reserve(identity_count);
    for (const IdentityDef& def : identities)
        report.results.push_back(verify_identity(u, def));
    return report;
}

ClassLabelSet classify_paper_combo(Universe u, int up_type, PowersetOpKind kind)
{
    const UpAlgebra dot = build_power_up_algebra(u, up_type);
    const SemigroupOp star = build_power_semigroup(u, kind);
    return classify(distributivity_profile(dot, star));
}

} // namespace upsemi
