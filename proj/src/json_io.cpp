#include "upsemi/json_io.hpp"

namespace upsemi {

using nlohmann::json;

json to_json(const Witness& w)
{
    json elements = json::array();
    for (ElementIndex e : w.elements)
        elements.push_back(int(e));
    return {{"law", w.law}, {"elements", elements}, {"lhs", int(w.lhs)}, {"rhs", int(w.rhs)}};
}

Witness witness_from_json(const json& j)
{
    Witness w;
    w.law = j.at("law").get<std::string>();
    for (const json& e : j.at("elements"))
        w.elements.push_back(ElementIndex(e.get<int>()));
    w.lhs = ElementIndex(j.at("lhs").get<int>());
    w.rhs = ElementIndex(j.at("rhs").get<int>());
    return w;
}

json to_json(const AxiomReport& r)
{
    json violations = json::array();
    for (const Witness& w : r.violations)
        violations.push_back(to_json(w));
    return {{"pass", r.pass}, {"violations", violations}};
}

json to_json(const LawReport& r)
{
    return {{"pass", r.pass},
            {"counterexample", r.counterexample ? to_json(*r.counterexample) : json()}};
}

json to_json(const DistributivityProfile& p)
{
    return {{"dl", p.dl}, {"dr", p.dr}, {"sl", p.sl}, {"sr", p.sr}};
}

DistributivityProfile profile_from_json(const json& j)
{
    return {j.at("dl").get<bool>(), j.at("dr").get<bool>(), j.at("sl").get<bool>(),
            j.at("sr").get<bool>()};
}

json to_json(const ClassLabelSet& labels)
{
    json out = json::array();
    for (ClassLabel label : labels.to_vector())
        out.push_back(std::string(class_code(label)));
    return out;
}

ClassLabelSet labels_from_json(const json& j)
{
    ClassLabelSet labels;
    for (const json& code : j)
        if (auto label = class_from_code(code.get<std::string>()))
            labels.insert(*label);
    return labels;
}

json to_json(const DerivedReport& r)
{
    const auto ids = derived_law_ids();
    json laws = json::object();
    for (int i = 0; i < derived_law_count; ++i)
        laws[ids[i]] = r.pass[i];
    json violations = json::array();
    for (const Witness& w : r.violations)
        violations.push_back(to_json(w));
    return {{"pass", r.all_pass()}, {"laws", laws}, {"violations", violations}};
}

json to_json(const Prop8Report& r)
{
    json violations = json::array();
    for (const Witness& w : r.violations)
        violations.push_back(to_json(w));
    return {{"pass", r.pass}, {"violations", violations}};
}

json to_json(const IdentityReport& r)
{
    return {{"id", r.id},
            {"pass", r.pass},
            {"counterexample", r.counterexample ? to_json(*r.counterexample) : json()}};
}

json to_json(const SuiteReport& r)
{
    json results = json::array();
    for (const IdentityReport& id : r.results)
        results.push_back(to_json(id));
    return {{"pass", r.all_pass()}, {"passed", r.passed()},
            {"total", int(r.results.size())}, {"identities", results}};
}

json to_json(const EnumerationSummary& s)
{
    json counts = json::object();
    for (ClassLabel label : all_class_labels)
        counts[std::string(class_code(label))] = s.class_counts[static_cast<unsigned>(label)];
    return {{"order", s.order},
            {"up_to_iso", s.up_to_iso},
            {"count_up_algebras", s.count_up_algebras},
            {"count_semigroups", s.count_semigroups},
            {"count_pairs", s.count_pairs},
            {"class_counts", counts},
            {"matching_pairs", s.matching_pairs}};
}

EnumerationSummary summary_from_json(const json& j)
{
    EnumerationSummary s;
    s.order = j.at("order").get<int>();
    s.up_to_iso = j.at("up_to_iso").get<bool>();
    s.count_up_algebras = j.at("count_up_algebras").get<std::uint64_t>();
    s.count_semigroups = j.at("count_semigroups").get<std::uint64_t>();
    s.count_pairs = j.at("count_pairs").get<std::uint64_t>();
    for (ClassLabel label : all_class_labels)
        s.class_counts[static_cast<unsigned>(label)] =
            j.at("class_counts").at(std::string(class_code(label))).get<std::uint64_t>();
    s.matching_pairs = j.at("matching_pairs").get<std::uint64_t>();
    return s;
}

json table_rows_json(const CayleyTable& t)
{
    json rows = json::array();
    for (int x = 0; x < t.order(); ++x) {
        json row = json::array();
        for (int y = 0; y < t.order(); ++y)
            row.push_back(int(t.at(x, y)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace upsemi
