#include <doctest.h>

#include <set>
#include <string>

#include "upsemi/classify.hpp"

#include "oracle.hpp"

using namespace upsemi;

namespace {

std::set<std::string> codes_of(const ClassLabelSet& labels)
{
    std::set<std::string> out;
    for (ClassLabel label : labels.to_vector())
        out.emplace(class_code(label));
    return out;
}

std::set<std::string> to_set(const std::vector<std::string>& v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("class codes round-trip")
{
    for (ClassLabel label : all_class_labels) {
        const auto back = class_from_code(class_code(label));
        REQUIRE(back.has_value());
        CHECK(*back == label);
    }
    CHECK(!class_from_code("x").has_value());
    CHECK(!class_from_code("").has_value());
    CHECK(!class_from_code("fff").has_value());
}

TEST_CASE("classify fixed examples")
{
    CHECK(codes_of(classify({false, false, true, true})) ==
          std::set<std::string>{"l", "r", "f"});

    CHECK(codes_of(classify({true, true, true, true})) ==
          std::set<std::string>{"l", "r", "f", "ll", "rl", "lr", "rr", "fl", "fr", "lf", "rf",
                                "ff"});

    CHECK(codes_of(classify({true, false, true, true})) ==
          std::set<std::string>{"l", "r", "f", "ll", "lr", "lf"});

    CHECK(classify({false, false, false, false}).empty());
}

TEST_CASE("classify matches the independent restatement on all 16 profiles")
{
    for (int bits = 0; bits < 16; ++bits) {
        const DistributivityProfile p{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0,
                                      (bits & 8) != 0};
        CHECK(codes_of(classify(p)) ==
              to_set(oracle::class_codes({p.dl, p.dr, p.sl, p.sr})));
    }
}

TEST_CASE("classify is monotone in the profile")
{
    for (int bits = 0; bits < 16; ++bits) {
        const DistributivityProfile p{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0,
                                      (bits & 8) != 0};
        const ClassLabelSet base = classify(p);
        for (int flag = 0; flag < 4; ++flag) {
            DistributivityProfile q = p;
            (flag == 0 ? q.dl : flag == 1 ? q.dr : flag == 2 ? q.sl : q.sr) = true;
            CHECK(classify(q).contains_all(base));
        }
    }
}

TEST_CASE("label implication structure")
{
    for (int bits = 0; bits < 16; ++bits) {
        const DistributivityProfile p{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0,
                                      (bits & 8) != 0};
        const ClassLabelSet labels = classify(p);
        CHECK(labels.contains(ClassLabel::F) ==
              (labels.contains(ClassLabel::L) && labels.contains(ClassLabel::R)));
        CHECK(labels.contains(ClassLabel::FF) == (p.dl && p.dr && p.sl && p.sr));
        if (labels.contains(ClassLabel::FF))
            for (ClassLabel label : all_class_labels)
                CHECK(labels.contains(label));
        if (labels.contains(ClassLabel::RF))
            CHECK(labels.contains(ClassLabel::F));
    }
}

TEST_CASE("label set operations")
{
    ClassLabelSet s;
    CHECK(s.empty());
    CHECK(s.size() == 0);
    s.insert(ClassLabel::F);
    s.insert(ClassLabel::L);
    s.insert(ClassLabel::F);
    CHECK(s.size() == 2);
    CHECK(s.contains(ClassLabel::L));
    CHECK(!s.contains(ClassLabel::R));

    // to_vector keeps definition order
    const auto v = s.to_vector();
    REQUIRE(v.size() == 2);
    CHECK(v[0] == ClassLabel::L);
    CHECK(v[1] == ClassLabel::F);

    ClassLabelSet sub;
    sub.insert(ClassLabel::F);
    CHECK(s.contains_all(sub));
    CHECK(!sub.contains_all(s));
}
