#include "upsemi/classify.hpp"

#include <bit>

namespace upsemi {

namespace {

constexpr std::string_view codes[class_label_count] = {
    "l", "r", "f", "ll", "rl", "lr", "rr", "fl", "fr", "lf", "rf", "ff",
};

} // namespace

std::string_view class_code(ClassLabel label)
{
    return codes[static_cast<unsigned>(label)];
}

std::optional<ClassLabel> class_from_code(std::string_view code)
{
    for (int i = 0; i < class_label_count; ++i)
        if (codes[i] == code)
            return static_cast<ClassLabel>(i);
    return std::nullopt;
}

int ClassLabelSet::size() const
{
    return std::popcount(bits_);
}

std::vector<ClassLabel> ClassLabelSet::to_vector() const
{
    std::vector<ClassLabel> out;
    for (ClassLabel label : all_class_labels)
        if (contains(label))
            out.push_back(label);
    return out;
}

ClassLabelSet classify(const DistributivityProfile& p)
{
    const bool conditions[class_label_count] = {
        p.sl,                          // L
        p.sr,                          // R
        p.sl && p.sr,                  // F
        p.dl && p.sl,                  // LL
        p.dr && p.sl,                  // RL
        p.dl && p.sr,                  // LR
        p.dr && p.sr,                  // RR
        p.dl && p.dr && p.sl,          // FL
        p.dl && p.dr && p.sr,          // FR
        p.dl && p.sl && p.sr,          // LF
        p.dr && p.sl && p.sr,          // RF
        p.dl && p.dr && p.sl && p.sr,  // FF
    };

    ClassLabelSet labels;
    for (int i = 0; i < class_label_count; ++i)
        if (conditions[i])
            labels.insert(static_cast<ClassLabel>(i));
    return labels;
}

} // namespace upsemi
