#ifndef UPSEMI_CLASSIFY_HPP
#define UPSEMI_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "upsemi/checks.hpp"

namespace upsemi {

/// The twelve classes of UP-semigroup structures, in definition order.
/// L/R/F constrain how * distributes over . ; the two-letter labels add a
/// constraint on how . distributes over *.
enum class ClassLabel : std::uint8_t
{
    L,  // sl
    R,  // sr
    F,  // sl & sr
    LL, // dl & sl
    RL, // dr & sl
    LR, // dl & sr
    RR, // dr & sr
    FL, // dl & dr & sl
    FR, // dl & dr & sr
    LF, // dl & sl & sr
    RF, // dr & sl & sr
    FF, // dl & dr & sl & sr
};

inline constexpr int class_label_count = 12;

inline constexpr std::array<ClassLabel, class_label_count> all_class_labels = {
    ClassLabel::L,  ClassLabel::R,  ClassLabel::F,  ClassLabel::LL,
    ClassLabel::RL, ClassLabel::LR, ClassLabel::RR, ClassLabel::FL,
    ClassLabel::FR, ClassLabel::LF, ClassLabel::RF, ClassLabel::FF,
};

/// Short code as used in reports: "l", "r", "f", "ll", ..., "ff".
std::string_view class_code(ClassLabel label);

/// Inverse of class_code; nullopt for unknown codes.
std::optional<ClassLabel> class_from_code(std::string_view code);

/// A subset of the twelve class labels, stored as a bit mask.
class ClassLabelSet
{
public:
    ClassLabelSet() = default;

    bool contains(ClassLabel label) const { return bits_ & bit(label); }
    void insert(ClassLabel label) { bits_ |= bit(label); }
    int size() const;
    bool empty() const { return bits_ == 0; }

    /// True when every label of other is also present here.
    bool contains_all(const ClassLabelSet& other) const
    {
        return (bits_ & other.bits_) == other.bits_;
    }

    /// Labels in definition order.
    std::vector<ClassLabel> to_vector() const;

    bool operator==(const ClassLabelSet&) const = default;

private:
    static std::uint16_t bit(ClassLabel label)
    {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(label));
    }

    std::uint16_t bits_ = 0;
};

/// The fixed boolean mapping from profile flags to class labels. Pure.
ClassLabelSet classify(const DistributivityProfile& profile);

} // namespace upsemi

#endif
