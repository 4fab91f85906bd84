#ifndef QFLOYD_EXT_DISTANCE_HPP
#define QFLOYD_EXT_DISTANCE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace qfloyd {

using Weight = std::uint64_t;
using NodeId = std::uint32_t;

// A non-negative path length or Infinity. Infinity is stored as the largest
// representable value so the natural ordering puts it above every finite
// distance; finite values never reach it.
class ExtDistance {
public:
    static constexpr Weight kInfinityRaw = std::numeric_limits<Weight>::max();
    static constexpr Weight kMaxFinite = kInfinityRaw - 1;

    constexpr ExtDistance() noexcept = default;  // zero
    constexpr explicit ExtDistance(Weight value) noexcept
        : raw_(value > kMaxFinite ? kMaxFinite : value) {}

    static constexpr ExtDistance infinity() noexcept {
        ExtDistance d;
        d.raw_ = kInfinityRaw;
        return d;
    }
    static constexpr ExtDistance max_finite() noexcept { return ExtDistance(kMaxFinite); }

    constexpr bool is_infinite() const noexcept { return raw_ == kInfinityRaw; }
    constexpr bool is_finite() const noexcept { return raw_ != kInfinityRaw; }
    // Only meaningful for finite values.
    constexpr Weight value() const noexcept { return raw_; }

    friend constexpr auto operator<=>(ExtDistance, ExtDistance) noexcept = default;

private:
    Weight raw_ = 0;
};

// Saturating addition: Infinity absorbs, and a finite sum that would exceed
// kMaxFinite becomes Infinity rather than wrapping.
constexpr ExtDistance ext_add(ExtDistance a, ExtDistance b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return ExtDistance::infinity();
    if (a.value() > ExtDistance::kMaxFinite - b.value()) return ExtDistance::infinity();
    return ExtDistance(a.value() + b.value());
}

constexpr ExtDistance operator+(ExtDistance a, ExtDistance b) noexcept { return ext_add(a, b); }

inline constexpr ExtDistance kInfinity = ExtDistance::infinity();

std::string to_string(ExtDistance d);
std::ostream& operator<<(std::ostream& os, ExtDistance d);

}  // namespace qfloyd

#endif  // QFLOYD_EXT_DISTANCE_HPP
