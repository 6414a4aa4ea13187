#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace gbr {

// The four objects: ordered partitions of 3. The enumerator order doubles as
// the pinned total order 3 < 12 < 21 < 111 used everywhere ties are broken.
enum class Partition : std::uint8_t { P3 = 0, P12 = 1, P21 = 2, P111 = 3 };

inline constexpr std::array<Partition, 4> all_partitions{
    Partition::P3, Partition::P12, Partition::P21, Partition::P111};

constexpr std::string_view to_string(Partition p) {
    switch (p) {
        case Partition::P3: return "3";
        case Partition::P12: return "12";
        case Partition::P21: return "21";
        case Partition::P111: return "111";
    }
    return "?";
}

constexpr std::optional<Partition> partition_from(std::string_view s) {
    if (s == "3") return Partition::P3;
    if (s == "12") return Partition::P12;
    if (s == "21") return Partition::P21;
    if (s == "111") return Partition::P111;
    return std::nullopt;
}

// The strand multiplicities themselves.
inline std::span<const int> parts(Partition p) {
    static constexpr int p3[] = {3};
    static constexpr int p12[] = {1, 2};
    static constexpr int p21[] = {2, 1};
    static constexpr int p111[] = {1, 1, 1};
    switch (p) {
        case Partition::P3: return p3;
        case Partition::P12: return p12;
        case Partition::P21: return p21;
        case Partition::P111: return p111;
    }
    return {};
}

// Reversal of the part list, so 12 and 21 trade places. Used by the
// horizontal reflection.
constexpr Partition reversed(Partition p) {
    switch (p) {
        case Partition::P12: return Partition::P21;
        case Partition::P21: return Partition::P12;
        default: return p;
    }
}

}  // namespace gbr
