#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace b3 {

/// The nine positive roots of B3.  Canonical index order matches the root
/// names used in datum files: a1,a2,a3,a21,a32,a31,at32,at31,at21
/// (at = "alpha tilde", e.g. at32 is 2*a3 + a2).
enum class Root : std::uint8_t {
    a1 = 0,
    a2,
    a3,
    a21,
    a32,
    a31,
    at32,
    at31,
    at21,
};

inline constexpr int kNumRoots = 9;

struct RootInfo {
    const char* name;           // datum-file root name, e.g. "at32"
    const char* gen_name;       // generator name in expressions, e.g. "yt32"
    std::array<int, 3> degree;  // Z^3-degree in simple roots (a1,a2,a3)
    int height;                 // sum of the degree entries
    int pbw_pos;                // position in the PBW factor order (0 = leftmost)
};

/// PBW factor order, leftmost first:
///   y3 < yt32 < y32 < y2 < yt21 < yt31 < y31 < y21 < y1.
const RootInfo& root_info(Root r);
Root root_at_pbw_pos(int pos);

constexpr std::array<Root, kNumRoots> all_roots() {
    return {Root::a1, Root::a2, Root::a3, Root::a21, Root::a32,
            Root::a31, Root::at32, Root::at31, Root::at21};
}

std::optional<Root> root_by_name(std::string_view name);
std::optional<Root> root_by_gen_name(std::string_view name);

}  // namespace b3
