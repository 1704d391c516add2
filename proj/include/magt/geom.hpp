#ifndef MAGT_GEOM_HPP
#define MAGT_GEOM_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

namespace magt {

// Grid coordinates: x rightward (column), y downward (row), 0-based.
struct Vec2 {
    int x = 0;
    int y = 0;

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    // Lexicographic (y, x): the canonical tie-break order everywhere.
    friend bool operator<(const Vec2& a, const Vec2& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
};

enum class Dir : uint8_t { North, South, East, West };

inline Vec2 step(Vec2 p, Dir d) {
    switch (d) {
        case Dir::North: return {p.x, p.y - 1};
        case Dir::South: return {p.x, p.y + 1};
        case Dir::East: return {p.x + 1, p.y};
        case Dir::West: return {p.x - 1, p.y};
    }
    return p;
}

inline char dir_char(Dir d) {
    switch (d) {
        case Dir::North: return 'N';
        case Dir::South: return 'S';
        case Dir::East: return 'E';
        case Dir::West: return 'W';
    }
    return '?';
}

// 4-neighborhood in lexicographic (y, x) order.
inline std::array<Vec2, 4> neighbors4(Vec2 p) {
    return {Vec2{p.x, p.y - 1}, Vec2{p.x - 1, p.y}, Vec2{p.x + 1, p.y}, Vec2{p.x, p.y + 1}};
}

inline Dir dir_between(Vec2 from, Vec2 to) {
    if (to.y < from.y) return Dir::North;
    if (to.y > from.y) return Dir::South;
    if (to.x > from.x) return Dir::East;
    return Dir::West;
}

inline int64_t dist2(Vec2 a, Vec2 b) {
    const int64_t dx = a.x - b.x;
    const int64_t dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline int chebyshev(Vec2 a, Vec2 b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

inline int manhattan(Vec2 a, Vec2 b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Cells strictly between a and b on the Bresenham line (endpoints excluded).
// Used for line-of-sight: sight is blocked iff any intermediate cell occludes.
inline std::vector<Vec2> bresenham_between(Vec2 a, Vec2 b) {
    std::vector<Vec2> cells;
    int x0 = a.x, y0 = a.y;
    const int x1 = b.x, y1 = b.y;
    const int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) { err += dy; x0 += sx; }
        if (e2 <= dx) { err += dx; y0 += sy; }
        if (x0 == x1 && y0 == y1) break;
        cells.push_back({x0, y0});
    }
    return cells;
}

}  // namespace magt

template <>
struct std::hash<magt::Vec2> {
    size_t operator()(const magt::Vec2& p) const noexcept {
        return std::hash<int64_t>()((static_cast<int64_t>(p.y) << 32) ^ static_cast<uint32_t>(p.x));
    }
};

#endif  // MAGT_GEOM_HPP
