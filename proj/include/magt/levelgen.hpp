#ifndef MAGT_LEVELGEN_HPP
#define MAGT_LEVELGEN_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "magt/level.hpp"
#include "magt/rng.hpp"

namespace magt {

// Generated-level geometry. A basic level is a (10*scale)^2 open hall with a
// 5-cell margin on every side. Ten doors sit on the wall ring around the
// hall, each guarding a 3-deep corridor room carved into the margin, with its
// button on the hall cell directly in front of it.
inline constexpr int kHallMargin = 5;
inline constexpr int kRoomDepth = 3;

namespace gendetail {

enum class Side { West, North, East, South };

struct DoorSlot {
    Side side;
    int coord;  // y for West/East, x for North/South

    friend bool operator<(const DoorSlot& a, const DoorSlot& b) {
        if (a.side != b.side) return static_cast<int>(a.side) < static_cast<int>(b.side);
        return a.coord < b.coord;
    }
};

inline Vec2 door_pos(const DoorSlot& s, int hall) {
    const int lo = kHallMargin - 1;
    const int hi = kHallMargin + hall;
    switch (s.side) {
        case Side::West: return {lo, s.coord};
        case Side::East: return {hi, s.coord};
        case Side::North: return {s.coord, lo};
        case Side::South: return {s.coord, hi};
    }
    return {};
}

inline Vec2 button_pos(const DoorSlot& s, int hall) {
    const int lo = kHallMargin;
    const int hi = kHallMargin + hall - 1;
    switch (s.side) {
        case Side::West: return {lo, s.coord};
        case Side::East: return {hi, s.coord};
        case Side::North: return {s.coord, lo};
        case Side::South: return {s.coord, hi};
    }
    return {};
}

inline std::vector<Vec2> room_cells(const DoorSlot& s, int hall) {
    std::vector<Vec2> out;
    for (int d = 1; d <= kRoomDepth; ++d) {
        switch (s.side) {
            case Side::West: out.push_back({kHallMargin - 1 - d, s.coord}); break;
            case Side::East: out.push_back({kHallMargin + hall + d, s.coord}); break;
            case Side::North: out.push_back({s.coord, kHallMargin - 1 - d}); break;
            case Side::South: out.push_back({s.coord, kHallMargin + hall + d}); break;
        }
    }
    return out;
}

inline Side door_side(const Level& level, Vec2 door) {
    if (door.x == kHallMargin - 1) return Side::West;
    if (door.x == level.width - kHallMargin) return Side::East;
    if (door.y == kHallMargin - 1) return Side::North;
    return Side::South;
}

// Button id wired to this door (basic levels keep the pairing one-to-one).
inline std::string button_of(const Level& level, const std::string& door_id) {
    for (const auto& [bid, doors] : level.connections) {
        if (doors.count(door_id)) return bid;
    }
    throw LevelError(LevelErrorCode::GenerationFailed, "door '" + door_id + "' has no connected button");
}

}  // namespace gendetail

inline int basic_level_scale(const Level& level) { return (level.width - 2 * kHallMargin) / 10; }

// The ten-door hall level the experiment families are built from. Doors
// d0..d9, buttons b0..b9 with bi wired to di and placed directly in front of
// it. d2, d3, d6 and d9 are worth 10 points, the rest 1 (46 total). Door
// placement around the perimeter is deterministic in the seed.
inline Level generate_basic_level(int scale, uint64_t seed) {
    using namespace gendetail;
    if (scale < 1) throw LevelError(LevelErrorCode::GenerationFailed, "scale must be >= 1");

    const int hall = 10 * scale;
    Level level;
    level.width = hall + 2 * kHallMargin;
    level.height = hall + 2 * kHallMargin;
    level.cells.assign(static_cast<size_t>(level.width) * level.height, CellKind::Wall);

    for (int y = kHallMargin; y < kHallMargin + hall; ++y) {
        for (int x = kHallMargin; x < kHallMargin + hall; ++x) {
            level.set_cell({x, y}, CellKind::Floor);
        }
    }

    // Candidate door slots skip the outermost hall row/column of each side so
    // buttons of perpendicular doors can never collide at a hall corner.
    std::vector<DoorSlot> candidates;
    for (Side side : {Side::West, Side::North, Side::East, Side::South}) {
        for (int c = kHallMargin + 1; c <= kHallMargin + hall - 2; ++c) {
            candidates.push_back({side, c});
        }
    }

    Rng rng(seed);
    rng.shuffle(candidates);

    // Same-side spacing >= 2 keeps rooms disjoint with a wall between them.
    std::vector<DoorSlot> chosen;
    for (const DoorSlot& cand : candidates) {
        bool ok = true;
        for (const DoorSlot& c : chosen) {
            if (c.side == cand.side && std::abs(c.coord - cand.coord) < 2) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(cand);
        if (chosen.size() == 10) break;
    }
    if (chosen.size() != 10) {
        throw LevelError(LevelErrorCode::GenerationFailed, "could not place 10 doors");
    }
    std::sort(chosen.begin(), chosen.end());

    for (size_t i = 0; i < chosen.size(); ++i) {
        const DoorSlot& slot = chosen[i];
        const std::string idx = std::to_string(i);

        GameObject door;
        door.id = "d" + idx;
        door.kind = ObjectKind::Door;
        door.position = door_pos(slot, hall);
        door.points = (i == 2 || i == 3 || i == 6 || i == 9) ? 10 : 1;

        GameObject button;
        button.id = "b" + idx;
        button.kind = ObjectKind::Button;
        button.position = button_pos(slot, hall);

        level.set_cell(door.position, CellKind::Floor);
        for (const Vec2& rc : room_cells(slot, hall)) level.set_cell(rc, CellKind::Floor);

        level.connections[button.id].insert(door.id);
        level.objects.emplace(door.id, std::move(door));
        level.objects.emplace(button.id, std::move(button));
    }

    // a small cluster around the hall center; teams take them in order, so
    // agents start slightly apart instead of stacked on one cell
    const Vec2 center{kHallMargin + hall / 2, kHallMargin + hall / 2};
    level.spawn_points.push_back(center);
    level.spawn_points.push_back({center.x + 2, center.y});
    level.spawn_points.push_back({center.x, center.y + 2});
    level.spawn_points.push_back({center.x - 2, center.y});
    level.spawn_points.push_back({center.x, center.y - 2});
    level.validate();
    return level;
}

// Relocates `count` seed-chosen doors' buttons to far hall cells (Euclidean
// distance >= half the hall width from the door).
inline Level apply_distant_connections(const Level& base, int count, uint64_t seed) {
    using namespace gendetail;
    Level level = base;
    const int scale = basic_level_scale(level);
    const int64_t min_dist2 = static_cast<int64_t>(5 * scale) * (5 * scale);

    std::vector<std::string> doors = level.door_ids();
    Rng rng(seed);
    rng.shuffle(doors);
    doors.resize(static_cast<size_t>(count));
    std::sort(doors.begin(), doors.end());

    std::set<Vec2> occupied;
    for (const auto& [id, obj] : level.objects) occupied.insert(obj.position);

    const int lo = kHallMargin;
    const int hi_x = level.width - kHallMargin - 1;
    const int hi_y = level.height - kHallMargin - 1;
    for (const std::string& did : doors) {
        const Vec2 dpos = level.find(did)->position;
        std::vector<Vec2> cells;
        for (int y = lo; y <= hi_y; ++y) {
            for (int x = lo; x <= hi_x; ++x) {
                const Vec2 p{x, y};
                if (dist2(p, dpos) < min_dist2) continue;
                if (occupied.count(p)) continue;
                if (!level.spawn_points.empty() && p == level.spawn_points.front()) continue;
                cells.push_back(p);
            }
        }
        if (cells.empty()) {
            throw LevelError(LevelErrorCode::GenerationFailed, "no far cell available for '" + did + "'");
        }
        GameObject& button = level.objects.at(gendetail::button_of(level, did));
        occupied.erase(button.position);
        button.position = rng.pick(cells);
        occupied.insert(button.position);
    }
    level.validate();
    return level;
}

// Hides `count` seed-chosen doors' buttons inside the room behind another
// door. Pairs are disjoint, so the dependency graph is acyclic of depth 1.
inline Level apply_chained_connections(const Level& base, int count, uint64_t seed) {
    using namespace gendetail;
    Level level = base;
    const int hall = 10 * basic_level_scale(level);

    std::vector<std::string> doors = level.door_ids();
    if (static_cast<size_t>(2 * count) > doors.size()) {
        throw LevelError(LevelErrorCode::GenerationFailed, "not enough doors for disjoint pairs");
    }
    Rng rng(seed);
    rng.shuffle(doors);

    for (int i = 0; i < count; ++i) {
        const std::string& guard = doors[static_cast<size_t>(2 * i)];
        const std::string& target = doors[static_cast<size_t>(2 * i) + 1];
        const Vec2 gpos = level.find(guard)->position;
        const DoorSlot slot{door_side(level, gpos),
                            (door_side(level, gpos) == Side::West || door_side(level, gpos) == Side::East)
                                ? gpos.y
                                : gpos.x};
        // deepest room cell, invisible until the guard door opens
        level.objects.at(button_of(level, target)).position = room_cells(slot, hall).back();
    }
    level.validate();
    return level;
}

// Wires `count` seed-chosen buttons to 1-2 extra doors each; pressing such a
// button toggles all of its doors simultaneously.
inline Level apply_multi_connections(const Level& base, int count, uint64_t seed) {
    Level level = base;
    std::vector<std::string> buttons = level.button_ids();
    Rng rng(seed);
    rng.shuffle(buttons);
    if (static_cast<size_t>(count) < buttons.size()) buttons.resize(static_cast<size_t>(count));
    std::sort(buttons.begin(), buttons.end());

    for (const std::string& bid : buttons) {
        const int extra = rng.range(1, 2);
        std::vector<std::string> pool;
        for (const std::string& did : level.door_ids()) {
            if (!level.connections[bid].count(did)) pool.push_back(did);
        }
        rng.shuffle(pool);
        for (int k = 0; k < extra && k < static_cast<int>(pool.size()); ++k) {
            level.connections[bid].insert(pool[static_cast<size_t>(k)]);
        }
    }
    level.validate();
    return level;
}

}  // namespace magt

#endif  // MAGT_LEVELGEN_HPP
