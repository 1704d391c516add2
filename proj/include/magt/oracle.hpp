#ifndef MAGT_ORACLE_HPP
#define MAGT_ORACLE_HPP

#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "magt/level.hpp"

namespace magt {

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Reachability : uint8_t { Reachable, Unreachable };

// Ground-truth reachability by exhaustive search over the product state
// space (agent position x door-open vector). A single agent suffices:
// enablers are toggling switches, so a button press commutes with the other
// agents' movement, and any multi-agent interleaving can be replayed by one
// agent performing all presses and walks itself.
inline std::map<std::string, bool> oracle_reachable_all(const Level& level, int view_distance = 6,
                                                        uint64_t state_cap = 1ull << 22) {
    const std::vector<std::string> doors = level.door_ids();
    const int d = static_cast<int>(doors.size());
    const uint64_t cells = static_cast<uint64_t>(level.width) * level.height;
    if (d >= 30 || cells * (1ull << d) > state_cap) {
        throw OracleCapExceeded("state space exceeds the configured cap");
    }
    std::map<std::string, int> door_bit;
    std::vector<Vec2> door_pos(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        door_bit[doors[static_cast<size_t>(i)]] = i;
        door_pos[static_cast<size_t>(i)] = level.find(doors[static_cast<size_t>(i)])->position;
    }
    std::vector<const GameObject*> buttons;
    for (const auto& [id, obj] : level.objects) {
        if (obj.kind == ObjectKind::Button) buttons.push_back(&obj);
    }

    const int w = level.width;
    const auto cell_idx = [w](Vec2 p) { return static_cast<uint32_t>(p.y) * w + p.x; };
    const auto state_idx = [&](Vec2 p, uint32_t mask) {
        return (static_cast<uint64_t>(cell_idx(p)) << d) | mask;
    };
    const auto door_open_at = [&](Vec2 p, uint32_t mask) -> int {
        const GameObject* obj = level.object_at(p);
        if (!obj || obj->kind != ObjectKind::Door) return -1;  // not a door cell
        return (mask >> door_bit.at(obj->id)) & 1u;
    };
    const auto traversable = [&](Vec2 p, uint32_t mask) {
        if (!level.in_bounds(p) || level.cell(p) != CellKind::Floor) return false;
        return door_open_at(p, mask) != 0;
    };
    const auto occludes = [&](Vec2 p, uint32_t mask) {
        if (level.cell(p) != CellKind::Floor) return true;
        return door_open_at(p, mask) == 0;
    };
    const auto visible = [&](Vec2 from, Vec2 to, uint32_t mask) {
        if (dist2(from, to) > static_cast<int64_t>(view_distance) * view_distance) return false;
        for (const Vec2& c : bresenham_between(from, to)) {
            if (occludes(c, mask)) return false;
        }
        return true;
    };

    if (level.spawn_points.empty()) {
        throw LevelError(LevelErrorCode::GenerationFailed, "level has no agent spawn point");
    }
    const Vec2 start = level.spawn_points.front();

    // spawn-reach flood fill per door mask, memoized (masks are few)
    std::unordered_map<uint32_t, std::vector<char>> reach_memo;
    const auto reach_of = [&](uint32_t mask) -> const std::vector<char>& {
        auto it = reach_memo.find(mask);
        if (it != reach_memo.end()) return it->second;
        std::vector<char> reach(cells, 0);
        if (traversable(start, mask)) {
            std::vector<Vec2> stack{start};
            reach[cell_idx(start)] = 1;
            while (!stack.empty()) {
                const Vec2 p = stack.back();
                stack.pop_back();
                for (const Vec2& n : neighbors4(p)) {
                    if (traversable(n, mask) && !reach[cell_idx(n)]) {
                        reach[cell_idx(n)] = 1;
                        stack.push_back(n);
                    }
                }
            }
        }
        return reach_memo.emplace(mask, std::move(reach)).first->second;
    };

    // interact mirrors the world rule: openings first, then closures in door
    // id order, each skipped if it would cut the agent off from spawn
    const auto press = [&](Vec2 pos, uint32_t mask, const std::string& button) {
        uint32_t next = mask;
        std::vector<int> to_close;
        for (const std::string& did : level.doors_of(button)) {
            const int bit = door_bit.at(did);
            if ((next >> bit) & 1u) {
                to_close.push_back(bit);
            } else {
                next |= 1u << bit;
            }
        }
        for (const int bit : to_close) {
            const uint32_t candidate = next & ~(1u << bit);
            if (!reach_of(candidate)[cell_idx(pos)]) continue;  // would strand us
            next = candidate;
        }
        return next;
    };

    std::vector<bool> visited(cells << d, false);
    std::map<std::string, bool> result;
    for (const std::string& id : doors) result[id] = false;
    int unproven = d;

    std::queue<std::pair<Vec2, uint32_t>> queue;
    visited[state_idx(start, 0)] = true;
    queue.push({start, 0});

    while (!queue.empty() && unproven > 0) {
        const auto [pos, mask] = queue.front();
        queue.pop();

        for (int i = 0; i < d; ++i) {
            const std::string& id = doors[static_cast<size_t>(i)];
            if (result[id] || !((mask >> i) & 1u)) continue;
            if (visible(pos, door_pos[static_cast<size_t>(i)], mask)) {
                result[id] = true;
                --unproven;
            }
        }

        for (const Vec2& nb : neighbors4(pos)) {
            if (!traversable(nb, mask)) continue;
            const uint64_t s = state_idx(nb, mask);
            if (!visited[s]) {
                visited[s] = true;
                queue.push({nb, mask});
            }
        }
        for (const GameObject* b : buttons) {
            if (chebyshev(pos, b->position) > 1) continue;
            const uint32_t next = press(pos, mask, b->id);
            const uint64_t s = state_idx(pos, next);
            if (!visited[s]) {
                visited[s] = true;
                queue.push({pos, next});
            }
        }
    }
    return result;
}

inline Reachability oracle_reachable(const Level& level, const std::string& target_door,
                                     int view_distance = 6, uint64_t state_cap = 1ull << 22) {
    if (!level.find(target_door) || level.find(target_door)->kind != ObjectKind::Door) {
        throw std::invalid_argument("unknown door id '" + target_door + "'");
    }
    const auto all = oracle_reachable_all(level, view_distance, state_cap);
    return all.at(target_door) ? Reachability::Reachable : Reachability::Unreachable;
}

}  // namespace magt

#endif  // MAGT_ORACLE_HPP
