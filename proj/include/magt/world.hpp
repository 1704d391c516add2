#ifndef MAGT_WORLD_HPP
#define MAGT_WORLD_HPP

#include <map>
#include <string>
#include <vector>

#include "magt/level.hpp"

namespace magt {

enum class MoveResult : uint8_t { Moved, Blocked };

enum class InteractResult : uint8_t { Toggled, OutOfRange, NotInteractable, UnknownObject };

struct ObjectSighting {
    std::string id;
    ObjectKind kind;
    Vec2 position;
    bool door_open = false;  // doors only; truth snapshot at obs tick

    friend bool operator<(const ObjectSighting& a, const ObjectSighting& b) { return a.id < b.id; }
};

struct Observation {
    int observer = 0;
    long tick = 0;
    // Turns are serialized within a tick, so truth can change between two
    // same-tick observations; seq orders them totally. The runner assigns it.
    long seq = 0;
    std::vector<Vec2> visible_cells;                 // sorted (y, x)
    std::vector<ObjectSighting> visible_objects;     // sorted by id
    std::vector<std::pair<int, Vec2>> visible_agents;  // other agents, sorted by id
};

// Mutable game truth. Transitions are serialized: the runner applies exactly
// one primitive action at a time, in deterministic agent order per tick.
class WorldState {
public:
    const Level* level = nullptr;
    std::map<std::string, bool> door_open;  // every door, initially closed
    std::vector<Vec2> agent_pos;            // indexed by agent id
    long tick = 0;

    WorldState() = default;

    WorldState(const Level& lvl, int num_agents) : level(&lvl) {
        for (const auto& did : lvl.door_ids()) door_open[did] = false;
        if (lvl.spawn_points.empty()) {
            throw LevelError(LevelErrorCode::GenerationFailed, "level has no agent spawn point");
        }
        for (int i = 0; i < num_agents; ++i) {
            agent_pos.push_back(lvl.spawn_points[static_cast<size_t>(i) % lvl.spawn_points.size()]);
        }
    }

    int num_agents() const { return static_cast<int>(agent_pos.size()); }

    bool is_open(const std::string& door_id) const { return door_open.at(door_id); }

    // A cell is traversable when it is floor and not covered by a closed door.
    bool traversable(Vec2 p) const {
        if (!level->in_bounds(p) || level->cell(p) != CellKind::Floor) return false;
        const GameObject* obj = level->object_at(p);
        if (obj && obj->kind == ObjectKind::Door && !door_open.at(obj->id)) return false;
        return true;
    }

    MoveResult step_move(int agent, Dir dir) {
        const Vec2 target = step(agent_pos.at(static_cast<size_t>(agent)), dir);
        if (!traversable(target)) return MoveResult::Blocked;
        agent_pos[static_cast<size_t>(agent)] = target;
        return MoveResult::Moved;
    }

    // Pressing a button toggles every connected door, except that a closure
    // never strands an agent: openings apply first, then each closing door is
    // skipped if it would cut some agent off from the spawn region (which
    // also covers an agent standing on the door cell itself). Requires the
    // agent within Chebyshev distance 1.
    InteractResult interact(int agent, const std::string& obj_id,
                            std::vector<std::string>* toggled = nullptr) {
        const GameObject* obj = level->find(obj_id);
        if (!obj) return InteractResult::UnknownObject;
        if (obj->kind != ObjectKind::Button) return InteractResult::NotInteractable;
        if (chebyshev(agent_pos.at(static_cast<size_t>(agent)), obj->position) > 1) {
            return InteractResult::OutOfRange;
        }
        const std::vector<char> reach_before = spawn_reach();
        std::vector<std::string> to_close;
        for (const std::string& did : level->doors_of(obj_id)) {
            bool& open = door_open.at(did);
            if (open) {
                to_close.push_back(did);
            } else {
                open = true;
                if (toggled) toggled->push_back(did);
            }
        }
        for (const std::string& did : to_close) {  // doors_of is sorted by id
            door_open.at(did) = false;
            if (strands_someone(reach_before)) {
                door_open.at(did) = true;
            } else if (toggled) {
                toggled->push_back(did);
            }
        }
        return InteractResult::Toggled;
    }

    bool occupied(Vec2 p) const {
        for (const Vec2& ap : agent_pos) {
            if (ap == p) return true;
        }
        return false;
    }

    // Flood fill of cells reachable from the first spawn point under the
    // current door states.
    std::vector<char> spawn_reach() const {
        std::vector<char> reach(level->cells.size(), 0);
        const Vec2 start = level->spawn_points.front();
        if (!traversable(start)) return reach;
        const auto idx = [this](Vec2 p) { return static_cast<size_t>(p.y) * level->width + p.x; };
        std::vector<Vec2> stack{start};
        reach[idx(start)] = 1;
        while (!stack.empty()) {
            const Vec2 p = stack.back();
            stack.pop_back();
            for (const Vec2& n : neighbors4(p)) {
                if (level->in_bounds(n) && traversable(n) && !reach[idx(n)]) {
                    reach[idx(n)] = 1;
                    stack.push_back(n);
                }
            }
        }
        return reach;
    }

    // True iff some agent that could reach the spawn region before can no
    // longer reach it now.
    bool strands_someone(const std::vector<char>& reach_before) const {
        const std::vector<char> reach_now = spawn_reach();
        const auto idx = [this](Vec2 p) { return static_cast<size_t>(p.y) * level->width + p.x; };
        for (const Vec2& p : agent_pos) {
            if (reach_before[idx(p)] && !reach_now[idx(p)]) return true;
        }
        return false;
    }

    // Cells block sight when they are walls or closed doors. The occluding
    // cell itself is still visible (you can see the wall or the door face).
    bool occludes(Vec2 p) const {
        if (level->cell(p) != CellKind::Floor) return true;
        const GameObject* obj = level->object_at(p);
        return obj && obj->kind == ObjectKind::Door && !door_open.at(obj->id);
    }

    bool line_of_sight(Vec2 from, Vec2 to) const {
        for (const Vec2& c : bresenham_between(from, to)) {
            if (occludes(c)) return false;
        }
        return true;
    }

    // Euclidean-radius field of view with Bresenham line of sight.
    Observation observe(int agent, int view_distance) const {
        Observation obs;
        obs.observer = agent;
        obs.tick = tick;
        const Vec2 pos = agent_pos.at(static_cast<size_t>(agent));
        const int64_t r2 = static_cast<int64_t>(view_distance) * view_distance;
        for (int dy = -view_distance; dy <= view_distance; ++dy) {
            for (int dx = -view_distance; dx <= view_distance; ++dx) {
                const Vec2 p{pos.x + dx, pos.y + dy};
                if (!level->in_bounds(p)) continue;
                if (static_cast<int64_t>(dx) * dx + static_cast<int64_t>(dy) * dy > r2) continue;
                if (!line_of_sight(pos, p)) continue;
                obs.visible_cells.push_back(p);
                const GameObject* obj = level->object_at(p);
                if (obj) {
                    ObjectSighting s;
                    s.id = obj->id;
                    s.kind = obj->kind;
                    s.position = obj->position;
                    if (obj->kind == ObjectKind::Door) s.door_open = door_open.at(obj->id);
                    obs.visible_objects.push_back(s);
                }
                for (int a = 0; a < num_agents(); ++a) {
                    if (a != agent && agent_pos[static_cast<size_t>(a)] == p) {
                        obs.visible_agents.push_back({a, p});
                    }
                }
            }
        }
        // row-major scan already yields (y, x) order for cells; sort the rest
        std::sort(obs.visible_objects.begin(), obs.visible_objects.end());
        std::sort(obs.visible_agents.begin(), obs.visible_agents.end());
        return obs;
    }
};

}  // namespace magt

#endif  // MAGT_WORLD_HPP
