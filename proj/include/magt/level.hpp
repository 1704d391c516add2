#ifndef MAGT_LEVEL_HPP
#define MAGT_LEVEL_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "magt/geom.hpp"

namespace magt {

enum class CellKind : uint8_t { Wall, Floor };

enum class ObjectKind : uint8_t { Door, Button };

struct GameObject {
    std::string id;
    ObjectKind kind = ObjectKind::Button;
    Vec2 position;
    int points = 0;  // doors only

    friend bool operator==(const GameObject& a, const GameObject& b) {
        return a.id == b.id && a.kind == b.kind && a.position == b.position && a.points == b.points;
    }
};

enum class LevelErrorCode {
    SyntaxError,
    UnknownDoorId,
    UnknownButtonId,
    DuplicateId,
    ObjectOnWall,
    OutOfBounds,
    PositionConflict,
    SpawnOnDoor,
    GenerationFailed,
};

struct LevelError : std::runtime_error {
    LevelErrorCode code;
    int line;    // 1-based, 0 when not tied to input text
    int column;  // 1-based, 0 when unknown

    LevelError(LevelErrorCode c, std::string msg, int ln = 0, int col = 0)
        : std::runtime_error(std::move(msg)), code(c), line(ln), column(col) {}
};

// Immutable map geometry, object roster, and the hidden button->door
// connection relation. Agents never read `connections` directly; the world
// applies it when a button is pressed.
class Level {
public:
    int width = 0;
    int height = 0;
    std::vector<CellKind> cells;                            // row-major, size width*height
    std::map<std::string, GameObject> objects;              // by id
    std::map<std::string, std::set<std::string>> connections;  // button id -> door ids
    std::vector<Vec2> spawn_points;

    bool in_bounds(Vec2 p) const { return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height; }

    CellKind cell(Vec2 p) const { return cells[static_cast<size_t>(p.y) * width + p.x]; }

    void set_cell(Vec2 p, CellKind k) { cells[static_cast<size_t>(p.y) * width + p.x] = k; }

    // Position lookup via the index validate() maintains; falls back to a
    // scan for levels that were never validated.
    const GameObject* object_at(Vec2 p) const {
        if (!pos_index_.empty()) {
            auto it = pos_index_.find(p);
            if (it == pos_index_.end()) return nullptr;
            const GameObject* obj = find(it->second);
            return obj && obj->position == p ? obj : nullptr;
        }
        for (const auto& [id, obj] : objects) {
            if (obj.position == p) return &obj;
        }
        return nullptr;
    }

    const GameObject* find(const std::string& id) const {
        auto it = objects.find(id);
        return it == objects.end() ? nullptr : &it->second;
    }

    std::vector<std::string> door_ids() const {
        std::vector<std::string> out;
        for (const auto& [id, obj] : objects) {
            if (obj.kind == ObjectKind::Door) out.push_back(id);
        }
        return out;
    }

    std::vector<std::string> button_ids() const {
        std::vector<std::string> out;
        for (const auto& [id, obj] : objects) {
            if (obj.kind == ObjectKind::Button) out.push_back(id);
        }
        return out;
    }

    // Doors toggled by pressing `button`; empty when the button is wired to nothing.
    std::set<std::string> doors_of(const std::string& button) const {
        auto it = connections.find(button);
        return it == connections.end() ? std::set<std::string>{} : it->second;
    }

    int total_points() const {
        int sum = 0;
        for (const auto& [id, obj] : objects) {
            if (obj.kind == ObjectKind::Door) sum += obj.points;
        }
        return sum;
    }

    // Structural validity. Solvability is deliberately not checked here;
    // that is the reachability oracle's job. Also rebuilds the position
    // index object_at uses.
    void validate() const {
        if (width <= 0 || height <= 0 || cells.size() != static_cast<size_t>(width) * height) {
            throw LevelError(LevelErrorCode::SyntaxError, "grid dimensions inconsistent");
        }
        pos_index_.clear();
        for (const auto& [id, obj] : objects) {
            if (!in_bounds(obj.position)) {
                throw LevelError(LevelErrorCode::OutOfBounds, "object '" + id + "' out of bounds");
            }
            if (cell(obj.position) != CellKind::Floor) {
                throw LevelError(LevelErrorCode::ObjectOnWall, "object '" + id + "' placed on a wall");
            }
            auto [it, inserted] = pos_index_.emplace(obj.position, id);
            if (!inserted) {
                throw LevelError(LevelErrorCode::PositionConflict,
                                 "objects '" + it->second + "' and '" + id + "' share a cell");
            }
        }
        for (const auto& [bid, doors] : connections) {
            const GameObject* b = find(bid);
            if (!b || b->kind != ObjectKind::Button) {
                throw LevelError(LevelErrorCode::UnknownButtonId, "unknown button id '" + bid + "'");
            }
            for (const auto& did : doors) {
                const GameObject* d = find(did);
                if (!d || d->kind != ObjectKind::Door) {
                    throw LevelError(LevelErrorCode::UnknownDoorId, "unknown door id '" + did + "'");
                }
            }
        }
        for (const Vec2& s : spawn_points) {
            if (!in_bounds(s) || cell(s) != CellKind::Floor) {
                throw LevelError(LevelErrorCode::OutOfBounds, "spawn point out of bounds or on a wall");
            }
            const GameObject* obj = object_at(s);
            if (obj && obj->kind == ObjectKind::Door) {
                throw LevelError(LevelErrorCode::SpawnOnDoor, "spawn point coincides with door '" + obj->id + "'");
            }
        }
    }

    friend bool operator==(const Level& a, const Level& b) {
        return a.width == b.width && a.height == b.height && a.cells == b.cells &&
               a.objects == b.objects && a.connections == b.connections &&
               a.spawn_points == b.spawn_points;
    }

private:
    mutable std::map<Vec2, std::string> pos_index_;
};

}  // namespace magt

#endif  // MAGT_LEVEL_HPP
