#ifndef MAGT_BELIEF_HPP
#define MAGT_BELIEF_HPP

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "magt/level.hpp"
#include "magt/world.hpp"

namespace magt {

enum class KnownCell : uint8_t { Unknown = 0, Wall, Floor, Door };

struct SeenObject {
    ObjectKind kind = ObjectKind::Button;
    Vec2 position;
    bool door_open = false;
    long tick = -1;
    long seq = -1;

    friend bool operator==(const SeenObject& a, const SeenObject& b) {
        return a.kind == b.kind && a.position == b.position && a.door_open == b.door_open &&
               a.tick == b.tick && a.seq == b.seq;
    }
};

// (target, enabler, attempt generation): the enabler was tried for the target
// during that attempt generation. Entries are never removed; a new generation
// (issued by the blackboard when a task attempt is exhausted) makes old
// entries inert, so the set stays monotone while retries remain possible.
using TriedMark = std::tuple<std::string, std::string, int>;

struct SeenAgent {
    Vec2 position;
    long tick = -1;
    long seq = -1;

    friend bool operator==(const SeenAgent& a, const SeenAgent& b) {
        return a.position == b.position && a.tick == b.tick && a.seq == b.seq;
    }
};

// Everything one agent believes about the world: discovered cells, freshest
// object sightings, tried-enabler marks, and the exploration frontier.
// known_cells only grows; per-object sighting ticks never decrease.
class AgentBelief {
public:
    int agent = 0;
    int width = 0;
    int height = 0;
    std::vector<KnownCell> known_cells;
    std::map<Vec2, std::string> door_at;       // door cell -> door id
    std::map<std::string, SeenObject> last_seen;
    std::map<int, SeenAgent> seen_agents;      // freshest sighting of each teammate
    std::set<TriedMark> tried_marks;
    std::set<Vec2> frontier_cache;
    uint64_t version = 0;        // bumped on every change, for cheap change detection
    uint64_t cells_version = 0;  // bumped only when known_cells changes

    AgentBelief() = default;
    AgentBelief(int agent_id, int w, int h)
        : agent(agent_id), width(w), height(h),
          known_cells(static_cast<size_t>(w) * h, KnownCell::Unknown) {}

    bool in_bounds(Vec2 p) const { return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height; }

    KnownCell known(Vec2 p) const {
        return in_bounds(p) ? known_cells[static_cast<size_t>(p.y) * width + p.x] : KnownCell::Unknown;
    }

    // Traversable as far as this agent knows: floor, or a door last seen open.
    bool traversable(Vec2 p) const {
        const KnownCell k = known(p);
        if (k == KnownCell::Floor) return true;
        if (k == KnownCell::Door) {
            auto it = last_seen.find(door_at.at(p));
            return it != last_seen.end() && it->second.door_open;
        }
        return false;
    }

    bool is_frontier(Vec2 p) const {
        if (known(p) != KnownCell::Floor) return false;
        for (const Vec2& n : neighbors4(p)) {
            if (in_bounds(n) && known(n) == KnownCell::Unknown) return true;
        }
        return false;
    }

    void note_object(const std::string& id, const SeenObject& seen) {
        auto it = last_seen.find(id);
        if (it == last_seen.end()) {
            last_seen.emplace(id, seen);
            ++version;
        } else if (std::tie(seen.tick, seen.seq) >= std::tie(it->second.tick, it->second.seq)) {
            it->second = seen;
            ++version;
        }
    }

    void mark_tried(const std::string& target, const std::string& enabler, int generation) {
        tried_marks.insert({target, enabler, generation});
        ++version;
    }

    bool tried(const std::string& target, const std::string& enabler, int generation) const {
        return tried_marks.count({target, enabler, generation}) > 0;
    }

    friend bool operator==(const AgentBelief& a, const AgentBelief& b) {
        return a.width == b.width && a.height == b.height && a.known_cells == b.known_cells &&
               a.door_at == b.door_at && a.last_seen == b.last_seen &&
               a.seen_agents == b.seen_agents && a.tried_marks == b.tried_marks;
    }

private:
    void learn_cell(Vec2 p, KnownCell k) {
        KnownCell& slot = known_cells[static_cast<size_t>(p.y) * width + p.x];
        if (slot == k) return;
        slot = k;
        ++version;
        ++cells_version;
        // frontier status can change only for this cell and its floor neighbors
        refresh_frontier_at(p);
        for (const Vec2& n : neighbors4(p)) {
            if (in_bounds(n)) refresh_frontier_at(n);
        }
    }

    void refresh_frontier_at(Vec2 p) {
        if (is_frontier(p)) {
            frontier_cache.insert(p);
        } else {
            frontier_cache.erase(p);
        }
    }

    friend void update_belief(AgentBelief&, const Observation&, const Level&);
    friend AgentBelief merge_beliefs(const AgentBelief&, const AgentBelief&);
};

// Folds an observation into the belief. The level supplies the static cell
// kind for observed positions; door states come from the observation's truth
// snapshot and are kept only when at least as recent as the stored sighting.
inline void update_belief(AgentBelief& belief, const Observation& obs, const Level& level) {
    std::map<Vec2, const ObjectSighting*> door_cells;
    for (const ObjectSighting& s : obs.visible_objects) {
        if (s.kind == ObjectKind::Door) door_cells[s.position] = &s;
    }
    for (const Vec2& p : obs.visible_cells) {
        auto it = door_cells.find(p);
        if (it != door_cells.end()) {
            belief.door_at[p] = it->second->id;
            belief.learn_cell(p, KnownCell::Door);
        } else {
            belief.learn_cell(p, level.cell(p) == CellKind::Wall ? KnownCell::Wall : KnownCell::Floor);
        }
    }
    for (const ObjectSighting& s : obs.visible_objects) {
        SeenObject seen;
        seen.kind = s.kind;
        seen.position = s.position;
        seen.door_open = s.door_open;
        seen.tick = obs.tick;
        seen.seq = obs.seq;
        belief.note_object(s.id, seen);
    }
    for (const auto& [aid, apos] : obs.visible_agents) {
        auto it = belief.seen_agents.find(aid);
        if (it == belief.seen_agents.end() ||
            std::tie(obs.tick, obs.seq) >= std::tie(it->second.tick, it->second.seq)) {
            belief.seen_agents[aid] = {apos, obs.tick, obs.seq};
            ++belief.version;
        }
    }
}

// Join of two beliefs over the same level: cell union, freshest sighting per
// object, mark union. Commutative, associative and idempotent.
inline AgentBelief merge_beliefs(const AgentBelief& mine, const AgentBelief& theirs) {
    AgentBelief out = mine;
    for (size_t i = 0; i < out.known_cells.size(); ++i) {
        if (out.known_cells[i] == KnownCell::Unknown) out.known_cells[i] = theirs.known_cells[i];
    }
    for (const auto& [p, id] : theirs.door_at) out.door_at.emplace(p, id);
    for (const auto& [id, seen] : theirs.last_seen) {
        auto it = out.last_seen.find(id);
        if (it == out.last_seen.end() ||
            std::tie(seen.tick, seen.seq) > std::tie(it->second.tick, it->second.seq)) {
            out.last_seen[id] = seen;
        }
    }
    for (const auto& [aid, seen] : theirs.seen_agents) {
        auto it = out.seen_agents.find(aid);
        if (it == out.seen_agents.end() ||
            std::tie(seen.tick, seen.seq) > std::tie(it->second.tick, it->second.seq)) {
            out.seen_agents[aid] = seen;
        }
    }
    for (const TriedMark& m : theirs.tried_marks) out.tried_marks.insert(m);

    out.frontier_cache.clear();
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            const Vec2 p{x, y};
            if (out.is_frontier(p)) out.frontier_cache.insert(p);
        }
    }
    ++out.version;
    ++out.cells_version;
    return out;
}

}  // namespace magt

#endif  // MAGT_BELIEF_HPP
