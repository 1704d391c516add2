#ifndef MAGT_PATHFIND_HPP
#define MAGT_PATHFIND_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "magt/belief.hpp"

namespace magt {

enum class PathStatus : uint8_t { Found, Unreachable, UnknownTarget };

struct PathResult {
    PathStatus status = PathStatus::Unreachable;
    std::vector<Vec2> cells;  // inclusive of both endpoints when Found

    bool found() const { return status == PathStatus::Found; }
    // moves needed, i.e. cells.size() - 1
    int length() const { return found() ? static_cast<int>(cells.size()) - 1 : -1; }
};

inline constexpr int kUnreached = std::numeric_limits<int>::max();

// Shortest 4-connected path over cells the belief marks traversable (floor,
// or doors last seen open). A* with Manhattan heuristic; tie-breaks are
// lexicographic (y, x) so plans are deterministic.
inline PathResult find_path(const AgentBelief& belief, Vec2 from, Vec2 to) {
    PathResult result;
    if (!belief.in_bounds(to) || belief.known(to) == KnownCell::Unknown) {
        result.status = PathStatus::UnknownTarget;
        return result;
    }
    if (!belief.traversable(from) || !belief.traversable(to)) {
        result.status = PathStatus::Unreachable;
        return result;
    }
    if (from == to) {
        result.status = PathStatus::Found;
        result.cells = {from};
        return result;
    }

    const int w = belief.width;
    const auto idx = [w](Vec2 p) { return static_cast<size_t>(p.y) * w + p.x; };
    std::vector<int> g(belief.known_cells.size(), kUnreached);
    std::vector<int32_t> parent(belief.known_cells.size(), -1);

    struct Node {
        int f, h, y, x;
        bool operator>(const Node& o) const {
            if (f != o.f) return f > o.f;
            if (h != o.h) return h > o.h;
            if (y != o.y) return y > o.y;
            return x > o.x;
        }
    };
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
    g[idx(from)] = 0;
    open.push({manhattan(from, to), manhattan(from, to), from.y, from.x});

    while (!open.empty()) {
        const Node n = open.top();
        open.pop();
        const Vec2 p{n.x, n.y};
        const int gp = g[idx(p)];
        if (n.f != gp + n.h) continue;  // stale entry
        if (p == to) break;
        for (const Vec2& nb : neighbors4(p)) {
            if (!belief.in_bounds(nb) || !belief.traversable(nb)) continue;
            const int ng = gp + 1;
            if (ng < g[idx(nb)]) {
                g[idx(nb)] = ng;
                parent[idx(nb)] = static_cast<int32_t>(idx(p));
                const int h = manhattan(nb, to);
                open.push({ng + h, h, nb.y, nb.x});
            }
        }
    }

    if (g[idx(to)] == kUnreached) {
        result.status = PathStatus::Unreachable;
        return result;
    }
    result.status = PathStatus::Found;
    Vec2 cur = to;
    for (;;) {
        result.cells.push_back(cur);
        if (cur == from) break;
        const int32_t pi = parent[idx(cur)];
        cur = {static_cast<int>(pi % w), static_cast<int>(pi / w)};
    }
    std::reverse(result.cells.begin(), result.cells.end());
    return result;
}

// BFS distance field from `from` over belief-traversable cells.
inline std::vector<int> belief_distances(const AgentBelief& belief, Vec2 from) {
    std::vector<int> dist(belief.known_cells.size(), kUnreached);
    if (!belief.traversable(from)) return dist;
    const int w = belief.width;
    const auto idx = [w](Vec2 p) { return static_cast<size_t>(p.y) * w + p.x; };
    std::queue<Vec2> q;
    dist[idx(from)] = 0;
    q.push(from);
    while (!q.empty()) {
        const Vec2 p = q.front();
        q.pop();
        for (const Vec2& nb : neighbors4(p)) {
            if (!belief.in_bounds(nb) || !belief.traversable(nb)) continue;
            if (dist[idx(nb)] != kUnreached) continue;
            dist[idx(nb)] = dist[idx(p)] + 1;
            q.push(nb);
        }
    }
    return dist;
}

// Nearest reachable frontier cell (known floor adjacent to unknown), or
// nullopt when the frontier is empty or unreachable. Ties break on (y, x).
inline std::optional<Vec2> next_exploration_target(const AgentBelief& belief, Vec2 from) {
    if (belief.frontier_cache.empty()) return std::nullopt;
    const std::vector<int> dist = belief_distances(belief, from);
    const int w = belief.width;
    std::optional<Vec2> best;
    int best_d = kUnreached;
    for (const Vec2& f : belief.frontier_cache) {
        const int d = dist[static_cast<size_t>(f.y) * w + f.x];
        if (d < best_d) {  // frontier_cache iterates in (y,x) order already
            best_d = d;
            best = f;
        }
    }
    if (best_d == kUnreached) return std::nullopt;
    return best;
}

}  // namespace magt

#endif  // MAGT_PATHFIND_HPP
