#ifndef MAGT_HEURISTICS_HPP
#define MAGT_HEURISTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "magt/pathfind.hpp"
#include "magt/rng.hpp"
#include "magt/tasks.hpp"

namespace magt {

// Task-selection heuristics. Random picks uniformly; HighValue/LowValue pick
// uniformly among tasks above/below the threshold and decline otherwise;
// Eager takes the task whose target is nearest in belief; Explorer never
// selects (a pure scout that shares what it finds).
enum class SelectKind : uint8_t { Random, HighValue, LowValue, Eager, Explorer };

struct SelectHeuristic {
    SelectKind kind = SelectKind::Random;
    int threshold = 5;
};

enum class FindKind : uint8_t { ClosestFirst };

struct FindHeuristic {
    FindKind kind = FindKind::ClosestFirst;
};

// Whether the selector would take anything from this candidate set. Mirrors
// select_task exactly but consumes no randomness, so callers can use it for
// stop rules without disturbing the agent's rng stream.
inline bool would_select(const SelectHeuristic& h, const std::vector<TestingTask>& candidates) {
    if (candidates.empty()) return false;
    switch (h.kind) {
        case SelectKind::Explorer: return false;
        case SelectKind::Random:
        case SelectKind::Eager: return true;
        case SelectKind::HighValue:
            for (const TestingTask& t : candidates) {
                if (t.value > h.threshold) return true;
            }
            return false;
        case SelectKind::LowValue:
            for (const TestingTask& t : candidates) {
                if (t.value < h.threshold) return true;
            }
            return false;
    }
    return false;
}

inline std::optional<TestingTask> select_task(const SelectHeuristic& h,
                                              std::vector<TestingTask> candidates,
                                              const AgentBelief& belief, Vec2 agent_pos,
                                              Rng& rng) {
    if (candidates.empty()) return std::nullopt;
    std::sort(candidates.begin(), candidates.end());

    switch (h.kind) {
        case SelectKind::Explorer:
            return std::nullopt;
        case SelectKind::Random:
            return rng.pick(candidates);
        case SelectKind::HighValue: {
            std::vector<TestingTask> filtered;
            for (const TestingTask& t : candidates) {
                if (t.value > h.threshold) filtered.push_back(t);
            }
            if (filtered.empty()) return std::nullopt;
            return rng.pick(filtered);
        }
        case SelectKind::LowValue: {
            std::vector<TestingTask> filtered;
            for (const TestingTask& t : candidates) {
                if (t.value < h.threshold) filtered.push_back(t);
            }
            if (filtered.empty()) return std::nullopt;
            return rng.pick(filtered);
        }
        case SelectKind::Eager: {
            const std::vector<int> dist = belief_distances(belief, agent_pos);
            std::optional<TestingTask> best;
            int best_d = kUnreached;
            bool any_located = false;
            for (const TestingTask& t : candidates) {
                auto it = belief.last_seen.find(t.target);
                if (it == belief.last_seen.end()) continue;
                any_located = true;
                const Vec2 p = it->second.position;
                int d = kUnreached;
                if (belief.in_bounds(p)) {
                    d = dist[static_cast<size_t>(p.y) * belief.width + p.x];
                }
                if (!best || d < best_d) {
                    best = t;
                    best_d = d;
                }
            }
            if (any_located) return best;
            return rng.pick(candidates);  // none located yet: take any
        }
    }
    return std::nullopt;
}

// ClosestFirst ranking with the winning distance exposed, so the caller can
// tell whether the best candidate is actually reachable right now.
inline std::pair<std::string, int> choose_enabler_ranked(const FindHeuristic& h,
                                                         const std::vector<std::string>& candidates,
                                                         Vec2 agent_pos,
                                                         const AgentBelief& belief) {
    (void)h;  // ClosestFirst is the only shipped variant
    const std::vector<int> dist = belief_distances(belief, agent_pos);
    std::string best;
    int best_d = kUnreached;
    for (const std::string& id : candidates) {
        const Vec2 p = belief.last_seen.at(id).position;
        int d = kUnreached;
        if (belief.in_bounds(p)) {
            d = dist[static_cast<size_t>(p.y) * belief.width + p.x];
        }
        if (best.empty() || d < best_d || (d == best_d && id < best)) {
            best = id;
            best_d = d;
        }
    }
    return {best, best_d};
}

// ClosestFirst: the candidate with the shortest belief path from the agent.
// Unreachable candidates count as infinitely far, so they rank last; ties
// break on the smaller id. Candidates must be nonempty and in last_seen.
inline std::string choose_enabler(const FindHeuristic& h, const std::vector<std::string>& candidates,
                                  Vec2 agent_pos, const AgentBelief& belief) {
    return choose_enabler_ranked(h, candidates, agent_pos, belief).first;
}

}  // namespace magt

#endif  // MAGT_HEURISTICS_HPP
