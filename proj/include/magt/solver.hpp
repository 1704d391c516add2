#ifndef MAGT_SOLVER_HPP
#define MAGT_SOLVER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "magt/blackboard.hpp"
#include "magt/heuristics.hpp"
#include "magt/pathfind.hpp"

namespace magt {

enum class ExplorePolicyKind : uint8_t { Gradual, Aggressive, Budget };

struct ExplorePolicy {
    ExplorePolicyKind kind = ExplorePolicyKind::Gradual;
    long budget = 0;  // Budget policy only
};

struct AgentSpec {
    SelectHeuristic select_h;
    FindHeuristic find_h;
    ExplorePolicy explore;
};

enum class ActionKind : uint8_t { Move, Interact, NoOp };

struct Action {
    ActionKind kind = ActionKind::NoOp;
    Dir dir = Dir::North;
    std::string object;

    static Action move(Dir d) { return {ActionKind::Move, d, {}}; }
    static Action interact(std::string obj) { return {ActionKind::Interact, Dir::North, std::move(obj)}; }
    static Action noop() { return {}; }
};

enum class Phase : uint8_t { Idle, Travel, Verify, DynGoal, Explore, Done };
enum class DynPhase : uint8_t { Choose, GoToEnabler, Return, ExploreForEnabler };

// One test agent, stepped one primitive action per tick. The blocking
// solve/navigate/search procedures are flattened into a resumable state
// machine so a single runner can drive any number of agents deterministically.
//
// Per tick: publish newly seen tasks, complete the claimed task the moment
// its door is observed open, then act by phase - claim work, travel to the
// target, probe candidate enablers (lock, press, walk back, check), or
// explore the frontier.
class AgentProgram {
public:
    AgentProgram(int id, AgentSpec spec, Rng rng)
        : id_(id), spec_(std::move(spec)), rng_(std::move(rng)) {}

    int id() const { return id_; }
    Phase phase() const { return phase_; }
    bool done() const { return phase_ == Phase::Done; }
    const std::optional<TestingTask>& task() const { return task_; }
    const AgentSpec& spec() const { return spec_; }

    Action step(const Observation& obs, Vec2 pos, AgentBelief& belief, Blackboard& bb, long now) {
        const Action act = decide(obs, pos, belief, bb, now);
        if (act.kind == ActionKind::Move) heading_ = act.dir;
        return act;
    }

private:
    Action decide(const Observation& obs, Vec2 pos, AgentBelief& belief, Blackboard& bb, long now) {
        now_ = now;
        yielded_this_tick_.clear();
        publish_from_obs(obs, bb, now);

        // Reactivity: the instant the claimed target is observed open, the
        // predicate holds at this very tick, so the task completes no matter
        // which sub-activity was in progress. The verification costs a tick.
        if (task_) {
            const ObjectSighting* sight = find_sighting(obs, task_->target);
            if (sight && sight->door_open) {
                bb.log(now, "verify", id_, task_->target, "open");
                finish_success(bb, now);
                return Action::noop();
            }
            if (now - attempt_start_ >= task_->stop_budget) {
                abandon(bb, now, false, "stop_budget");
            }
        }

        // Decision loop: bookkeeping transitions are free; every pass either
        // returns a primitive action or switches phase. The cap only guards
        // against a cycle bug, which would be an internal error.
        for (int guard = 0; guard < 64; ++guard) {
            switch (phase_) {
                case Phase::Idle: {
                    if (auto act = step_idle(obs, pos, belief, bb, now)) return *act;
                    break;
                }
                case Phase::Travel: {
                    if (auto act = step_travel(obs, pos, belief, bb, now)) return *act;
                    break;
                }
                case Phase::Verify: {
                    // reached here only with the door observed closed (open is
                    // handled reactively above): deploy the dynamic goal
                    bb.log(now, "verify", id_, task_->target, "closed");
                    phase_ = Phase::DynGoal;
                    dyn_ = DynPhase::Choose;
                    break;
                }
                case Phase::DynGoal: {
                    if (auto act = step_dyngoal(obs, pos, belief, bb, now)) return *act;
                    break;
                }
                case Phase::Explore: {
                    if (auto act = step_explore(obs, pos, belief, bb, now)) return *act;
                    break;
                }
                case Phase::Done: {
                    if (wake_reason(pos, belief, bb)) {
                        phase_ = Phase::Idle;
                        break;
                    }
                    return Action::noop();
                }
            }
        }
        throw InternalError("agent decision loop did not converge");
    }

public:
    // Run teardown: abort the current attempt so no lock or claim outlives
    // the run.
    void shutdown(Blackboard& bb, long now) {
        if (locked_) {
            bb.unlock(enabler_, id_, now);
            locked_ = false;
        }
        if (task_) {
            bb.release(task_->id, id_, now, false, "shutdown");
            task_.reset();
        }
        phase_ = Phase::Done;
    }

private:
    // --- perception intake ---------------------------------------------------

    void publish_from_obs(const Observation& obs, Blackboard& bb, long now) {
        std::vector<TaskSighting> fresh;
        for (const ObjectSighting& s : obs.visible_objects) {
            if (s.kind != ObjectKind::Door) continue;
            if (!bb.all_tasks().count(s.id)) continue;
            if (!bb.discovered(s.id)) {
                TaskSighting ts;
                ts.task_id = s.id;
                ts.seen = {s.kind, s.position, s.door_open, obs.tick, obs.seq};
                ts.observed_open = s.door_open;
                fresh.push_back(ts);
            } else if (s.door_open && bb.todo().count(s.id)) {
                // unclaimed known task observed already satisfied
                bb.complete_accidental(s.id, id_, now);
            }
        }
        if (!fresh.empty()) {
            bb.publish_discovered(fresh, id_, now);
            self_published_ = true;
            fresh_discovery_ = true;
        }
    }

    static const ObjectSighting* find_sighting(const Observation& obs, const std::string& id) {
        for (const ObjectSighting& s : obs.visible_objects) {
            if (s.id == id) return &s;
        }
        return nullptr;
    }

    static bool cell_visible(const Observation& obs, Vec2 p) {
        return std::binary_search(obs.visible_cells.begin(), obs.visible_cells.end(), p);
    }

    // --- phases ---------------------------------------------------------------

    // Claimable tasks minus anything handed over this very tick.
    std::vector<TestingTask> claimable_now(const Blackboard& bb) const {
        std::vector<TestingTask> claimable = bb.claimable_for(id_);
        if (!yielded_this_tick_.empty()) {
            std::erase_if(claimable,
                          [this](const TestingTask& t) { return t.id == yielded_this_tick_; });
        }
        return claimable;
    }

    std::optional<Action> step_idle(const Observation&, Vec2 pos, AgentBelief& belief,
                                    Blackboard& bb, long now) {
        const std::vector<TestingTask> claimable = claimable_now(bb);
        if (would_select(spec_.select_h, claimable)) {
            std::optional<TestingTask> pick = select_task(spec_.select_h, claimable, belief, pos, rng_);
            if (pick && bb.claim(pick->id, id_, now)) {
                task_ = pick;
                attempt_start_ = now;
                denied_this_attempt_.clear();
                path_.clear();
                phase_ = Phase::Travel;
            }
            return std::nullopt;
        }
        if (ensure_explore_target(belief, pos, bb)) {
            enter_explore();
            return std::nullopt;
        }
        // Open tasks remain but this agent exhausted them all. Retrying from
        // scratch is worthwhile only if the world changed since the last
        // futile pass; an unchanged rerun would play out identically.
        if (!bb.todo().empty() && bb.has_exhausted_any(id_) &&
            futile_epoch_ != bb.toggle_epoch()) {
            futile_epoch_ = bb.toggle_epoch();
            bb.clear_exhaustion_for(id_);
            return std::nullopt;
        }
        park(bb);
        return std::nullopt;
    }

    std::optional<Action> step_travel(const Observation& obs, Vec2 pos, AgentBelief& belief,
                                      Blackboard& bb, long now) {
        // An eager agent hands its target over when an unoccupied teammate is
        // strictly closer to it (the teammate, being idle, claims it next):
        // the claimant-to-target distance shrinks on every hand-over. At most
        // one hand-over per tick; an idle teammate can only absorb one task.
        if (spec_.select_h.kind == SelectKind::Eager && yielded_this_tick_.empty()) {
            auto seen_target = belief.last_seen.find(task_->target);
            if (seen_target != belief.last_seen.end()) {
                const Vec2 tpos = seen_target->second.position;
                for (const auto& [aid, sighting] : belief.seen_agents) {
                    if (aid == id_ || now - sighting.tick > 1) continue;
                    if (!bb.teammate_claims_anything(aid)) continue;
                    if (bb.agent_has_claim(aid)) continue;
                    if (dist2(sighting.position, tpos) < dist2(pos, tpos)) {
                        yielded_this_tick_ = task_->id;
                        bb.release(task_->id, id_, now, false, "yield");
                        task_.reset();
                        denied_this_attempt_.clear();
                        path_.clear();
                        phase_ = Phase::Idle;
                        return std::nullopt;
                    }
                }
            }
        }
        // An eager agent takes a task as soon as it sees its target: when a
        // just-discovered target is strictly closer than the rest of the way
        // to the current one, it switches. Remaining distance shrinks on
        // every switch, so this cannot cycle.
        if (spec_.select_h.kind == SelectKind::Eager && fresh_discovery_) {
            fresh_discovery_ = false;
            const std::vector<int> dist = belief_distances(belief, pos);
            const auto d_of = [&](const std::string& target) {
                auto seen = belief.last_seen.find(target);
                if (seen == belief.last_seen.end()) return kUnreached;
                const Vec2 p = seen->second.position;
                int best = dist[static_cast<size_t>(p.y) * belief.width + p.x];
                for (const Vec2& nb : neighbors4(p)) {
                    if (!belief.in_bounds(nb)) continue;
                    best = std::min(best, dist[static_cast<size_t>(nb.y) * belief.width + nb.x]);
                }
                return best;
            };
            const int current_d = d_of(task_->target);
            std::optional<TestingTask> closer;
            int closer_d = current_d;
            for (const TestingTask& t : claimable_now(bb)) {
                const int d = d_of(t.target);
                if (d < closer_d) {
                    closer = t;
                    closer_d = d;
                }
            }
            if (closer) {
                bb.release(task_->id, id_, now, false, "eager_reselect");
                task_.reset();
                denied_this_attempt_.clear();
                path_.clear();
                if (bb.claim(closer->id, id_, now)) {
                    task_ = closer;
                    attempt_start_ = now;
                } else {
                    phase_ = Phase::Idle;
                }
                return std::nullopt;
            }
        }
        auto it = belief.last_seen.find(task_->target);
        if (it == belief.last_seen.end()) {
            // location not yet known (possible right after claiming a task
            // another agent published): search the level for it
            if (auto mv = explore_move(belief, pos, bb)) return mv;
            abandon(bb, now, true, "target_unlocated");
            return std::nullopt;
        }
        const Vec2 target = it->second.position;
        if (cell_visible(obs, target)) {
            phase_ = Phase::Verify;
            return std::nullopt;
        }
        if (auto mv = follow_path_towards(belief, pos, target, bb)) return mv;
        // no believed route: search the frontier closest to the target
        if (auto mv = explore_move(belief, pos, bb, target)) return mv;
        abandon(bb, now, true, "target_unreachable");
        return std::nullopt;
    }

    // Candidate set of the dynamic goal: buttons this agent has seen, not yet
    // tried for this target in the current attempt generation, not locked by
    // someone else and not lock-denied during this attempt. The pick is the
    // find-heuristic's best; reachable tells whether that pick can be walked
    // to under the current belief.
    struct CandidateScan {
        bool any = false;
        bool reachable = false;
        std::string best;
    };

    CandidateScan scan_candidates(const AgentBelief& belief, const Blackboard& bb, Vec2 pos) const {
        const int gen = bb.attempt_generation(task_->id);
        std::vector<std::string> delta;
        for (const auto& [oid, seen] : belief.last_seen) {
            if (seen.kind != ObjectKind::Button) continue;
            if (belief.tried(task_->target, oid, gen)) continue;
            if (bb.locked_by_other(oid, id_)) continue;
            if (denied_this_attempt_.count(oid)) continue;
            delta.push_back(oid);
        }
        CandidateScan out;
        if (delta.empty()) return out;
        out.any = true;
        const auto [best, dist] = choose_enabler_ranked(spec_.find_h, delta, pos, belief);
        out.best = best;
        out.reachable = dist != kUnreached;
        return out;
    }

    std::optional<Action> step_dyngoal(const Observation& obs, Vec2 pos, AgentBelief& belief,
                                       Blackboard& bb, long now) {
        switch (dyn_) {
            case DynPhase::Choose: {
                const CandidateScan scan = scan_candidates(belief, bb, pos);
                if (!scan.reachable) {
                    if (ensure_explore_target(belief, pos, bb)) {
                        dyn_ = DynPhase::ExploreForEnabler;
                        return std::nullopt;
                    }
                    abandon(bb, now, true,
                            scan.any ? "enablers_unreachable" : "enablers_exhausted");
                    return std::nullopt;
                }
                if (!bb.lock(scan.best, id_, now)) {
                    denied_this_attempt_.insert(scan.best);
                    return std::nullopt;  // re-choose among the rest
                }
                belief.mark_tried(task_->target, scan.best, bb.attempt_generation(task_->id));
                enabler_ = scan.best;
                locked_ = true;
                path_.clear();
                dyn_ = DynPhase::GoToEnabler;
                return std::nullopt;
            }
            case DynPhase::GoToEnabler: {
                const Vec2 bpos = belief.last_seen.at(enabler_).position;
                if (chebyshev(pos, bpos) <= 1) {
                    path_.clear();
                    dyn_ = DynPhase::Return;
                    return Action::interact(enabler_);
                }
                if (auto mv = follow_path_towards(belief, pos, bpos, bb)) return mv;
                // route lost (a door closed on the way): give up on this
                // candidate, it stays marked for this attempt generation
                bb.unlock(enabler_, id_, now);
                locked_ = false;
                dyn_ = DynPhase::Choose;
                return std::nullopt;
            }
            case DynPhase::Return: {
                const Vec2 target = belief.last_seen.at(task_->target).position;
                if (cell_visible(obs, target)) {
                    // the reactive check above handles the open case, so the
                    // press did not open the target door
                    bb.log(now, "verify", id_, task_->target, "closed");
                    bb.unlock(enabler_, id_, now);
                    locked_ = false;
                    dyn_ = DynPhase::Choose;
                    return std::nullopt;
                }
                if (auto mv = follow_path_towards(belief, pos, target, bb)) return mv;
                if (auto mv = explore_move(belief, pos, bb, target)) return mv;
                bb.unlock(enabler_, id_, now);
                locked_ = false;
                abandon(bb, now, true, "target_unreachable");
                return std::nullopt;
            }
            case DynPhase::ExploreForEnabler: {
                if (scan_candidates(belief, bb, pos).reachable) {
                    dyn_ = DynPhase::Choose;  // a workable candidate appeared
                    return std::nullopt;
                }
                if (auto mv = explore_move(belief, pos, bb)) return mv;
                abandon(bb, now, true, "enablers_exhausted");
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    std::optional<Action> step_explore(const Observation&, Vec2 pos, AgentBelief& belief,
                                       Blackboard& bb, long now) {
        (void)now;
        switch (spec_.explore.kind) {
            case ExplorePolicyKind::Gradual:
                // stop as soon as selectable work exists, own discovery or a
                // teammate's: the solver loop re-checks the task pool between
                // primitive actions
                if (would_select(spec_.select_h, claimable_now(bb))) {
                    phase_ = Phase::Idle;
                    return std::nullopt;
                }
                break;
            case ExplorePolicyKind::Aggressive:
                break;
            case ExplorePolicyKind::Budget:
                if (explore_ticks_ >= spec_.explore.budget) {
                    if (would_select(spec_.select_h, claimable_now(bb))) {
                        phase_ = Phase::Idle;
                        return std::nullopt;
                    }
                    explore_ticks_ = 0;  // nothing to take: start a new budget round
                }
                break;
        }
        if (auto mv = explore_move(belief, pos, bb)) {
            ++explore_ticks_;
            return mv;
        }
        phase_ = Phase::Idle;  // frontier exhausted
        return std::nullopt;
    }

    // A parked agent re-enters the loop when anything it could act on
    // appears: fresh selectable work, new frontier, or a world change that
    // invalidates its futile verdict.
    bool wake_reason(Vec2 pos, AgentBelief& belief, Blackboard& bb) {
        if (would_select(spec_.select_h, claimable_now(bb))) return true;
        if (ensure_explore_target(belief, pos, bb)) return true;
        if (!bb.todo().empty() && bb.has_exhausted_any(id_) && futile_epoch_ != bb.toggle_epoch()) {
            return true;
        }
        return false;
    }

    void park(Blackboard& bb) {
        futile_epoch_ = bb.toggle_epoch();
        phase_ = Phase::Done;
    }

    void enter_explore() {
        explore_ticks_ = 0;
        self_published_ = false;
        phase_ = Phase::Explore;
    }

    // --- task conclusion -------------------------------------------------------

    void finish_success(Blackboard& bb, long now) {
        if (locked_) {
            bb.unlock(enabler_, id_, now);
            locked_ = false;
        }
        bb.complete(task_->id, id_, now);
        task_.reset();
        denied_this_attempt_.clear();
        path_.clear();
        phase_ = Phase::Idle;
    }

    void abandon(Blackboard& bb, long now, bool exhausted, const std::string& reason) {
        if (locked_) {
            bb.unlock(enabler_, id_, now);
            locked_ = false;
        }
        bb.release(task_->id, id_, now, exhausted, reason);
        task_.reset();
        denied_this_attempt_.clear();
        path_.clear();
        phase_ = Phase::Idle;
    }

    // --- movement helpers --------------------------------------------------------

    // Keeps a cached path to `goal` (or a cell adjacent to it when the goal
    // cell itself cannot be planned onto, e.g. a closed door) and emits the
    // next move. Returns nullopt when no believed route exists. Failed plans
    // are remembered until the belief or the doors change, so a hopeless goal
    // costs one search, not one per tick.
    std::optional<Action> follow_path_towards(const AgentBelief& belief, Vec2 pos, Vec2 goal,
                                              const Blackboard& bb) {
        if (path_valid(belief, pos, goal)) {
            const Vec2 next = path_[path_i_ + 1];
            if (belief.traversable(next)) {
                ++path_i_;
                return Action::move(dir_between(pos, next));
            }
        }
        const PlanKey key{goal, belief.cells_version, bb.toggle_epoch()};
        if (plan_fail_key_ && *plan_fail_key_ == key) return std::nullopt;
        plan_path(belief, pos, goal);
        if (path_.empty()) {
            plan_fail_key_ = key;
            return std::nullopt;
        }
        if (path_i_ + 1 >= path_.size()) return std::nullopt;  // already there
        const Vec2 next = path_[path_i_ + 1];
        ++path_i_;
        return Action::move(dir_between(pos, next));
    }

    bool path_valid(const AgentBelief& belief, Vec2 pos, Vec2 goal) {
        if (path_.empty() || path_goal_ != goal) return false;
        if (path_i_ + 1 >= path_.size() || path_[path_i_] != pos) return false;
        (void)belief;
        return true;
    }

    void plan_path(const AgentBelief& belief, Vec2 pos, Vec2 goal) {
        path_.clear();
        path_goal_ = goal;
        path_i_ = 0;
        PathResult direct = find_path(belief, pos, goal);
        if (direct.found()) {
            path_ = std::move(direct.cells);
            return;
        }
        // goal cell may be a closed door or otherwise unplannable: aim for
        // the best adjacent cell instead
        PathResult best;
        for (const Vec2& n : neighbors4(goal)) {
            if (!belief.in_bounds(n)) continue;
            PathResult r = find_path(belief, pos, n);
            if (r.found() && (!best.found() || r.length() < best.length())) best = std::move(r);
        }
        if (best.found()) path_ = std::move(best.cells);
    }

    // One step of frontier exploration; nullopt when no reachable frontier.
    // With a focus point (a task target whose route is unknown) the agent
    // works the frontier nearest to that point; otherwise it takes the
    // nearest frontier, leaving cells that a visible teammate is closer to.
    std::optional<Action> explore_move(AgentBelief& belief, Vec2 pos, Blackboard& bb,
                                       std::optional<Vec2> focus = std::nullopt) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            if (!ensure_explore_target(belief, pos, bb, focus)) return std::nullopt;
            const Vec2 goal = *explore_target_;
            if (!path_valid(belief, pos, goal)) plan_path(belief, pos, goal);
            if (path_.empty() || path_i_ + 1 >= path_.size() ||
                !belief.traversable(path_[path_i_ + 1])) {
                // target reached or route lost: acquire a fresh one
                explore_target_.reset();
                frontier_probe_key_ = {};
                continue;
            }
            const Vec2 next = path_[path_i_ + 1];
            ++path_i_;
            return Action::move(dir_between(pos, next));
        }
        return Action::noop();  // converges next tick once the new area is observed
    }

    // Re-targets only when the cached frontier target got resolved. The probe
    // key (cells learned, doors toggled, agent position, focus) bounds the
    // BFS work: while nothing relevant changed, a previous "no reachable
    // frontier" answer stays valid.
    bool ensure_explore_target(AgentBelief& belief, Vec2 pos, Blackboard& bb,
                               std::optional<Vec2> focus = std::nullopt) {
        if (explore_target_ && belief.frontier_cache.count(*explore_target_) &&
            *explore_target_ != pos && focus == explore_focus_) {
            return true;
        }
        const ProbeKey key{belief.cells_version, bb.toggle_epoch(), pos, focus};
        if (frontier_probe_key_ && *frontier_probe_key_ == key) {
            return explore_target_.has_value() && *explore_target_ != pos;
        }
        frontier_probe_key_ = key;
        explore_focus_ = focus;
        explore_target_ = pick_explore_target(belief, pos, focus);
        path_.clear();
        path_goal_ = {-1, -1};
        return explore_target_.has_value();
    }

    std::optional<Vec2> pick_explore_target(const AgentBelief& belief, Vec2 pos,
                                            std::optional<Vec2> focus) const {
        if (belief.frontier_cache.empty()) return std::nullopt;
        const std::vector<int> dist = belief_distances(belief, pos);
        const auto reach = [&](Vec2 f) {
            return dist[static_cast<size_t>(f.y) * belief.width + f.x];
        };

        if (focus) {
            // head for the frontier nearest to the point of interest
            std::optional<Vec2> best;
            int64_t best_d2 = 0;
            for (const Vec2& f : belief.frontier_cache) {
                if (reach(f) == kUnreached) continue;
                const int64_t d2 = dist2(f, *focus);
                if (!best || d2 < best_d2) {
                    best = f;
                    best_d2 = d2;
                }
            }
            return best;
        }

        // Nearest frontier, ceding cells a freshly-sighted teammate is
        // strictly closer to; when teammates cover everything, take nearest.
        std::vector<Vec2> teammates;
        for (const auto& [aid, seen] : belief.seen_agents) {
            if (aid != id_ && now_ - seen.tick <= 1) teammates.push_back(seen.position);
        }
        std::optional<Vec2> best, best_unfiltered;
        int best_d = kUnreached, best_unfiltered_d = kUnreached;
        for (const Vec2& f : belief.frontier_cache) {
            const int d = reach(f);
            if (d == kUnreached) continue;
            if (d < best_unfiltered_d) {
                best_unfiltered = f;
                best_unfiltered_d = d;
            }
            bool ceded = false;
            for (const Vec2& apos : teammates) {
                if (dist2(apos, f) < dist2(pos, f)) {
                    ceded = true;
                    break;
                }
            }
            if (!ceded && d < best_d) {
                best = f;
                best_d = d;
            }
        }
        return best ? best : best_unfiltered;
    }

    int id_;
    AgentSpec spec_;
    Rng rng_;

    Phase phase_ = Phase::Idle;
    std::optional<TestingTask> task_;
    long attempt_start_ = 0;

    DynPhase dyn_ = DynPhase::Choose;
    std::string enabler_;
    bool locked_ = false;
    std::set<std::string> denied_this_attempt_;

    using ProbeKey = std::tuple<uint64_t, uint64_t, Vec2, std::optional<Vec2>>;
    using PlanKey = std::tuple<Vec2, uint64_t, uint64_t>;

    std::vector<Vec2> path_;
    size_t path_i_ = 0;
    Vec2 path_goal_{-1, -1};
    std::optional<PlanKey> plan_fail_key_;

    std::optional<Vec2> explore_target_;
    std::optional<Vec2> explore_focus_;
    std::optional<ProbeKey> frontier_probe_key_;
    Dir heading_ = Dir::East;
    bool self_published_ = false;
    bool fresh_discovery_ = false;
    std::string yielded_this_tick_;
    long now_ = 0;
    long explore_ticks_ = 0;
    uint64_t futile_epoch_ = ~0ull;
};

}  // namespace magt

#endif  // MAGT_SOLVER_HPP
