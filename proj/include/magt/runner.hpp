#ifndef MAGT_RUNNER_HPP
#define MAGT_RUNNER_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "magt/levelgen.hpp"
#include "magt/solver.hpp"
#include "magt/world.hpp"

namespace magt {

struct RunConfig {
    std::vector<AgentSpec> agents;
    SyncMode sync_mode = SyncMode::Basic;
    int view_distance = 6;
    long global_budget = 100000;
    long per_task_budget = 0;  // 0: derived from level size (400 per 10 cells of width)
    uint64_t seed = 1;
    long sync_every = 1;
    long sync_tax = 0;

    void check() const {
        if (agents.empty()) throw std::invalid_argument("at least one agent required");
        if (view_distance < 1) throw std::invalid_argument("view_distance must be >= 1");
        if (global_budget <= 0) throw std::invalid_argument("global_budget must be > 0");
        if (sync_every <= 0) throw std::invalid_argument("sync_every must be > 0");
    }
};

inline long derive_per_task_budget(const Level& level) {
    const int scale = std::max(1, std::min(level.width, level.height) / 10);
    return 400L * scale;
}

struct MetricsReport {
    long makespan = -1;  // ticks until every task was done; -1 = did not finish
    std::string termination;
    std::vector<std::pair<long, int>> points_timeline;  // (tick, cumulative points)
    std::map<std::string, DoneRecord> per_task;
    std::vector<std::string> unfinished;  // sorted task ids
    std::map<std::string, int> task_values;
    double exploration_coverage = 0.0;
    long interactions = 0;
    int accidental_count = 0;
    int points_final = 0;
    long ticks_elapsed = 0;
    std::map<std::string, bool> final_door_open;
    std::vector<Vec2> final_agent_pos;
    std::vector<AuditEvent> audit;
};

// Appends a monotone timeline entry; credits landing on the same tick merge.
inline void record_points(MetricsReport& report, long tick, int value) {
    if (!report.points_timeline.empty() && report.points_timeline.back().first == tick) {
        report.points_timeline.back().second += value;
        return;
    }
    const int prev = report.points_timeline.empty() ? 0 : report.points_timeline.back().second;
    report.points_timeline.push_back({tick, prev + value});
}

// Executes one deterministic run: builds the world and the agents, drives the
// tick loop in agent-id order, synchronizes per cadence, and stops when all
// tasks are done, the budget runs out, or every agent is parked with nothing
// left to try.
inline MetricsReport run(const Level& level, const RunConfig& cfg) {
    cfg.check();
    const int n = static_cast<int>(cfg.agents.size());
    const long per_task = cfg.per_task_budget > 0 ? cfg.per_task_budget : derive_per_task_budget(level);

    WorldState state(level, n);
    Blackboard bb(tasks_from_level(level, per_task), cfg.sync_mode);
    {
        std::vector<bool> greedy;
        for (const AgentSpec& spec : cfg.agents) {
            greedy.push_back(spec.select_h.kind == SelectKind::Eager ||
                             spec.select_h.kind == SelectKind::Random);
        }
        bb.set_team_claims_anything(std::move(greedy));
    }

    Rng master(cfg.seed);
    std::vector<AgentBelief> beliefs;
    std::vector<AgentProgram> programs;
    std::vector<std::vector<Observation>> pending(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        beliefs.emplace_back(a, level.width, level.height);
        programs.emplace_back(a, cfg.agents[static_cast<size_t>(a)], master.split(static_cast<uint64_t>(a) + 1));
    }

    MetricsReport report;
    long tick = 0;
    long seq = 0;
    size_t completions_seen = 0;
    bool parked_sync_done = false;

    while (true) {
        if (tick >= cfg.global_budget) {
            report.termination = "budget";
            break;
        }
        state.tick = tick;

        for (int a = 0; a < n; ++a) {
            Observation obs = state.observe(a, cfg.view_distance);
            obs.seq = seq++;
            update_belief(beliefs[static_cast<size_t>(a)], obs, level);
            pending[static_cast<size_t>(a)].push_back(obs);
            const Vec2 pos = state.agent_pos[static_cast<size_t>(a)];
            const Action act =
                programs[static_cast<size_t>(a)].step(obs, pos, beliefs[static_cast<size_t>(a)], bb, tick);
            switch (act.kind) {
                case ActionKind::Move: {
                    const MoveResult r = state.step_move(a, act.dir);
                    bb.log(tick, "move", a, "",
                           std::string(1, dir_char(act.dir)) + (r == MoveResult::Moved ? ":ok" : ":blocked"));
                    break;
                }
                case ActionKind::Interact: {
                    std::vector<std::string> toggled;
                    const InteractResult r = state.interact(a, act.object, &toggled);
                    if (r != InteractResult::Toggled) {
                        throw InternalError("agent " + std::to_string(a) + " pressed '" + act.object +
                                            "' illegally");
                    }
                    std::string extra = "ok";
                    for (const std::string& d : toggled) extra += "+" + d;
                    bb.log(tick, "interact", a, act.object, extra);
                    ++report.interactions;
                    if (!toggled.empty()) bb.world_changed();
                    break;
                }
                case ActionKind::NoOp:
                    break;
            }
        }

        // credit completions that landed this tick
        const auto& order = bb.completion_order();
        int credited = 0;
        for (; completions_seen < order.size(); ++completions_seen) {
            credited += bb.all_tasks().at(order[completions_seen]).value;
        }
        if (credited > 0) record_points(report, tick, credited);

        if (bb.all_done()) {
            report.termination = "all_done";
            report.makespan = tick;
            break;
        }

        bool all_parked = true;
        for (const AgentProgram& p : programs) {
            if (!p.done()) {
                all_parked = false;
                break;
            }
        }
        if (all_parked) {
            // one post-park sync round lets backlogged shared info wake
            // someone before the run is declared finished
            if (parked_sync_done) {
                report.termination = "all_agents_done";
                break;
            }
            bb.sync(beliefs, pending, level, tick, &state.agent_pos, seq);
            seq += n;
            parked_sync_done = true;
        } else {
            parked_sync_done = false;
            if (tick % cfg.sync_every == 0) {
                bb.sync(beliefs, pending, level, tick, &state.agent_pos, seq);
                seq += n;
                tick += cfg.sync_tax;
            }
        }
        tick += 1;
    }

    for (auto& p : programs) p.shutdown(bb, tick);
    bb.log(tick, "terminate", -1, "", report.termination);

    report.ticks_elapsed = tick;
    report.per_task = bb.done();
    for (const auto& [id, rec] : bb.done()) {
        if (rec.accidental) ++report.accidental_count;
        report.points_final += bb.all_tasks().at(id).value;
    }
    for (const auto& [id, task] : bb.all_tasks()) {
        report.task_values[id] = task.value;
        if (!bb.done().count(id)) report.unfinished.push_back(id);
    }

    long floor_total = 0;
    std::vector<bool> seen(level.cells.size(), false);
    for (size_t i = 0; i < level.cells.size(); ++i) {
        if (level.cells[i] == CellKind::Floor) ++floor_total;
        for (const AgentBelief& b : beliefs) {
            if (b.known_cells[i] != KnownCell::Unknown) {
                seen[i] = true;
                break;
            }
        }
    }
    long floor_seen = 0;
    for (size_t i = 0; i < level.cells.size(); ++i) {
        if (level.cells[i] == CellKind::Floor && seen[i]) ++floor_seen;
    }
    report.exploration_coverage =
        floor_total == 0 ? 0.0 : static_cast<double>(floor_seen) / static_cast<double>(floor_total);

    report.final_door_open = state.door_open;
    report.final_agent_pos = state.agent_pos;
    report.audit = bb.audit_log();
    return report;
}

// Re-applies the logged primitive actions to a fresh world; the result must
// reproduce the final truth state of the original run.
inline WorldState replay_audit(const Level& level, int num_agents,
                               const std::vector<AuditEvent>& audit) {
    WorldState state(level, num_agents);
    for (const AuditEvent& e : audit) {
        if (e.event == "move") {
            Dir d = Dir::North;
            switch (e.extra.empty() ? '?' : e.extra[0]) {
                case 'N': d = Dir::North; break;
                case 'S': d = Dir::South; break;
                case 'E': d = Dir::East; break;
                case 'W': d = Dir::West; break;
                default: throw InternalError("bad move event in audit log");
            }
            state.step_move(e.agent, d);
        } else if (e.event == "interact") {
            state.interact(e.agent, e.subject);
        }
        state.tick = e.tick;
    }
    return state;
}

// Task-lifecycle CSV: one row per discover/claim/release/complete event plus
// a final terminate row, with the cumulative points after each row.
inline std::string metrics_csv(const MetricsReport& report) {
    std::string out = "tick,event,agent,task,points_cum,detail\n";
    int cum = 0;
    for (const AuditEvent& e : report.audit) {
        if (e.event != "discover" && e.event != "claim" && e.event != "release" &&
            e.event != "complete" && e.event != "terminate") {
            continue;
        }
        std::string detail = e.extra;
        if (e.event == "complete") {
            const int value = report.task_values.at(e.subject);
            cum += value;
            detail += (detail.empty() ? "" : ";");
            detail += "value=" + std::to_string(value);
        }
        out += std::to_string(e.tick) + ',' + e.event + ',' + std::to_string(e.agent) + ',' +
               e.subject + ',' + std::to_string(cum) + ',' + detail + '\n';
    }
    return out;
}

inline std::string summary_text(const MetricsReport& report) {
    char cov[32];
    std::snprintf(cov, sizeof(cov), "%.4f", report.exploration_coverage);
    std::string out;
    out += "makespan: " + (report.makespan < 0 ? std::string("dnf") : std::to_string(report.makespan)) + '\n';
    out += "termination: " + report.termination + '\n';
    out += "ticks_elapsed: " + std::to_string(report.ticks_elapsed) + '\n';
    out += "points_final: " + std::to_string(report.points_final) + '\n';
    out += "tasks_done: " + std::to_string(report.per_task.size()) + '\n';
    out += "tasks_total: " + std::to_string(report.task_values.size()) + '\n';
    out += "accidental_count: " + std::to_string(report.accidental_count) + '\n';
    out += "interactions: " + std::to_string(report.interactions) + '\n';
    out += "exploration_coverage: " + std::string(cov) + '\n';
    std::string unf;
    for (const std::string& id : report.unfinished) {
        if (!unf.empty()) unf += ',';
        unf += id;
    }
    out += "unfinished: " + unf + '\n';
    return out;
}

}  // namespace magt

#endif  // MAGT_RUNNER_HPP
