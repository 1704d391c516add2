#ifndef MAGT_BLACKBOARD_HPP
#define MAGT_BLACKBOARD_HPP

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "magt/belief.hpp"
#include "magt/tasks.hpp"

namespace magt {

enum class SyncMode : uint8_t { Basic, Extended };

struct AuditEvent {
    long tick = 0;
    std::string event;
    int agent = -1;
    std::string subject;  // task or object id
    std::string extra;
};

struct DoneRecord {
    long tick = 0;
    int agent = -1;
    bool accidental = false;
};

struct TaskSighting {
    std::string task_id;
    SeenObject seen;       // the discovery observation of the target
    bool observed_open = false;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Shared coordination substrate: the task sets, claims, enabler locks and the
// synchronization protocols. Every operation is atomic per call; the
// reference runner serializes calls, and the audit log records every
// state-changing event for offline invariant checks.
class Blackboard {
public:
    Blackboard() = default;
    Blackboard(std::map<std::string, TestingTask> tasks, SyncMode mode)
        : all_tasks_(std::move(tasks)), sync_mode_(mode) {}

    // --- task lifecycle -----------------------------------------------------

    // Newly seen task targets enter toDo; targets already satisfying their
    // predicate when first seen complete immediately as accidental.
    // Re-publication is an idempotent no-op.
    void publish_discovered(const std::vector<TaskSighting>& sightings, int by, long tick) {
        for (const TaskSighting& s : sightings) {
            if (!all_tasks_.count(s.task_id)) continue;
            if (discovered(s.task_id)) continue;
            target_info_.emplace(s.task_id, s.seen);
            if (s.observed_open) {
                done_[s.task_id] = {tick, by, true};
                completion_order_.push_back(s.task_id);
                log(tick, "discover", by, s.task_id, "open");
                log(tick, "complete", by, s.task_id, "accidental");
            } else {
                todo_.insert(s.task_id);
                log(tick, "discover", by, s.task_id, "");
            }
        }
    }

    // An agent saw an unclaimed, discovered task's door already open; nobody
    // worked for it, so it completes as accidental.
    void complete_accidental(const std::string& task, int by, long tick) {
        if (done_.count(task)) return;
        if (!todo_.count(task)) return;  // claimed: the claimant will verify it
        todo_.erase(task);
        done_[task] = {tick, by, true};
        completion_order_.push_back(task);
        log(tick, "complete", by, task, "accidental");
    }

    bool claim(const std::string& task, int by, long tick) {
        if (!todo_.count(task)) {
            log(tick, "claim_denied", by, task, "");
            return false;
        }
        todo_.erase(task);
        claims_[task] = by;
        log(tick, "claim", by, task, "");
        return true;
    }

    void complete(const std::string& task, int by, long tick) {
        if (done_.count(task)) return;  // second completion attempt is a no-op
        auto it = claims_.find(task);
        if (it == claims_.end() || it->second != by) {
            throw InternalError("complete of task '" + task + "' not claimed by agent");
        }
        claims_.erase(it);
        done_[task] = {tick, by, false};
        completion_order_.push_back(task);
        log(tick, "complete", by, task, "");
    }

    void release(const std::string& task, int by, long tick, bool exhausted,
                 const std::string& reason) {
        auto it = claims_.find(task);
        if (it == claims_.end() || it->second != by) {
            throw InternalError("release of task '" + task + "' not claimed by agent");
        }
        claims_.erase(it);
        todo_.insert(task);
        if (exhausted) {
            exhausted_.insert({by, task});
            ++attempt_gen_[task];  // stale tried-marks become inert
        }
        log(tick, "release", by, task, reason);
    }

    // --- enabler locks --------------------------------------------------------

    bool lock(const std::string& obj, int by, long tick) {
        if (locks_.count(obj)) {
            log(tick, "lock_denied", by, obj, "");
            return false;
        }
        locks_[obj] = by;
        log(tick, "lock", by, obj, "");
        return true;
    }

    void unlock(const std::string& obj, int by, long tick) {
        auto it = locks_.find(obj);
        if (it == locks_.end() || it->second != by) {
            throw InternalError("unlock of '" + obj + "' by non-holder");
        }
        locks_.erase(it);
        log(tick, "unlock", by, obj, "");
    }

    bool locked_by_other(const std::string& obj, int agent) const {
        auto it = locks_.find(obj);
        return it != locks_.end() && it->second != agent;
    }

    bool agent_has_claim(int agent) const {
        for (const auto& [task, holder] : claims_) {
            if (holder == agent) return true;
        }
        return false;
    }

    // Team composition is fixed at deployment and known to everyone; agents
    // use it to tell which teammates would actually pick up a handed-over
    // task.
    void set_team_claims_anything(std::vector<bool> flags) { team_claims_anything_ = std::move(flags); }
    bool teammate_claims_anything(int agent) const {
        return agent >= 0 && agent < static_cast<int>(team_claims_anything_.size()) &&
               team_claims_anything_[static_cast<size_t>(agent)];
    }

    // --- queries --------------------------------------------------------------

    bool discovered(const std::string& task) const {
        return todo_.count(task) || claims_.count(task) || done_.count(task);
    }

    // Tasks this agent may claim: toDo minus the ones it has exhausted.
    std::vector<TestingTask> claimable_for(int agent) const {
        std::vector<TestingTask> out;
        for (const std::string& id : todo_) {
            if (!exhausted_.count({agent, id})) out.push_back(all_tasks_.at(id));
        }
        return out;
    }

    int attempt_generation(const std::string& task) const {
        auto it = attempt_gen_.find(task);
        return it == attempt_gen_.end() ? 0 : it->second;
    }

    bool all_done() const { return done_.size() == all_tasks_.size(); }

    // Any door toggle can unblock a previously hopeless task, so stale
    // can't-do records are dropped whenever the world changes. The epoch
    // counter lets agents tell whether anything changed since they last gave
    // up, making futile retries detectable.
    void world_changed() {
        ++toggle_epoch_;
        exhausted_.clear();
    }
    uint64_t toggle_epoch() const { return toggle_epoch_; }
    void clear_exhaustion_for(int agent) {
        for (auto it = exhausted_.begin(); it != exhausted_.end();) {
            it = (it->first == agent) ? exhausted_.erase(it) : ++it;
        }
    }
    bool has_exhausted(int agent, const std::string& task) const {
        return exhausted_.count({agent, task}) > 0;
    }
    bool has_exhausted_any(int agent) const {
        auto it = exhausted_.lower_bound({agent, ""});
        return it != exhausted_.end() && it->first == agent;
    }

    const std::map<std::string, TestingTask>& all_tasks() const { return all_tasks_; }
    const std::set<std::string>& todo() const { return todo_; }
    const std::map<std::string, DoneRecord>& done() const { return done_; }
    const std::map<std::string, int>& claims() const { return claims_; }
    const std::map<std::string, int>& locks() const { return locks_; }
    SyncMode sync_mode() const { return sync_mode_; }
    const std::vector<std::string>& completion_order() const { return completion_order_; }

    // --- synchronization --------------------------------------------------------

    // Basic: shares the task sets (implicit, they live here) plus the target
    // objects' discovery sightings. Extended: additionally cross-applies the
    // agents' observations since the last sync, unions tried-marks (together
    // equivalent to a pairwise merge_beliefs fold) and shares everyone's
    // current position.
    void sync(std::vector<AgentBelief>& beliefs,
              std::vector<std::vector<Observation>>& pending_obs, const Level& level, long tick,
              const std::vector<Vec2>* agent_positions = nullptr, long seq_base = 0) {
        for (AgentBelief& b : beliefs) {
            for (const auto& [task_id, seen] : target_info_) {
                b.note_object(all_tasks_.at(task_id).target, seen);
            }
        }
        if (sync_mode_ == SyncMode::Extended) {
            for (size_t a = 0; a < beliefs.size(); ++a) {
                for (const Observation& obs : pending_obs[a]) {
                    for (size_t b = 0; b < beliefs.size(); ++b) {
                        if (b != a) update_belief(beliefs[b], obs, level);
                    }
                }
            }
            std::set<TriedMark> all_marks;
            for (const AgentBelief& b : beliefs) {
                all_marks.insert(b.tried_marks.begin(), b.tried_marks.end());
            }
            for (AgentBelief& b : beliefs) {
                if (b.tried_marks != all_marks) {
                    b.tried_marks = all_marks;
                    ++b.version;
                }
            }
            if (agent_positions) {
                for (AgentBelief& b : beliefs) {
                    for (size_t a = 0; a < agent_positions->size(); ++a) {
                        const SeenAgent seen{(*agent_positions)[a], tick,
                                             seq_base + static_cast<long>(a)};
                        auto it = b.seen_agents.find(static_cast<int>(a));
                        if (it == b.seen_agents.end() ||
                            std::tie(seen.tick, seen.seq) >
                                std::tie(it->second.tick, it->second.seq)) {
                            b.seen_agents[static_cast<int>(a)] = seen;
                            ++b.version;
                        }
                    }
                }
            }
        }
        for (auto& v : pending_obs) v.clear();
        log(tick, "sync", -1, "", sync_mode_ == SyncMode::Extended ? "extended" : "basic");
    }

    // --- audit -------------------------------------------------------------------

    void log(long tick, const std::string& event, int agent, const std::string& subject,
             const std::string& extra) {
        audit_.push_back({tick, event, agent, subject, extra});
    }

    const std::vector<AuditEvent>& audit_log() const { return audit_; }

    std::string export_audit() const {
        std::ostringstream out;
        out << "tick,event,agent,task_or_obj,extra\n";
        for (const AuditEvent& e : audit_) {
            out << e.tick << ',' << e.event << ',' << e.agent << ',' << e.subject << ',' << e.extra
                << '\n';
        }
        return out.str();
    }

    // Discovered tasks sit in exactly one of toDo / claims / done.
    void check_partition() const {
        size_t discovered_count = 0;
        for (const auto& [id, task] : all_tasks_) {
            const int in = (todo_.count(id) ? 1 : 0) + (claims_.count(id) ? 1 : 0) +
                           (done_.count(id) ? 1 : 0);
            if (in > 1) throw InternalError("task '" + id + "' in multiple lifecycle sets");
            discovered_count += static_cast<size_t>(in);
        }
        if (discovered_count != todo_.size() + claims_.size() + done_.size()) {
            throw InternalError("lifecycle sets contain unknown task ids");
        }
    }

private:
    std::map<std::string, TestingTask> all_tasks_;
    std::set<std::string> todo_;
    std::map<std::string, DoneRecord> done_;
    std::map<std::string, int> claims_;
    std::map<std::string, int> locks_;
    std::map<std::string, SeenObject> target_info_;
    std::set<std::pair<int, std::string>> exhausted_;
    std::map<std::string, int> attempt_gen_;
    uint64_t toggle_epoch_ = 0;
    std::vector<std::string> completion_order_;
    std::vector<bool> team_claims_anything_;
    SyncMode sync_mode_ = SyncMode::Basic;
    std::vector<AuditEvent> audit_;
};

}  // namespace magt

#endif  // MAGT_BLACKBOARD_HPP
