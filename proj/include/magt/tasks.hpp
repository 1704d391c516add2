#ifndef MAGT_TASKS_HPP
#define MAGT_TASKS_HPP

#include <map>
#include <string>
#include <vector>

#include "magt/level.hpp"

namespace magt {

enum class PsiKind : uint8_t { DoorOpen };

// A reachability testing task: verify that a state satisfying the predicate
// on the target object is reachable before the per-attempt stop budget fires.
struct TestingTask {
    std::string id;       // equals the target door id
    std::string target;   // door object id
    PsiKind psi = PsiKind::DoorOpen;
    long stop_budget = 0;  // ticks per attempt
    int value = 0;         // points of the target door

    friend bool operator<(const TestingTask& a, const TestingTask& b) { return a.id < b.id; }
    friend bool operator==(const TestingTask& a, const TestingTask& b) { return a.id == b.id; }
};

// One task per door: verify the door can be observed open.
inline std::map<std::string, TestingTask> tasks_from_level(const Level& level, long per_task_budget) {
    std::map<std::string, TestingTask> tasks;
    for (const std::string& did : level.door_ids()) {
        TestingTask t;
        t.id = did;
        t.target = did;
        t.psi = PsiKind::DoorOpen;
        t.stop_budget = per_task_budget;
        t.value = level.find(did)->points;
        tasks.emplace(t.id, t);
    }
    return tasks;
}

}  // namespace magt

#endif  // MAGT_TASKS_HPP
