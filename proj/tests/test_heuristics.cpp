#include "doctest.h"
#include "magt/heuristics.hpp"
#include "magt/level_io.hpp"

using namespace magt;

namespace {

TestingTask make_task(const std::string& id, int value) {
    TestingTask t;
    t.id = id;
    t.target = id;
    t.value = value;
    t.stop_budget = 100;
    return t;
}

AgentBelief open_belief(int w, int h) {
    AgentBelief b(0, w, h);
    Observation obs;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) obs.visible_cells.push_back({x, y});
    }
    Level level;
    level.width = w;
    level.height = h;
    level.cells.assign(static_cast<size_t>(w) * h, CellKind::Floor);
    update_belief(b, obs, level);
    return b;
}

}  // namespace

TEST_CASE("value-threshold selectors") {
    const std::vector<TestingTask> tasks{make_task("d0", 1), make_task("d1", 1), make_task("d2", 10)};
    AgentBelief belief = open_belief(5, 5);
    Rng rng(1);

    const auto high = select_task({SelectKind::HighValue, 5}, tasks, belief, {0, 0}, rng);
    REQUIRE(high.has_value());
    CHECK(high->id == "d2");

    const auto low = select_task({SelectKind::LowValue, 5},
                                 {make_task("d2", 10), make_task("d3", 10)}, belief, {0, 0}, rng);
    CHECK_FALSE(low.has_value());

    const auto low2 = select_task({SelectKind::LowValue, 5}, tasks, belief, {0, 0}, rng);
    REQUIRE(low2.has_value());
    CHECK(low2->value == 1);
}

TEST_CASE("explorer never selects, random always does") {
    const std::vector<TestingTask> tasks{make_task("d0", 1), make_task("d1", 10)};
    AgentBelief belief = open_belief(5, 5);
    Rng rng(2);
    CHECK_FALSE(select_task({SelectKind::Explorer, 5}, tasks, belief, {0, 0}, rng).has_value());
    CHECK(select_task({SelectKind::Random, 5}, tasks, belief, {0, 0}, rng).has_value());
    CHECK_FALSE(select_task({SelectKind::Random, 5}, {}, belief, {0, 0}, rng).has_value());
}

TEST_CASE("would_select mirrors select_task without consuming randomness") {
    const std::vector<TestingTask> tasks{make_task("d0", 1)};
    CHECK_FALSE(would_select({SelectKind::HighValue, 5}, tasks));
    CHECK(would_select({SelectKind::LowValue, 5}, tasks));
    CHECK(would_select({SelectKind::Random, 5}, tasks));
    CHECK_FALSE(would_select({SelectKind::Explorer, 5}, tasks));
    CHECK_FALSE(would_select({SelectKind::Random, 5}, {}));
}

TEST_CASE("eager picks the nearest located target") {
    AgentBelief belief = open_belief(12, 5);
    belief.note_object("d0", {ObjectKind::Door, {10, 2}, false, 0, 0});
    belief.note_object("d1", {ObjectKind::Door, {3, 2}, false, 0, 0});
    const std::vector<TestingTask> tasks{make_task("d0", 1), make_task("d1", 1), make_task("d2", 1)};
    Rng rng(3);
    const auto pick = select_task({SelectKind::Eager, 5}, tasks, belief, {1, 2}, rng);
    REQUIRE(pick.has_value());
    CHECK(pick->id == "d1");

    // none located: still takes something
    AgentBelief blind = open_belief(12, 5);
    const auto any = select_task({SelectKind::Eager, 5}, tasks, blind, {1, 2}, rng);
    CHECK(any.has_value());
}

TEST_CASE("closest-first enabler choice with deterministic ties") {
    AgentBelief belief = open_belief(12, 5);
    belief.note_object("b3", {ObjectKind::Button, {3, 2}, false, 0, 0});
    belief.note_object("b7", {ObjectKind::Button, {10, 2}, false, 0, 0});
    CHECK(choose_enabler({}, {"b3", "b7"}, {1, 2}, belief) == "b3");

    // equal distances: smaller id wins
    belief.note_object("b1", {ObjectKind::Button, {1, 4}, false, 0, 0});
    belief.note_object("b2", {ObjectKind::Button, {3, 2}, false, 0, 0});
    CHECK(chebyshev(Vec2{1, 2}, Vec2{1, 4}) == 2);
    CHECK(choose_enabler({}, {"b2", "b1"}, {1, 2}, belief) == "b1");
}

TEST_CASE("unreachable candidates rank last") {
    // b_far is walled off: distance infinity, chosen only when alone
    const Level level = load_level(
        "LEVEL v1\nsize: 9 3\ngrid:\n#########\n#...#...#\n#########\n"
        "button bn 2 1\nbutton bw 6 1\nagent 1 1\n");
    WorldState state(level, 1);
    AgentBelief belief(0, level.width, level.height);
    Observation obs;
    for (int y = 0; y < 3; ++y) {
        for (int x = 0; x < 9; ++x) obs.visible_cells.push_back({x, y});
    }
    for (const auto& [id, o] : level.objects) {
        obs.visible_objects.push_back({id, o.kind, o.position, false});
    }
    std::sort(obs.visible_objects.begin(), obs.visible_objects.end());
    update_belief(belief, obs, level);

    const auto [best, dist] = choose_enabler_ranked({}, {"bn", "bw"}, {1, 1}, belief);
    CHECK(best == "bn");
    CHECK(dist == 1);
    const auto [only, inf] = choose_enabler_ranked({}, {"bw"}, {1, 1}, belief);
    CHECK(only == "bw");
    CHECK(inf == kUnreached);
}
