#ifndef MAGT_EXPERIMENTS_HPP
#define MAGT_EXPERIMENTS_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "magt/oracle.hpp"
#include "magt/runner.hpp"

namespace magt {

// Parses a team description: comma-separated terms of the form
// kind[:threshold][*count], e.g. "high:5,low:5", "eager*3", "explorer,random".
inline std::vector<AgentSpec> parse_agents(const std::string& text) {
    std::vector<AgentSpec> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string term = comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (term.empty()) throw std::invalid_argument("empty agent term");

        int count = 1;
        if (size_t star = term.find('*'); star != std::string::npos) {
            count = std::stoi(term.substr(star + 1));
            term = term.substr(0, star);
        }
        int threshold = 5;
        if (size_t colon = term.find(':'); colon != std::string::npos) {
            threshold = std::stoi(term.substr(colon + 1));
            term = term.substr(0, colon);
        }

        AgentSpec spec;
        spec.select_h.threshold = threshold;
        if (term == "random") {
            spec.select_h.kind = SelectKind::Random;
        } else if (term == "high") {
            spec.select_h.kind = SelectKind::HighValue;
        } else if (term == "low") {
            spec.select_h.kind = SelectKind::LowValue;
        } else if (term == "eager") {
            spec.select_h.kind = SelectKind::Eager;
        } else if (term == "explorer") {
            spec.select_h.kind = SelectKind::Explorer;
            spec.explore.kind = ExplorePolicyKind::Aggressive;
        } else {
            throw std::invalid_argument("unknown agent kind '" + term + "'");
        }
        if (count < 1) throw std::invalid_argument("agent count must be >= 1");
        for (int i = 0; i < count; ++i) out.push_back(spec);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("no agents specified");
    return out;
}

// The standard configurations the comparisons use.
inline std::vector<AgentSpec> team_single() { return parse_agents("random"); }
inline std::vector<AgentSpec> team_high_low() { return parse_agents("high:5,low:5"); }
inline std::vector<AgentSpec> team_eager(int n) {
    return parse_agents("eager*" + std::to_string(n));
}

struct NamedConfig {
    std::string name;
    std::vector<AgentSpec> agents;
    SyncMode sync = SyncMode::Basic;
};

inline NamedConfig config_single() { return {"single", team_single(), SyncMode::Basic}; }
inline NamedConfig config_ma_basic() { return {"ma-basic", team_high_low(), SyncMode::Basic}; }
inline NamedConfig config_ma_extended() { return {"ma-extended", team_high_low(), SyncMode::Extended}; }
inline NamedConfig config_ma_eager(int n = 2) {
    return {"ma-eager", team_eager(n), SyncMode::Extended};
}

struct ExperimentSpec {
    std::string suite = "single-run";
    std::vector<long> axis;
    std::vector<std::string> teams;  // team-compose only
    int repetitions = 3;
    uint64_t base_seed = 1;
    int base_scale = 3;  // level scale for the logic suites
    int view_distance = 6;
    long global_budget = 200000;
    long per_task_budget = 0;
    long sync_every = 1;
    long sync_tax = 0;
    std::string out_dir;

    void check() const {
        if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
        if (suite != "single-run" && axis.empty() && teams.empty()) {
            throw std::invalid_argument("suite needs a nonempty axis");
        }
    }
};

struct RunOutcome {
    long axis = 0;
    std::string config;
    int rep = 0;
    uint64_t seed = 0;
    long makespan_or_budget = 0;  // dnf counts as the full budget
    bool dnf = false;
    MetricsReport report;
};

struct AggregateRow {
    long axis = 0;
    std::string config;
    double mean_makespan = 0.0;
    int dnf = 0;
    int runs = 0;
};

struct SuiteResult {
    std::vector<RunOutcome> runs;
    std::vector<AggregateRow> rows;
    std::string aggregate_csv;
    std::string table_text;
};

// Seeds are shared across configurations at each (axis, rep) point so the
// comparisons see identical levels.
inline uint64_t seed_for(uint64_t base, size_t axis_index, int rep) {
    return base + 1000 * static_cast<uint64_t>(axis_index) + static_cast<uint64_t>(rep);
}

// Levels depend on the repetition only. Along an axis this keeps the same
// base level per rep, and the logic variants nest (the doors changed for
// count k are a prefix of those for k+1), so axis points differ by exactly
// the quantity under study.
inline uint64_t level_seed_for(uint64_t base, int rep) {
    return base + 7919 * static_cast<uint64_t>(rep);
}

namespace expdetail {

inline Level level_for(const std::string& suite, long axis, int base_scale, uint64_t seed) {
    if (suite == "size-sweep" || suite == "sync-compare") {
        return generate_basic_level(static_cast<int>(axis), seed);
    }
    if (suite == "view-distance" || suite == "team-compose" || suite == "agents-count") {
        return generate_basic_level(10, seed);
    }
    if (suite == "distant") {
        return apply_distant_connections(generate_basic_level(base_scale, seed),
                                         static_cast<int>(axis), seed + 17);
    }
    if (suite == "chained") {
        return apply_chained_connections(generate_basic_level(base_scale, seed),
                                         static_cast<int>(axis), seed + 17);
    }
    if (suite == "multi-connection") {
        return apply_multi_connections(generate_basic_level(base_scale, seed),
                                       static_cast<int>(axis), seed + 17);
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

inline std::vector<NamedConfig> configs_for(const ExperimentSpec& spec) {
    const std::string& s = spec.suite;
    if (s == "size-sweep") return {config_single(), config_ma_basic(), config_ma_extended()};
    if (s == "sync-compare") return {config_ma_basic(), config_ma_extended()};
    if (s == "view-distance") {
        return {config_single(), config_ma_basic(), config_ma_extended(), config_ma_eager()};
    }
    if (s == "distant") return {config_single(), config_ma_basic(), config_ma_extended()};
    if (s == "chained") return {config_single(), config_ma_eager(), config_ma_extended()};
    if (s == "multi-connection") return {config_single(), config_ma_basic(), config_ma_extended()};
    if (s == "agents-count") return {};  // one config per axis value, built on the fly
    if (s == "team-compose") return {};  // teams come from spec.teams
    throw std::invalid_argument("unknown suite '" + s + "'");
}

inline void write_run_files(const std::string& out_dir, const std::string& suite,
                            const std::string& axis_label, const std::string& config, int rep,
                            const MetricsReport& report) {
    if (out_dir.empty()) return;
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(out_dir) / suite / axis_label / config;
    fs::create_directories(dir);
    {
        std::ofstream f(dir / ("run" + std::to_string(rep) + ".csv"), std::ios::binary);
        f << metrics_csv(report);
    }
    {
        std::ofstream f(dir / ("run" + std::to_string(rep) + ".summary.txt"), std::ios::binary);
        f << summary_text(report);
    }
}

}  // namespace expdetail

// Executes |axis| x |configs| x repetitions runs and aggregates the mean
// tick-makespan per (axis, config) cell, mirroring the comparison tables.
inline SuiteResult run_suite(const ExperimentSpec& spec) {
    spec.check();
    SuiteResult result;

    struct Cell {
        long axis;
        std::string axis_label;
        NamedConfig config;
    };
    std::vector<Cell> cells;
    if (spec.suite == "team-compose") {
        for (size_t i = 0; i < spec.teams.size(); ++i) {
            NamedConfig cfg{spec.teams[i], parse_agents(spec.teams[i]), SyncMode::Extended};
            cells.push_back({static_cast<long>(i), spec.teams[i], cfg});
        }
    } else if (spec.suite == "agents-count") {
        for (long n : spec.axis) {
            NamedConfig cfg = config_ma_eager(static_cast<int>(n));
            cfg.name = "eager-x" + std::to_string(n);
            cells.push_back({n, std::to_string(n), cfg});
        }
    } else {
        for (long a : spec.axis) {
            for (const NamedConfig& cfg : expdetail::configs_for(spec)) {
                cells.push_back({a, std::to_string(a), cfg});
            }
        }
    }

    // seeds are keyed by the axis position so every config shares them
    std::vector<long> axis_order;
    for (const Cell& c : cells) {
        if (std::find(axis_order.begin(), axis_order.end(), c.axis) == axis_order.end()) {
            axis_order.push_back(c.axis);
        }
    }

    for (const Cell& cell : cells) {
        AggregateRow row;
        row.axis = cell.axis;
        row.config = cell.config.name;
        double sum = 0.0;
        const size_t axis_index = static_cast<size_t>(
            std::find(axis_order.begin(), axis_order.end(), cell.axis) - axis_order.begin());
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            const uint64_t seed = seed_for(spec.base_seed, axis_index, rep);
            Level level = expdetail::level_for(spec.suite, cell.axis, spec.base_scale,
                                               level_seed_for(spec.base_seed, rep));

            RunConfig rc;
            rc.agents = cell.config.agents;
            rc.sync_mode = cell.config.sync;
            rc.view_distance = spec.suite == "view-distance" ? static_cast<int>(cell.axis)
                                                             : spec.view_distance;
            rc.global_budget = spec.global_budget;
            rc.per_task_budget = spec.per_task_budget;
            rc.seed = seed;
            rc.sync_every = spec.sync_every;
            rc.sync_tax = spec.sync_tax;

            MetricsReport report = run(level, rc);

            RunOutcome outcome;
            outcome.axis = cell.axis;
            outcome.config = cell.config.name;
            outcome.rep = rep;
            outcome.seed = seed;
            outcome.dnf = report.makespan < 0;
            outcome.makespan_or_budget = outcome.dnf ? spec.global_budget : report.makespan;
            sum += static_cast<double>(outcome.makespan_or_budget);
            if (outcome.dnf) ++row.dnf;
            ++row.runs;

            expdetail::write_run_files(spec.out_dir, spec.suite, cell.axis_label, cell.config.name,
                                       rep, report);
            outcome.report = std::move(report);
            result.runs.push_back(std::move(outcome));
        }
        row.mean_makespan = sum / static_cast<double>(row.runs);
        result.rows.push_back(row);
    }

    // aggregate CSV + a plain table grouped by axis
    std::string csv = "axis,config,mean_makespan,dnf,runs\n";
    char buf[64];
    for (const AggregateRow& r : result.rows) {
        std::snprintf(buf, sizeof(buf), "%.1f", r.mean_makespan);
        csv += std::to_string(r.axis) + ',' + r.config + ',' + buf + ',' + std::to_string(r.dnf) +
               ',' + std::to_string(r.runs) + '\n';
    }
    result.aggregate_csv = csv;

    std::string table = "axis";
    std::vector<std::string> config_names;
    for (const AggregateRow& r : result.rows) {
        if (std::find(config_names.begin(), config_names.end(), r.config) == config_names.end()) {
            config_names.push_back(r.config);
        }
    }
    for (const std::string& c : config_names) table += '\t' + c;
    table += '\n';
    std::vector<long> axes;
    for (const AggregateRow& r : result.rows) {
        if (std::find(axes.begin(), axes.end(), r.axis) == axes.end()) axes.push_back(r.axis);
    }
    for (long a : axes) {
        table += std::to_string(a);
        for (const std::string& c : config_names) {
            for (const AggregateRow& r : result.rows) {
                if (r.axis == a && r.config == c) {
                    std::snprintf(buf, sizeof(buf), "%.1f", r.mean_makespan);
                    table += '\t' + std::string(buf);
                }
            }
        }
        table += '\n';
    }
    result.table_text = table;

    if (!spec.out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(fs::path(spec.out_dir) / spec.suite);
        std::ofstream f(fs::path(spec.out_dir) / spec.suite / "aggregate.csv", std::ios::binary);
        f << result.aggregate_csv;
    }
    return result;
}

}  // namespace magt

#endif  // MAGT_EXPERIMENTS_HPP
