// magt - deterministic multi-agent game-testing simulator.
//
// Runs cooperative test agents with partial observability against generated
// or hand-written blocker/enabler levels, either as a single run or as one of
// the named experiment suites, and writes per-run CSVs plus aggregate tables.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "magt/experiments.hpp"
#include "magt/level_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitInternal = 4;

// --gen forms: basic:SCALE | distant:SCALE:COUNT | chained:SCALE:COUNT | multi:SCALE:COUNT
magt::Level generate_from_spec(const std::string& spec, uint64_t seed) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t colon = spec.find(':', pos);
        parts.push_back(colon == std::string::npos ? spec.substr(pos) : spec.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.empty()) throw std::invalid_argument("empty --gen spec");
    const std::string kind = parts[0];
    if (kind == "basic") {
        if (parts.size() != 2) throw std::invalid_argument("--gen basic:SCALE");
        return magt::generate_basic_level(std::stoi(parts[1]), seed);
    }
    if (parts.size() != 3) throw std::invalid_argument("--gen " + kind + ":SCALE:COUNT");
    const int scale = std::stoi(parts[1]);
    const int count = std::stoi(parts[2]);
    const magt::Level base = magt::generate_basic_level(scale, seed);
    if (kind == "distant") return magt::apply_distant_connections(base, count, seed + 17);
    if (kind == "chained") return magt::apply_chained_connections(base, count, seed + 17);
    if (kind == "multi") return magt::apply_multi_connections(base, count, seed + 17);
    throw std::invalid_argument("unknown --gen kind '" + kind + "'");
}

std::vector<long> parse_axis(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic multi-agent game-testing simulator"};

    std::string level_file, gen_spec, agents_spec = "random", sync = "basic";
    std::string suite, axis_text, teams_text, out_dir;
    int view = 6;
    long budget = 100000, per_task_budget = 0, sync_every = 1, sync_tax = 0;
    int reps = 3, base_scale = 3;
    uint64_t seed = 1;
    bool dump_audit = false, print_level = false, run_oracle = false;

    app.add_option("--level", level_file, "level file to load");
    app.add_option("--gen", gen_spec, "generate a level: basic:S | distant:S:C | chained:S:C | multi:S:C");
    app.add_option("--agents", agents_spec, "team spec, e.g. high:5,low:5 or eager*3");
    app.add_option("--sync", sync, "information synchronization: basic | extended");
    app.add_option("--view", view, "agents' view distance in cells");
    app.add_option("--budget", budget, "global tick budget");
    app.add_option("--per-task-budget", per_task_budget, "per-attempt tick budget (0 = auto)");
    app.add_option("--seed", seed, "run seed");
    app.add_option("--sync-every", sync_every, "sync cadence in ticks");
    app.add_option("--sync-tax", sync_tax, "extra ticks consumed per sync");
    app.add_option("--suite", suite,
                   "experiment suite: size-sweep | sync-compare | team-compose | view-distance | "
                   "distant | chained | multi-connection | agents-count");
    app.add_option("--axis", axis_text, "comma list of axis values for the suite");
    app.add_option("--teams", teams_text, "semicolon list of team specs (team-compose)");
    app.add_option("--reps", reps, "repetitions per axis point");
    app.add_option("--scale", base_scale, "base level scale for the logic suites");
    app.add_option("--out", out_dir, "output directory for CSVs");
    app.add_flag("--audit", dump_audit, "also write the full audit log");
    app.add_flag("--serialize", print_level, "print the level in canonical text form and exit");
    app.add_flag("--oracle", run_oracle, "print per-door oracle reachability and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        magt::SyncMode sync_mode;
        if (sync == "basic") {
            sync_mode = magt::SyncMode::Basic;
        } else if (sync == "extended") {
            sync_mode = magt::SyncMode::Extended;
        } else {
            std::cerr << "unknown --sync mode '" << sync << "'\n";
            return kExitUsage;
        }

        if (suite == "single-run") suite.clear();  // alias for the plain run path
        if (!suite.empty()) {
            magt::ExperimentSpec spec;
            spec.suite = suite;
            spec.axis = parse_axis(axis_text);
            spec.repetitions = reps;
            spec.base_seed = seed;
            spec.base_scale = base_scale;
            spec.view_distance = view;
            spec.global_budget = budget;
            spec.per_task_budget = per_task_budget;
            spec.sync_every = sync_every;
            spec.sync_tax = sync_tax;
            spec.out_dir = out_dir;
            if (!teams_text.empty()) {
                std::stringstream ss(teams_text);
                std::string team;
                while (std::getline(ss, team, ';')) {
                    if (!team.empty()) spec.teams.push_back(team);
                }
            }
            const magt::SuiteResult result = magt::run_suite(spec);
            std::cout << result.table_text;
            return kExitOk;
        }

        magt::Level level;
        if (!level_file.empty()) {
            std::ifstream in(level_file, std::ios::binary);
            if (!in) {
                std::cerr << "cannot open level file '" << level_file << "'\n";
                return kExitConfig;
            }
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            level = magt::load_level(text);
        } else if (!gen_spec.empty()) {
            level = generate_from_spec(gen_spec, seed);
        } else {
            std::cerr << "one of --level or --gen is required\n";
            return kExitUsage;
        }

        if (print_level) {
            std::cout << magt::serialize_level(level);
            return kExitOk;
        }
        if (run_oracle) {
            const auto reach = magt::oracle_reachable_all(level, view);
            for (const auto& [door, ok] : reach) {
                std::cout << door << ": " << (ok ? "reachable" : "unreachable") << '\n';
            }
            return kExitOk;
        }

        magt::RunConfig cfg;
        cfg.agents = magt::parse_agents(agents_spec);
        cfg.sync_mode = sync_mode;
        cfg.view_distance = view;
        cfg.global_budget = budget;
        cfg.per_task_budget = per_task_budget;
        cfg.seed = seed;
        cfg.sync_every = sync_every;
        cfg.sync_tax = sync_tax;

        const magt::MetricsReport report = magt::run(level, cfg);
        std::cout << magt::summary_text(report);

        if (!out_dir.empty()) {
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            {
                std::ofstream f(fs::path(out_dir) / "run.csv", std::ios::binary);
                f << magt::metrics_csv(report);
            }
            {
                std::ofstream f(fs::path(out_dir) / "summary.txt", std::ios::binary);
                f << magt::summary_text(report);
            }
            if (dump_audit) {
                std::ofstream f(fs::path(out_dir) / "audit.csv", std::ios::binary);
                f << "tick,event,agent,task_or_obj,extra\n";
                for (const magt::AuditEvent& e : report.audit) {
                    f << e.tick << ',' << e.event << ',' << e.agent << ',' << e.subject << ','
                      << e.extra << '\n';
                }
            }
        }
        return kExitOk;
    } catch (const magt::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const magt::LevelError& e) {
        std::cerr << "level error: " << e.what();
        if (e.line > 0) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
