#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sim/comms.hpp"
#include "sim/scenarios.hpp"

namespace sim::scenarios {

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw SimError("cannot open output file: " + path);
    file << text;
    if (!file) throw SimError("failed writing output file: " + path);
}

void emit_table(const std::string& csv, const std::string& csv_path) {
    std::cout << csv;
    if (!csv_path.empty()) write_text(csv_path, csv);
}

int run_command(const std::string& config_path, const std::string& log_path,
                const std::string& csv_path, const std::optional<std::uint64_t>& seed,
                const std::optional<double>& duration_s) {
    ScenarioConfig config = load_scenario_config(config_path);
    if (seed) config.seed = *seed;
    if (duration_s) config.duration_s = *duration_s;
    config.validate();

    switch (config.kind) {
        case ScenarioKind::Constellation: {
            const ConstellationResult result = run_constellation(config);
            if (!log_path.empty()) result.log.write_csv(log_path);
            emit_table(result.summary_csv(), csv_path);
            break;
        }
        case ScenarioKind::FedAvg: {
            const FedAvgResult result = run_fedavg(config);
            if (!log_path.empty()) result.log.write_csv(log_path);
            emit_table(result.summary_csv(), csv_path);
            break;
        }
        case ScenarioKind::Overhead: {
            const OverheadReport report = run_overhead_benchmark(config);
            emit_table(report.to_csv(), csv_path);
            break;
        }
    }
    return 0;
}

int windows_command(const std::string& config_path, const std::string& from_id,
                    const std::string& to_id, double hours, const std::string& csv_path) {
    const ScenarioConfig config = load_scenario_config(config_path);
    std::vector<Actor> actors = build_actors(config);
    const auto find = [&](const std::string& id) -> Actor& {
        for (Actor& actor : actors)
            if (actor.id == id) return actor;
        throw SimError("no actor named " + id + " in this scenario");
    };
    const Actor& from = find(from_id);
    const Actor& to = find(to_id);

    const Epoch t0 = from.local_time;
    const auto windows = comms::find_windows(from, to, t0, t0 + hours * 3600.0);
    std::string csv = "start_s,end_s,duration_s\n";
    for (const comms::Window& window : windows) {
        std::ostringstream row;
        row.precision(17);
        row << window.start.seconds << ',' << window.end.seconds << ','
            << window.end - window.start << '\n';
        csv += row.str();
    }
    emit_table(csv, csv_path);
    std::cout << windows.size() << " window(s)\n";
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Spacecraft operations environment simulator"};
    app.require_subcommand(1);

    std::string config_path, log_path, csv_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> duration_s;

    CLI::App* run = app.add_subcommand("run", "Run a scenario from a JSON config");
    run->add_option("config", config_path, "Scenario config JSON")->required();
    run->add_option("--log", log_path, "Write the event log CSV here");
    run->add_option("--csv", csv_path, "Write the summary table CSV here");
    run->add_option("--seed", seed, "Override the scenario seed");
    run->add_option("--duration-s", duration_s, "Override the scenario duration");

    std::string from_id, to_id;
    double hours = 24.0;
    CLI::App* windows = app.add_subcommand("windows", "Find communication windows");
    windows->add_option("--config", config_path, "Scenario config JSON")->required();
    windows->add_option("--from", from_id, "Actor id")->required();
    windows->add_option("--to", to_id, "Actor id")->required();
    windows->add_option("--hours", hours, "Search horizon in hours");
    windows->add_option("--csv", csv_path, "Write the window table CSV here");

    CLI::App* bench = app.add_subcommand("bench", "Benchmarks");
    bench->require_subcommand(1);

    std::optional<double> interval;
    CLI::App* overhead = bench->add_subcommand("overhead", "Engine overhead benchmark");
    overhead->add_option("--interval", interval, "Single check interval in seconds");
    overhead->add_option("--csv", csv_path, "Write the timing table CSV here");

    std::string sizes_text = "16,32,128";
    CLI::App* scaling = bench->add_subcommand("scaling", "Constellation scaling benchmark");
    scaling->add_option("--sizes", sizes_text, "Comma-separated satellite counts");
    scaling->add_option("--csv", csv_path, "Write the scaling table CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(config_path, log_path, csv_path, seed, duration_s);
        if (windows->parsed()) return windows_command(config_path, from_id, to_id, hours, csv_path);
        if (overhead->parsed()) {
            ScenarioConfig config;
            config.kind = ScenarioKind::Overhead;
            if (interval) config.intervals_s = {*interval};
            const OverheadReport report = run_overhead_benchmark(config);
            emit_table(report.to_csv(), csv_path);
            return 0;
        }
        if (scaling->parsed()) {
            std::vector<int> sizes;
            std::stringstream stream(sizes_text);
            for (std::string token; std::getline(stream, token, ',');)
                sizes.push_back(std::stoi(token));
            if (sizes.empty()) throw SimError("--sizes must name at least one satellite count");
            const ScalingReport report = run_scaling_benchmark(sizes);
            emit_table(report.to_csv(), csv_path);
            return 0;
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace sim::scenarios

int main(int argc, char** argv) { return sim::scenarios::cli_main(argc, argv); }
