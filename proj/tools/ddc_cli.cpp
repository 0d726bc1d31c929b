// ddc: generate datasets, run scenarios and sweeps.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ddc/data/generate.hpp"
#include "ddc/data/point_io.hpp"
#include "ddc/errors.hpp"
#include "ddc/presets/experiment.hpp"
#include "ddc/presets/presets.hpp"
#include "ddc/serialize/json.hpp"

namespace fs = std::filesystem;
using ddc::serialize::json;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

struct Overrides {
    std::optional<std::string> comm;
    std::optional<int> degree;
    std::optional<std::uint64_t> seed;
};

void apply(ddc::runtime::ScenarioConfig& c, const Overrides& o) {
    if (o.comm) c.comm = ddc::runtime::parse_comm(*o.comm);
    if (o.degree) c.degree = *o.degree;
    if (o.seed) {
        c.seed = *o.seed;
        c.dataset.seed = *o.seed;
    }
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ddc::Error("cannot write " + path.string());
    out << text;
}

// A manifest holds the scenario under "scenario"; a plain config is the
// scenario itself.
struct Loaded {
    ddc::presets::Preset preset;
    std::optional<std::string> backend;
};

Loaded load(const std::string& preset_name, const std::string& config_path) {
    Loaded l;
    if (!preset_name.empty() && !config_path.empty()) throw ddc::ConfigError("give either --preset or --config");
    if (!preset_name.empty()) {
        l.preset = ddc::presets::preset(preset_name);
        return l;
    }
    if (config_path.empty()) throw ddc::ConfigError("one of --preset or --config is required");
    const auto j = ddc::serialize::read_json_file(config_path);
    if (j.is_object() && j.contains("scenario")) {
        l.preset.name = j.value("preset", std::string("custom"));
        l.preset.scenario = ddc::serialize::scenario_from_json(j.at("scenario"));
        if (j.contains("node_counts")) {
            l.preset.kind = ddc::presets::Preset::Kind::Sweep;
            l.preset.node_counts = j.at("node_counts").get<std::vector<int>>();
        }
        if (j.contains("backend")) l.backend = j.at("backend").get<std::string>();
    } else {
        l.preset.scenario = ddc::serialize::scenario_from_json(j);
        l.preset.name = l.preset.scenario.name;
    }
    return l;
}

json manifest(const ddc::presets::Preset& p, const std::string& backend, const json& outputs) {
    json m;
    m["tool"] = "ddc";
    m["version"] = kVersion;
    m["preset"] = p.name;
    m["backend"] = backend;
    m["seed"] = p.scenario.seed;
    m["scenario"] = ddc::serialize::to_json(p.scenario);
    if (p.kind == ddc::presets::Preset::Kind::Sweep) m["node_counts"] = p.node_counts;
    m["outputs"] = outputs;
    return m;
}

ddc::metrics::ScalabilitySweep sweep(const ddc::presets::Preset& p) {
    const auto& c = p.scenario;
    const auto base = ddc::runtime::prepare(c);  // loads the dataset once
    return ddc::metrics::scalability_sweep(base.dataset, p.node_counts, c.cost, c.comm, c);
}

int cmd_run(const Loaded& loaded, const std::string& backend_flag, const Overrides& o, const std::string& out_dir) {
    auto p = loaded.preset;
    apply(p.scenario, o);
    const std::string backend_name = !backend_flag.empty() ? backend_flag : loaded.backend.value_or("sim");
    const auto backend = ddc::presets::parse_backend(backend_name);
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    if (p.kind == ddc::presets::Preset::Kind::Sweep) {
        const auto s = sweep(p);
        std::ostringstream csv;
        ddc::metrics::write_sweep_csv(csv, s);
        write_file(dir / "sweep.csv", csv.str());
        write_file(dir / "metrics.json", ddc::presets::sweep_json(s).dump(2) + "\n");
        write_file(dir / "manifest.json",
                   manifest(p, "sim", {{"sweep", "sweep.csv"}, {"metrics", "metrics.json"}}).dump(2) + "\n");
        std::cout << csv.str() << "optimal_m," << s.optimal_m << "\n";
        return kOk;
    }

    const auto outcome = ddc::presets::run_scenario(p.scenario, backend, p.scenario.comm);
    const auto ledger = ddc::runtime::to_csv(outcome.run.ledger);
    write_file(dir / "ledger.csv", ledger);
    write_file(dir / "global.json", ddc::serialize::to_json(outcome.run.global).dump() + "\n");
    write_file(dir / "metrics.json", ddc::presets::metrics_json(outcome).dump(2) + "\n");
    write_file(dir / "manifest.json", manifest(p, backend_name,
                                               {{"ledger", "ledger.csv"},
                                                {"global", "global.json"},
                                                {"metrics", "metrics.json"}})
                                              .dump(2) +
                                          "\n");
    std::cout << ledger;
    std::printf("exchange_ratio,%.4f\nalpha,%.3f\n", outcome.exchange_ratio, outcome.speedup.alpha);
    return kOk;
}

int cmd_sweep(const Loaded& loaded, const std::string& shape, std::size_t n, const std::vector<int>& nodes,
              const Overrides& o, const std::string& out_path) {
    ddc::presets::Preset p;
    if (!shape.empty()) {
        p = ddc::presets::preset("sweep-d1");
        p.name = "sweep";
        p.scenario.name = "sweep";
        p.scenario.dataset.shape = shape;
        p.scenario.dataset.n = n ? n : ddc::data::default_size(shape);
    } else {
        p = loaded.preset;
        if (p.node_counts.empty()) p.node_counts = ddc::metrics::kDefaultNodeCounts;
    }
    if (!nodes.empty()) p.node_counts = nodes;
    apply(p.scenario, o);
    const auto s = sweep(p);
    std::ostringstream csv;
    ddc::metrics::write_sweep_csv(csv, s);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
    } else {
        write_file(out_path, csv.str());
    }
    std::cerr << "optimal_m " << s.optimal_m << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic distributed clustering: local DBSCAN + contour merging, simulated or threaded"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string shape, out, preset_name, config_path, backend, dataset;
    std::size_t n = 0;
    std::uint64_t gen_seed = 1;
    Overrides o;
    std::vector<int> nodes;

    auto* gen = app.add_subcommand("generate", "write a generated point set as x,y lines");
    gen->add_option("shape", shape, "d1-like, d2-like, gaussian-blob, ring, circle-disk, oval, crescent, nested")
        ->required();
    gen->add_option("--n", n, "number of points (default depends on the shape)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--out", out, "output CSV")->required();

    const auto add_scenario_flags = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset_name, "named scenario (see `ddc presets`)");
        cmd->add_option("--config", config_path, "scenario JSON or a manifest written by an earlier run");
        cmd->add_option("--comm", o.comm, "sync or async")->check(CLI::IsMember({"sync", "async"}));
        cmd->add_option("--degree", o.degree, "merge tree degree D")->check(CLI::Range(2, 1 << 20));
        cmd->add_option("--seed", o.seed, "seed for dataset and partition");
    };

    auto* run = app.add_subcommand("run", "run one scenario and write ledger, global model, metrics, manifest");
    add_scenario_flags(run);
    run->add_option("--backend", backend, "sim or concurrent")->check(CLI::IsMember({"sim", "concurrent"}));
    run->add_option("-o,--out", out, "output directory")->required();

    auto* sw = app.add_subcommand("sweep", "execution time against node count (simulated)");
    add_scenario_flags(sw);
    sw->add_option("--dataset", dataset, "generated scene to sweep instead of a preset/config");
    sw->add_option("--n", n, "dataset size for --dataset");
    sw->add_option("--nodes", nodes, "node counts, default 1,2,4,8,16,32,64")->delimiter(',');
    sw->add_option("-o,--out", out, "output CSV (stdout when omitted)");

    auto* list = app.add_subcommand("presets", "list presets, or print one as scenario JSON");
    std::string show;
    list->add_option("name", show, "preset to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*gen) {
            const auto pts = ddc::data::generate(shape, n ? n : ddc::data::default_size(shape), gen_seed);
            ddc::data::write_points(out, pts);
            std::cerr << "wrote " << pts.size() << " points to " << out << "\n";
            return kOk;
        }
        if (*run) return cmd_run(load(preset_name, config_path), backend, o, out);
        if (*sw) {
            Loaded l;
            if (dataset.empty()) l = load(preset_name.empty() && config_path.empty() ? "sweep-d1" : preset_name, config_path);
            return cmd_sweep(l, dataset, n, nodes, o, out);
        }
        if (*list) {
            if (!show.empty()) {
                const auto p = ddc::presets::preset(show);
                json j = ddc::serialize::to_json(p.scenario);
                std::cout << (p.kind == ddc::presets::Preset::Kind::Sweep
                                  ? json{{"scenario", j}, {"node_counts", p.node_counts}}.dump(2)
                                  : j.dump(2))
                          << "\n";
                return kOk;
            }
            for (const auto& name : ddc::presets::preset_names())
                std::cout << name << "  " << ddc::presets::preset(name).description << "\n";
            return kOk;
        }
    } catch (const ddc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ddc::SpecError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ddc::UnknownShape& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    return kOk;
}
