// qnoise: batch experiment runner
//   qnoise <scenario> [--param value]... [--config path] --out path
//          --format csv|json [--seed N]
// Exit codes: 0 success, 2 config error, 3 numeric diagnostic failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnoise/lab/scenarios.hpp"

namespace {

qnoise::lab::ExperimentConfig load_base_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qnoise::config_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw qnoise::config_error(std::string("config file parse error: ") + e.what());
    }
    return qnoise::lab::parse(j);
}

void add_scenario(CLI::App& app, const std::string& name, const std::string& desc,
                  std::vector<std::pair<CLI::App*, std::string>>& subs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    subs.emplace_back(sub, name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qnoise: quantum-noise simulation lab"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, std::string>> subs;
    add_scenario(app, "decay", "spontaneous-emission amplitude dynamics", subs);
    add_scenario(app, "symmetrize", "R-copy symmetric projection sweep", subs);
    add_scenario(app, "zeno", "repeated-projection success probability", subs);
    add_scenario(app, "qec-benefit", "error-correction fidelity vs damping", subs);
    add_scenario(app, "bounds", "Hamming / Gilbert-Varshamov feasibility", subs);
    add_scenario(app, "verify-code", "code condition verifier", subs);

    struct Flags {
        std::string config_path, out, format, code, code_file, spectrum;
        std::uint64_t seed = 0;
        bool seed_set = false;
        std::vector<std::pair<std::string, double>> params;
    };
    std::vector<Flags> flag_store(subs.size());

    for (std::size_t i = 0; i < subs.size(); ++i) {
        CLI::App* sub = subs[i].first;
        Flags& f = flag_store[i];
        sub->add_option("--config", f.config_path, "JSON config file (flags override)");
        sub->add_option("--out", f.out, "output file path");
        sub->add_option("--format", f.format, "csv or json");
        sub->add_option("--code", f.code, "code id: phase3, shor9, five");
        sub->add_option("--code-file", f.code_file, "custom codeword file");
        sub->add_option("--spectrum", f.spectrum, "flat, gaussian or lorentzian");
        sub->add_option_function<std::uint64_t>(
            "--seed", [&f](std::uint64_t v) { f.seed = v; f.seed_set = true; },
            "random seed (64-bit unsigned)");
        for (const std::string& key : qnoise::lab::allowed_params(subs[i].second))
            sub->add_option_function<double>(
                "--" + key, [&f, key](double v) { f.params.emplace_back(key, v); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::size_t chosen = 0;
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i].first->parsed()) chosen = i;
        const Flags& f = flag_store[chosen];

        qnoise::lab::ExperimentConfig cfg;
        if (!f.config_path.empty()) cfg = load_base_config(f.config_path);
        cfg.scenario = subs[chosen].second;
        if (!f.out.empty()) cfg.output_path = f.out;
        if (!f.format.empty()) cfg.format = f.format;
        if (!f.code.empty()) cfg.code = f.code;
        if (!f.code_file.empty()) cfg.code_file = f.code_file;
        if (!f.spectrum.empty()) cfg.spectrum = f.spectrum;
        if (f.seed_set) cfg.seed = f.seed;
        for (const auto& [key, value] : f.params) cfg.params[key] = value;

        qnoise::lab::run_and_write(cfg);
        return 0;
    } catch (const qnoise::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const qnoise::diagnostic_error& e) {
        std::cerr << "numeric diagnostic: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
