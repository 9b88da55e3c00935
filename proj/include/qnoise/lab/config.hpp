// config.hpp
// Experiment configuration: scenario id, parameter map, output target.
// Accepted from command-line flags and/or a JSON config file.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "qnoise/errors.hpp"

namespace qnoise::lab {

struct ExperimentConfig {
    std::string scenario;                  // decay | symmetrize | zeno | qec-benefit | bounds | verify-code
    std::map<std::string, double> params;  // scenario-specific numeric parameters
    std::string code = "five";             // code id for verify-code / qec-benefit
    std::string code_file;                 // optional custom codeword file
    std::string spectrum = "flat";         // decay spectrum shape
    std::uint64_t seed = 0;
    std::string output_path;
    std::string format = "csv";            // csv | json

    bool operator==(const ExperimentConfig&) const = default;
};

inline const std::set<std::string>& known_scenarios() {
    static const std::set<std::string> s = {"decay", "symmetrize", "zeno",
                                            "qec-benefit", "bounds", "verify-code"};
    return s;
}

inline const std::set<std::string>& allowed_params(const std::string& scenario) {
    static const std::map<std::string, std::set<std::string>> table = {
        {"decay", {"gamma", "t_max", "steps", "n_modes", "half_window", "omega0", "width", "g0"}},
        {"symmetrize", {"p", "r_max"}},
        {"zeno", {"k", "n_max"}},
        {"qec-benefit", {"gamma", "t_max", "points"}},
        {"bounds", {"l", "t", "n_max"}},
        {"verify-code", {}},
    };
    const auto it = table.find(scenario);
    if (it == table.end()) throw config_error("unknown scenario: " + scenario);
    return it->second;
}

inline void validate(const ExperimentConfig& cfg) {
    if (!known_scenarios().count(cfg.scenario))
        throw config_error("unknown scenario: " + cfg.scenario);
    const auto& allowed = allowed_params(cfg.scenario);
    for (const auto& [key, value] : cfg.params) {
        if (!allowed.count(key))
            throw config_error("unknown parameter '" + key + "' for scenario " + cfg.scenario);
        if ((key == "gamma" || key == "t_max" || key == "width" || key == "g0" ||
             key == "half_window") && value <= 0.0)
            throw config_error("parameter '" + key + "' must be positive");
    }
    if (cfg.format != "csv" && cfg.format != "json")
        throw config_error("format must be csv or json");
    if (cfg.spectrum != "flat" && cfg.spectrum != "gaussian" && cfg.spectrum != "lorentzian")
        throw config_error("spectrum must be flat, gaussian or lorentzian");
    if (cfg.output_path.empty())
        throw config_error("output path required");
}

inline nlohmann::json render(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["scenario"] = cfg.scenario;
    j["params"] = cfg.params;
    j["code"] = cfg.code;
    j["code_file"] = cfg.code_file;
    j["spectrum"] = cfg.spectrum;
    j["seed"] = cfg.seed;
    j["out"] = cfg.output_path;
    j["format"] = cfg.format;
    return j;
}

inline ExperimentConfig parse(const nlohmann::json& j) {
    static const std::set<std::string> top_keys = {
        "scenario", "params", "code", "code_file", "spectrum", "seed", "out", "format"};
    for (const auto& [key, _] : j.items())
        if (!top_keys.count(key)) throw config_error("unknown config key: " + key);
    ExperimentConfig cfg;
    cfg.scenario = j.value("scenario", std::string{});
    if (j.contains("params"))
        cfg.params = j.at("params").get<std::map<std::string, double>>();
    cfg.code = j.value("code", std::string{"five"});
    cfg.code_file = j.value("code_file", std::string{});
    cfg.spectrum = j.value("spectrum", std::string{"flat"});
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.output_path = j.value("out", std::string{});
    cfg.format = j.value("format", std::string{"csv"});
    return cfg;
}

// QNOISE_THREADS caps internal parallelism; runs are deterministic either way.
inline int max_threads() {
    const char* env = std::getenv("QNOISE_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    if (v < 1) throw config_error("QNOISE_THREADS must be a positive integer");
    return v;
}

} // namespace qnoise::lab
