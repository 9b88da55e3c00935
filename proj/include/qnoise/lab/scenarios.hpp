// scenarios.hpp
// Named batch experiments over the library, emitting CSV or JSON tables.

#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "qnoise/benefit.hpp"
#include "qnoise/bounds.hpp"
#include "qnoise/codes.hpp"
#include "qnoise/lab/config.hpp"
#include "qnoise/symmetrize.hpp"
#include "qnoise/trajectory.hpp"

namespace qnoise::lab {

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

namespace detail {
inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

inline double param(const ExperimentConfig& cfg, const std::string& key, double fallback) {
    const auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
}
} // namespace detail

// '.' decimal, ',' separator, LF endings, header always present
inline void write_csv(const ResultTable& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << detail::format_value(row[c]);
        out << '\n';
    }
}

inline void write_json(const ResultTable& table, std::ostream& out) {
    nlohmann::json j;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    out << j.dump(2) << '\n';
}

inline QuantumCode resolve_code(const ExperimentConfig& cfg) {
    if (!cfg.code_file.empty()) return load_code_file(cfg.code_file);
    return builtin_code(cfg.code);
}

inline ResultTable run_decay(const ExperimentConfig& cfg) {
    const double gamma = detail::param(cfg, "gamma", 1.0);
    const double t_max = detail::param(cfg, "t_max", 3.0 / gamma);
    const int n_modes = static_cast<int>(detail::param(cfg, "n_modes", 400));
    const double half_window = detail::param(cfg, "half_window", 20.0 * gamma);
    const double omega0 = detail::param(cfg, "omega0", 50.0 * gamma);

    EnvironmentSpec spec = EnvironmentSpec::flat_for_gamma(gamma, omega0, half_window, n_modes);
    if (cfg.spectrum == "gaussian") spec.shape = SpectrumShape::Gaussian;
    if (cfg.spectrum == "lorentzian") spec.shape = SpectrumShape::Lorentzian;
    if (cfg.params.count("width")) spec.width = cfg.params.at("width");
    if (cfg.params.count("g0")) spec.g0 = cfg.params.at("g0");

    const EnvironmentModel env = discretize(spec);
    const int steps = static_cast<int>(detail::param(cfg, "steps", default_steps(env, t_max)));
    const AmplitudeTrajectory traj = integrate(env, t_max, steps);
    const FidelityCurves curves = fidelity_curves(env, traj.times);

    ResultTable table;
    table.columns = {"t", "re_ci", "im_ci", "F_numeric", "F_par", "F_exp"};
    for (std::size_t i = 0; i < traj.n_times(); ++i)
        table.rows.push_back({traj.times[i], traj.c_i[i].real(), traj.c_i[i].imag(),
                              std::norm(traj.c_i[i]), curves.f_par[i], curves.f_exp[i]});
    return table;
}

inline ResultTable run_qec_benefit(const ExperimentConfig& cfg) {
    const double gamma = detail::param(cfg, "gamma", 1.0);
    const double t_max = detail::param(cfg, "t_max", 0.3 / gamma);
    const int points = static_cast<int>(detail::param(cfg, "points", 50));
    if (points < 2) throw config_error("qec-benefit: points >= 2 required");

    QuantumCode code = resolve_code(cfg);
    build_recovery(code);
    std::vector<double> times;
    for (int i = 0; i < points; ++i)
        times.push_back(t_max * i / (points - 1));
    const auto rows = qec_benefit(code, gamma, times);

    ResultTable table;
    table.columns = {"t", "F_ec", "bound", "F_exp_single", "advantage"};
    for (const auto& r : rows)
        table.rows.push_back({r.time, r.f_ec, r.bound, r.f_exp_single,
                              r.f_ec - r.f_exp_single});
    return table;
}

inline ResultTable run_symmetrize(const ExperimentConfig& cfg) {
    const double p = detail::param(cfg, "p", 0.01);
    const int r_max = static_cast<int>(detail::param(cfg, "r_max", 8));
    if (r_max < 1 || r_max > 8) throw config_error("symmetrize: r_max outside 1..8");
    if (p < 0.0 || p > 0.05) throw config_error("symmetrize: p outside [0, 0.05]");

    // dephasing perturbation of |+>, identical on every copy
    const StateVector plus = StateVector::raw(1, (Vec(2) << 1.0, 1.0).finished());
    const DensityOperator rho0 = DensityOperator::pure(plus);
    Mat z = Mat::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const Mat pert = p * (z * rho0.matrix * z - rho0.matrix);

    ResultTable table;
    table.columns = {"R", "F_before", "F_after_exact", "F_after_predicted", "success_prob"};
    for (int r = 1; r <= r_max; ++r) {
        const FirstOrderReport rep =
            first_order_report(plus, std::vector<Mat>(static_cast<std::size_t>(r), pert));
        table.rows.push_back({static_cast<double>(r), rep.f_before, rep.f_after_exact,
                              rep.f_after_predicted, rep.success_prob});
    }
    return table;
}

inline ResultTable run_zeno(const ExperimentConfig& cfg) {
    const double k = detail::param(cfg, "k", 1.0);
    const int n_max = static_cast<int>(detail::param(cfg, "n_max", 1000));
    if (k < 0.0) throw config_error("zeno: k must be nonnegative");
    if (n_max < 1) throw config_error("zeno: n_max must be positive");
    const int n_min = std::max(1, static_cast<int>(std::ceil(std::sqrt(k))));

    ResultTable table;
    table.columns = {"n_projections", "cumulative_success"};
    for (int n = n_min; n <= n_max; ++n)
        table.rows.push_back({static_cast<double>(n), zeno_success(k, n)});
    return table;
}

inline ResultTable run_bounds(const ExperimentConfig& cfg) {
    const int l = static_cast<int>(detail::param(cfg, "l", 1));
    const int t = static_cast<int>(detail::param(cfg, "t", 1));
    const int n_max = static_cast<int>(detail::param(cfg, "n_max", 16));
    check_bound_query(l, t);

    const int min_n = hamming_min_n(l, t);
    const int max_n = gv_max_n(l, t);
    const double root = hamming_rate_root();

    ResultTable table;
    table.columns = {"n", "hamming_feasible", "gv_feasible",
                     "hamming_min_n", "gv_max_n", "rate_root"};
    for (int n = l; n <= n_max; ++n)
        table.rows.push_back({static_cast<double>(n),
                              hamming_feasible(l, t, n) ? 1.0 : 0.0,
                              gv_feasible(l, t, n) ? 1.0 : 0.0,
                              static_cast<double>(min_n),
                              static_cast<double>(max_n), root});
    return table;
}

inline ResultTable run_verify(const ExperimentConfig& cfg) {
    QuantumCode code = resolve_code(cfg);
    const CodeConditionReport rep = verify_conditions(code);
    double n_classes = 0.0;
    if (rep.satisfies_general) {
        build_recovery(code);
        n_classes = static_cast<double>(code.recovery.size());
    }
    ResultTable table;
    table.columns = {"general_pass", "nondegenerate_pass", "max_cross",
                     "max_diag_mismatch", "max_offdiag", "n_errors", "n_classes"};
    table.rows.push_back({rep.satisfies_general ? 1.0 : 0.0,
                          rep.satisfies_nondegenerate ? 1.0 : 0.0,
                          rep.max_cross, rep.max_diag_mismatch, rep.max_offdiag,
                          static_cast<double>(code.error_set.size()), n_classes});
    return table;
}

inline ResultTable run_scenario(const ExperimentConfig& cfg) {
    if (cfg.scenario == "decay") return run_decay(cfg);
    if (cfg.scenario == "qec-benefit") return run_qec_benefit(cfg);
    if (cfg.scenario == "symmetrize") return run_symmetrize(cfg);
    if (cfg.scenario == "zeno") return run_zeno(cfg);
    if (cfg.scenario == "bounds") return run_bounds(cfg);
    if (cfg.scenario == "verify-code") return run_verify(cfg);
    throw config_error("unknown scenario: " + cfg.scenario);
}

inline void run_and_write(const ExperimentConfig& cfg) {
    validate(cfg);
    const ResultTable table = run_scenario(cfg);
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw config_error("cannot open output file: " + cfg.output_path);
    if (cfg.format == "csv")
        write_csv(table, out);
    else
        write_json(table, out);
}

} // namespace qnoise::lab
