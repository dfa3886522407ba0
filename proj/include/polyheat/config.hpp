#ifndef POLYHEAT_CONFIG_HPP
#define POLYHEAT_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace polyheat {

// Flat key/value run configuration with dotted sections. Serializes to the
// same text format it parses; unknown keys are rejected.
struct RunConfig {
    std::string command;

    int grid_dimension = 1;
    int grid_points = 4096;
    double grid_box_length = 32.0;

    int op_d = 2;

    double nl_m = 9.0;
    double nl_lambda = 1.0;
    int nl_sign = +1;

    double solver_T = 100.0;
    int solver_steps = 64;
    double solver_tol = 1e-22;
    int solver_max_iter = 12;
    double solver_eps = 1e-3;

    std::string initial_kind = "bump"; // bump | file
    double initial_amplitude = 0.01;
    double initial_width = 2.0;
    std::string initial_path;

    std::vector<double> track_p = {9.0};
    double fit_p = 9.0;
    double window_lo = 0.0; // 0 = default window
    double window_hi = 0.0;
    bool mass_subtract = true;

    std::string phi = "expl2"; // norm subcommand: expl2 | phi8 | power:<p>
    std::string witness = "discontinuity";
    double witness_r = 1.5;

    std::string input_path;
    std::string output_dir = "out";
    long seed = 1;
    int jobs = 1;
    bool snapshots = false;

    std::string to_flat_text() const;
    static RunConfig from_flat_text(const std::string& text);

    void apply_env_overrides(); // POLYHEAT_OUT
    std::string to_json() const;
};

RunConfig load_config_file(const std::string& path);
void save_config_file(const RunConfig& cfg, const std::string& path);

} // namespace polyheat

#endif
