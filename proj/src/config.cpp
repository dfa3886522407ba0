#include "polyheat/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polyheat {

namespace {

std::string fmt(double v) {
    if (std::isinf(v)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::runtime_error("config: bad number '" + s + "'");
    return v;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::string join_p(const std::vector<double>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ", ";
        out += fmt(ps[i]);
    }
    return out;
}

std::vector<double> split_p(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(item));
    }
    return out;
}

} // namespace

std::string RunConfig::to_flat_text() const {
    std::ostringstream os;
    os << "command = " << command << "\n";
    os << "grid.dimension = " << grid_dimension << "\n";
    os << "grid.points_per_axis = " << grid_points << "\n";
    os << "grid.box_length = " << fmt(grid_box_length) << "\n";
    os << "operator.d = " << op_d << "\n";
    os << "nonlinearity.m = " << fmt(nl_m) << "\n";
    os << "nonlinearity.lambda = " << fmt(nl_lambda) << "\n";
    os << "nonlinearity.sign = " << nl_sign << "\n";
    os << "solver.T = " << fmt(solver_T) << "\n";
    os << "solver.steps = " << solver_steps << "\n";
    os << "solver.tol = " << fmt(solver_tol) << "\n";
    os << "solver.max_iter = " << solver_max_iter << "\n";
    os << "solver.eps = " << fmt(solver_eps) << "\n";
    os << "initial.kind = " << initial_kind << "\n";
    os << "initial.amplitude = " << fmt(initial_amplitude) << "\n";
    os << "initial.width = " << fmt(initial_width) << "\n";
    os << "initial.path = " << initial_path << "\n";
    os << "norms.track = " << join_p(track_p) << "\n";
    os << "fit.p = " << fmt(fit_p) << "\n";
    os << "fit.window_lo = " << fmt(window_lo) << "\n";
    os << "fit.window_hi = " << fmt(window_hi) << "\n";
    os << "fit.mass_subtract = " << (mass_subtract ? 1 : 0) << "\n";
    os << "norm.phi = " << phi << "\n";
    os << "witness.which = " << witness << "\n";
    os << "witness.r = " << fmt(witness_r) << "\n";
    os << "input = " << input_path << "\n";
    os << "output_dir = " << output_dir << "\n";
    os << "seed = " << seed << "\n";
    os << "jobs = " << jobs << "\n";
    os << "snapshots = " << (snapshots ? 1 : 0) << "\n";
    return os.str();
}

RunConfig RunConfig::from_flat_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": missing '='");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "command") cfg.command = val;
        else if (key == "grid.dimension") cfg.grid_dimension = std::stoi(val);
        else if (key == "grid.points_per_axis") cfg.grid_points = std::stoi(val);
        else if (key == "grid.box_length") cfg.grid_box_length = parse_double(val);
        else if (key == "operator.d") cfg.op_d = std::stoi(val);
        else if (key == "nonlinearity.m") cfg.nl_m = parse_double(val);
        else if (key == "nonlinearity.lambda") cfg.nl_lambda = parse_double(val);
        else if (key == "nonlinearity.sign") cfg.nl_sign = std::stoi(val);
        else if (key == "solver.T") cfg.solver_T = parse_double(val);
        else if (key == "solver.steps") cfg.solver_steps = std::stoi(val);
        else if (key == "solver.tol") cfg.solver_tol = parse_double(val);
        else if (key == "solver.max_iter") cfg.solver_max_iter = std::stoi(val);
        else if (key == "solver.eps") cfg.solver_eps = parse_double(val);
        else if (key == "initial.kind") cfg.initial_kind = val;
        else if (key == "initial.amplitude") cfg.initial_amplitude = parse_double(val);
        else if (key == "initial.width") cfg.initial_width = parse_double(val);
        else if (key == "initial.path") cfg.initial_path = val;
        else if (key == "norms.track") cfg.track_p = split_p(val);
        else if (key == "fit.p") cfg.fit_p = parse_double(val);
        else if (key == "fit.window_lo") cfg.window_lo = parse_double(val);
        else if (key == "fit.window_hi") cfg.window_hi = parse_double(val);
        else if (key == "fit.mass_subtract") cfg.mass_subtract = std::stoi(val) != 0;
        else if (key == "norm.phi") cfg.phi = val;
        else if (key == "witness.which") cfg.witness = val;
        else if (key == "witness.r") cfg.witness_r = parse_double(val);
        else if (key == "input") cfg.input_path = val;
        else if (key == "output_dir") cfg.output_dir = val;
        else if (key == "seed") cfg.seed = std::stol(val);
        else if (key == "jobs") cfg.jobs = std::stoi(val);
        else if (key == "snapshots") cfg.snapshots = std::stoi(val) != 0;
        else throw std::runtime_error("config: unknown key '" + key + "'");
    }
    return cfg;
}

void RunConfig::apply_env_overrides() {
    if (const char* out = std::getenv("POLYHEAT_OUT")) output_dir = out;
}

std::string RunConfig::to_json() const {
    nlohmann::json j;
    std::istringstream is(to_flat_text());
    std::string line;
    while (std::getline(is, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq - 1);
        std::string val = line.substr(eq + 2);
        j[key] = val;
    }
    return j.dump();
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return RunConfig::from_flat_text(ss.str());
}

void save_config_file(const RunConfig& cfg, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write config file " + path);
    os << cfg.to_flat_text();
}

} // namespace polyheat
