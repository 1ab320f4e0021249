#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stripvortex/contour_dynamics.hpp"
#include "stripvortex/errors.hpp"
#include "stripvortex/evolution.hpp"
#include "stripvortex/io.hpp"
#include "stripvortex/kernels.hpp"

namespace stripvortex {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBreakdown = 2;

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct GridSpec {
    int nx = 0;
    int ny = 0;
    double x2min = 0.0;
    double x2max = 0.0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    bool have_nx = false, have_ny = false, have_min = false, have_max = false;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("grid: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        try {
            if (key == "nx") {
                g.nx = std::stoi(val);
                have_nx = true;
            } else if (key == "ny") {
                g.ny = std::stoi(val);
                have_ny = true;
            } else if (key == "x2min") {
                g.x2min = std::stod(val);
                have_min = true;
            } else if (key == "x2max") {
                g.x2max = std::stod(val);
                have_max = true;
            } else {
                throw ConfigError("grid: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw ConfigError("grid: cannot parse value '" + val + "' for '" + key + "'");
        }
    }
    if (!(have_nx && have_ny && have_min && have_max)) {
        throw ConfigError("grid: need nx, ny, x2min and x2max");
    }
    if (g.nx < 1 || g.ny < 1) throw ConfigError("grid: nx and ny must be >= 1");
    if (g.ny > 1 && !(g.x2max > g.x2min)) throw ConfigError("grid: x2max must exceed x2min");
    return g;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path) {
    const SimConfig cfg = parse_config(slurp(config_path));
    const RunResult result = run(cfg);
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << '\n';
    write_frames(result.frames, out_path);
    if (result.breakdown) {
        std::cerr << "breakdown: " << result.breakdown_message << '\n'
                  << "partial trajectory written to " << out_path << " ("
                  << result.frames.size() << " frames)\n";
        return kExitBreakdown;
    }
    return kExitOk;
}

int cmd_velocity(const std::string& config_path, const std::string& grid_text,
                 const std::string& out_path) {
    const SimConfig cfg = parse_config(slurp(config_path));
    const PatchSystem system = build_initial_system(cfg);
    const GridSpec g = parse_grid(grid_text);

    std::ofstream os(out_path);
    if (!os) throw IoError("cannot open '" + out_path + "' for writing");
    os << "x1,x2,u1,u2\n";
    for (int j = 0; j < g.ny; ++j) {
        const double x2 =
            g.ny == 1 ? g.x2min : g.x2min + (g.x2max - g.x2min) * j / (g.ny - 1);
        for (int i = 0; i < g.nx; ++i) {
            const double x1 = -0.5 + static_cast<double>(i) / g.nx;
            std::string u1 = "nan", u2 = "nan";
            try {
                const Vec2 u = velocity(system, StripPoint(x1, x2));
                u1 = fmt17(u.x);
                u2 = fmt17(u.y);
            } catch (const NearBoundaryError&) {
                // near-boundary cells are emitted as NaN
            }
            os << fmt17(x1) << ',' << fmt17(x2) << ',' << u1 << ',' << u2 << '\n';
        }
    }
    if (!os) throw IoError("velocity grid output failed");
    return kExitOk;
}

int cmd_kernel(const std::string& point_text) {
    double x1 = 0.0, x2 = 0.0;
    if (std::sscanf(point_text.c_str(), "%lf,%lf", &x1, &x2) != 2) {
        throw ConfigError("point: expected 'x1,x2', got '" + point_text + "'");
    }
    const Vec2 d{x1, x2};
    const Vec2 k = k_inf(d);
    const Mat2 g = grad_k_inf(d);
    std::cout << "{\"point\":[" << fmt17(x1) << ',' << fmt17(x2) << "],\"rho\":" << fmt17(rho(d))
              << ",\"green\":" << fmt17(green(d)) << ",\"k_inf\":[" << fmt17(k.x) << ','
              << fmt17(k.y) << "],\"grad_k_inf\":[[" << fmt17(g.m11) << ',' << fmt17(g.m12)
              << "],[" << fmt17(g.m21) << ',' << fmt17(g.m22) << "]]}" << std::endl;
    return kExitOk;
}

int cmd_replicate(const std::string& frames_path, int copies, const std::string& out_path) {
    const std::vector<FrameRecord> frames = read_frames_file(frames_path);
    std::ofstream os(out_path);
    if (!os) throw IoError("cannot open '" + out_path + "' for writing");
    for (const FrameRecord& fr : frames) {
        PatchSystem system;
        system.contours = fr.contours;
        const std::vector<Contour> replicated = replicate(system, copies);
        os << "{\"t\":" << fmt17(fr.t) << ",\"contours\":[";
        for (size_t c = 0; c < replicated.size(); ++c) {
            if (c) os << ',';
            os << "{\"winding\":" << replicated[c].winding << ",\"nodes\":[";
            for (size_t j = 0; j < replicated[c].nodes.size(); ++j) {
                if (j) os << ',';
                os << '[' << fmt17(replicated[c].nodes[j].x) << ','
                   << fmt17(replicated[c].nodes[j].y) << ']';
            }
            os << "]}";
        }
        os << "]}\n";
    }
    if (!os) throw IoError("replicate output failed");
    return kExitOk;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Contour-dynamics simulator for vortex patches and layers on the periodic strip"};
    app.require_subcommand(1);

    std::string config_path, out_path, grid_text, point_text, frames_path;
    int copies = 1;

    CLI::App* sim = app.add_subcommand("simulate", "Integrate the CDE and write JSON Lines frames");
    sim->add_option("--config", config_path, "JSON configuration file")->required();
    sim->add_option("--out", out_path, "output frames path")->required();

    CLI::App* vel = app.add_subcommand("velocity", "Sample the velocity field on a grid (CSV)");
    vel->add_option("--config", config_path, "JSON configuration file")->required();
    vel->add_option("--grid", grid_text, "grid spec nx=..,ny=..,x2min=..,x2max=..")->required();
    vel->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* ker = app.add_subcommand("kernel", "Print kernel values at a point as JSON");
    ker->add_option("--point", point_text, "evaluation point 'x1,x2'")->required();

    CLI::App* rep = app.add_subcommand("replicate", "Export horizontally replicated contours");
    rep->add_option("--frames", frames_path, "input frames path")->required();
    rep->add_option("--copies", copies, "number of periods")->required();
    rep->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_path);
        if (vel->parsed()) return cmd_velocity(config_path, grid_text, out_path);
        if (ker->parsed()) return cmd_kernel(point_text);
        if (rep->parsed()) return cmd_replicate(frames_path, copies, out_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

} // namespace stripvortex
