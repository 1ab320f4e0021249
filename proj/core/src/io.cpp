#include "stripvortex/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "stripvortex/errors.hpp"
#include "stripvortex/evolution.hpp"

namespace stripvortex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path + ": " + message);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) fail(path + "." + item.key(), "unknown key");
    }
}

double get_number(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) fail(path + "." + key, "missing required key");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(path + "." + key, "must be finite");
    return x;
}

long get_integer(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) fail(path + "." + key, "missing required key");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<long>();
}

Vec2 get_vec2(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) fail(path + "." + key, "missing required key");
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        fail(path + "." + key, "expected an array of two numbers");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

PresetSpec parse_contour_spec(const json& obj, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    if (!obj.contains("kind") || !obj.at("kind").is_string()) {
        fail(path + ".kind", "missing or non-string contour kind");
    }
    const std::string kind = obj.at("kind").get<std::string>();
    PresetSpec spec;
    if (kind == "circle") {
        reject_unknown_keys(obj, path, {"kind", "center", "radius"});
        spec.kind = PresetSpec::Kind::circle;
        spec.center = get_vec2(obj, path, "center");
        spec.radius = get_number(obj, path, "radius");
        if (!(spec.radius > 0.0)) fail(path + ".radius", "must be positive");
        if (!(2.0 * spec.radius < 1.0)) {
            fail(path + ".radius", "circle diameter " + std::to_string(2.0 * spec.radius) +
                                       " exceeds the strip width");
        }
    } else if (kind == "ellipse") {
        reject_unknown_keys(obj, path, {"kind", "center", "semi_axes"});
        spec.kind = PresetSpec::Kind::ellipse;
        spec.center = get_vec2(obj, path, "center");
        spec.semi_axes = get_vec2(obj, path, "semi_axes");
        if (!(spec.semi_axes.x > 0.0) || !(spec.semi_axes.y > 0.0)) {
            fail(path + ".semi_axes", "semi-axes must be positive");
        }
        if (!(2.0 * spec.semi_axes.x < 1.0)) {
            fail(path + ".semi_axes", "horizontal extent exceeds the strip width");
        }
    } else if (kind == "flat_layer") {
        reject_unknown_keys(obj, path, {"kind", "h"});
        spec.kind = PresetSpec::Kind::flat_layer;
        spec.h = get_number(obj, path, "h");
        if (!(spec.h > 0.0)) fail(path + ".h", "layer half-height must be positive");
    } else if (kind == "perturbed_layer") {
        reject_unknown_keys(obj, path, {"kind", "h", "amplitude", "mode"});
        spec.kind = PresetSpec::Kind::perturbed_layer;
        spec.h = get_number(obj, path, "h");
        if (!(spec.h > 0.0)) fail(path + ".h", "layer half-height must be positive");
        spec.amplitude = get_number(obj, path, "amplitude");
        const long mode = get_integer(obj, path, "mode");
        if (mode < 1) fail(path + ".mode", "perturbation mode must be >= 1");
        spec.mode = static_cast<int>(mode);
    } else if (kind == "explicit") {
        reject_unknown_keys(obj, path, {"kind", "nodes", "closure"});
        spec.kind = PresetSpec::Kind::explicit_nodes;
        if (!obj.contains("nodes") || !obj.at("nodes").is_array()) {
            fail(path + ".nodes", "missing node list");
        }
        const json& nodes = obj.at("nodes");
        for (size_t i = 0; i < nodes.size(); ++i) {
            const json& v = nodes[i];
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
                fail(path + ".nodes[" + std::to_string(i) + "]",
                     "expected an array of two numbers");
            }
            spec.nodes.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        if (obj.contains("closure")) spec.closure = get_vec2(obj, path, "closure");
    } else {
        fail(path + ".kind", "unknown contour kind '" + kind + "'");
    }
    return spec;
}

} // namespace

SimConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("$", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) fail("$", "top level must be an object");
    reject_unknown_keys(root, "$",
                        {"omega0", "contours", "n_nodes", "dt", "t_end", "save_every",
                         "redistribute_every", "quadrature"});

    SimConfig cfg;
    cfg.omega0 = get_number(root, "$", "omega0");

    if (!root.contains("contours") || !root.at("contours").is_array() ||
        root.at("contours").empty()) {
        fail("$.contours", "expected a non-empty array");
    }
    const json& contours = root.at("contours");
    for (size_t i = 0; i < contours.size(); ++i) {
        cfg.contours.push_back(
            parse_contour_spec(contours[i], "$.contours[" + std::to_string(i) + "]"));
    }

    const long n_nodes = get_integer(root, "$", "n_nodes");
    if (n_nodes < 8 || n_nodes % 2 != 0) fail("$.n_nodes", "must be even and >= 8");
    cfg.n_nodes = static_cast<int>(n_nodes);

    cfg.t_end = get_number(root, "$", "t_end");
    if (!(cfg.t_end >= 0.0)) fail("$.t_end", "must be >= 0");

    if (root.contains("dt")) {
        cfg.dt = get_number(root, "$", "dt");
        if (!(cfg.dt > 0.0)) fail("$.dt", "must be positive");
    }
    if (root.contains("save_every")) {
        const long v = get_integer(root, "$", "save_every");
        if (v < 1) fail("$.save_every", "must be >= 1");
        cfg.save_every = static_cast<int>(v);
    }
    if (root.contains("redistribute_every")) {
        const long v = get_integer(root, "$", "redistribute_every");
        if (v < 0) fail("$.redistribute_every", "must be >= 0");
        cfg.redistribute_every = static_cast<int>(v);
    }
    if (root.contains("quadrature")) {
        if (!root.at("quadrature").is_string()) fail("$.quadrature", "expected a string");
        const std::string q = root.at("quadrature").get<std::string>();
        if (q == "spectral") {
            cfg.quadrature = QuadratureKind::spectral;
        } else if (q == "punctured") {
            cfg.quadrature = QuadratureKind::punctured;
        } else {
            fail("$.quadrature", "expected 'spectral' or 'punctured'");
        }
    }
    return cfg;
}

std::string serialize_config(const SimConfig& config) {
    ordered_json root;
    root["omega0"] = config.omega0;
    root["contours"] = ordered_json::array();
    for (const PresetSpec& spec : config.contours) {
        ordered_json c;
        switch (spec.kind) {
        case PresetSpec::Kind::circle:
            c["kind"] = "circle";
            c["center"] = {spec.center.x, spec.center.y};
            c["radius"] = spec.radius;
            break;
        case PresetSpec::Kind::ellipse:
            c["kind"] = "ellipse";
            c["center"] = {spec.center.x, spec.center.y};
            c["semi_axes"] = {spec.semi_axes.x, spec.semi_axes.y};
            break;
        case PresetSpec::Kind::flat_layer:
            c["kind"] = "flat_layer";
            c["h"] = spec.h;
            break;
        case PresetSpec::Kind::perturbed_layer:
            c["kind"] = "perturbed_layer";
            c["h"] = spec.h;
            c["amplitude"] = spec.amplitude;
            c["mode"] = spec.mode;
            break;
        case PresetSpec::Kind::explicit_nodes: {
            c["kind"] = "explicit";
            ordered_json nodes = ordered_json::array();
            for (const Vec2& v : spec.nodes) nodes.push_back({v.x, v.y});
            c["nodes"] = std::move(nodes);
            c["closure"] = {spec.closure.x, spec.closure.y};
            break;
        }
        }
        root["contours"].push_back(std::move(c));
    }
    root["n_nodes"] = config.n_nodes;
    root["dt"] = config.dt;
    root["t_end"] = config.t_end;
    root["save_every"] = config.save_every;
    root["redistribute_every"] = config.redistribute_every;
    root["quadrature"] = config.quadrature == QuadratureKind::spectral ? "spectral" : "punctured";
    return root.dump();
}

PatchSystem build_initial_system(const SimConfig& config) {
    PatchSystem system;
    system.omega0 = config.omega0;
    const int n = config.n_nodes;

    auto alpha = [n](int j) { return kTwoPi * j / n; };

    for (const PresetSpec& spec : config.contours) {
        switch (spec.kind) {
        case PresetSpec::Kind::circle: {
            std::vector<Vec2> nodes(n);
            for (int j = 0; j < n; ++j) {
                nodes[j] = spec.center +
                           spec.radius * Vec2{std::cos(alpha(j)), std::sin(alpha(j))};
            }
            system.contours.push_back(validate_contour(std::move(nodes), {0.0, 0.0}));
            break;
        }
        case PresetSpec::Kind::ellipse: {
            std::vector<Vec2> nodes(n);
            for (int j = 0; j < n; ++j) {
                nodes[j] = spec.center + Vec2{spec.semi_axes.x * std::cos(alpha(j)),
                                              spec.semi_axes.y * std::sin(alpha(j))};
            }
            system.contours.push_back(validate_contour(std::move(nodes), {0.0, 0.0}));
            break;
        }
        case PresetSpec::Kind::flat_layer:
        case PresetSpec::Kind::perturbed_layer: {
            const double a =
                spec.kind == PresetSpec::Kind::perturbed_layer ? spec.amplitude : 0.0;
            const int mode = spec.kind == PresetSpec::Kind::perturbed_layer ? spec.mode : 1;
            std::vector<Vec2> bottom(n), top(n);
            for (int j = 0; j < n; ++j) {
                const double pert = a * std::sin(mode * alpha(j));
                bottom[j] = {alpha(j) / kTwoPi - 0.5, -spec.h + pert};
                top[j] = {0.5 - alpha(j) / kTwoPi, spec.h + pert};
            }
            system.contours.push_back(validate_contour(std::move(bottom), {1.0, 0.0}));
            system.contours.push_back(validate_contour(std::move(top), {-1.0, 0.0}));
            break;
        }
        case PresetSpec::Kind::explicit_nodes:
            system.contours.push_back(validate_contour(spec.nodes, spec.closure));
            break;
        }
    }

    int winding_sum = 0;
    for (const Contour& c : system.contours) winding_sum += c.winding;
    if (winding_sum != 0) {
        throw ConfigError("$.contours: total winding must be 0 so the vorticity support is "
                          "vertically bounded, got " +
                          std::to_string(winding_sum));
    }
    return system;
}

namespace {

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

std::string frame_to_line(const FrameRecord& fr) {
    std::string line = "{\"t\":";
    append_number(line, fr.t);
    line += ",\"contours\":[";
    for (size_t c = 0; c < fr.contours.size(); ++c) {
        if (c) line += ',';
        line += "{\"winding\":" + std::to_string(fr.contours[c].winding) + ",\"nodes\":[";
        const auto& nodes = fr.contours[c].nodes;
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j) line += ',';
            line += '[';
            append_number(line, nodes[j].x);
            line += ',';
            append_number(line, nodes[j].y);
            line += ']';
        }
        line += "]}";
    }
    line += "],\"diagnostics\":{\"area\":";
    append_number(line, fr.diagnostics.area);
    line += ",\"vertical_moment\":";
    append_number(line, fr.diagnostics.vertical_moment);
    line += ",\"gamma_star\":[";
    for (size_t c = 0; c < fr.diagnostics.gamma_star.size(); ++c) {
        if (c) line += ',';
        append_number(line, fr.diagnostics.gamma_star[c]);
    }
    line += "],\"max_speed\":";
    append_number(line, fr.diagnostics.max_speed);
    line += ",\"m2\":";
    append_number(line, fr.diagnostics.m2);
    line += ",\"m1_sum\":";
    append_number(line, fr.diagnostics.m1_sum);
    line += "}}";
    return line;
}

} // namespace

void write_frames(const std::vector<FrameRecord>& frames, std::ostream& os) {
    for (size_t i = 0; i < frames.size(); ++i) {
        os << frame_to_line(frames[i]) << '\n';
        if (!os) {
            throw IoError("frame output failed after writing frame " + std::to_string(i));
        }
    }
    os.flush();
    if (!os) throw IoError("frame output failed on flush");
}

void write_frames(const std::vector<FrameRecord>& frames, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    write_frames(frames, os);
}

std::vector<FrameRecord> read_frames(std::istream& is) {
    std::vector<FrameRecord> frames;
    std::string line;
    size_t index = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw IoError("frame " + std::to_string(index) + ": malformed JSON: " + e.what());
        }
        FrameRecord fr;
        fr.t = obj.at("t").get<double>();
        for (const json& c : obj.at("contours")) {
            Contour contour;
            contour.winding = c.at("winding").get<int>();
            for (const json& v : c.at("nodes")) {
                contour.nodes.push_back({v[0].get<double>(), v[1].get<double>()});
            }
            fr.contours.push_back(std::move(contour));
        }
        if (obj.contains("diagnostics")) {
            const json& d = obj.at("diagnostics");
            fr.diagnostics.area = d.at("area").get<double>();
            fr.diagnostics.vertical_moment = d.at("vertical_moment").get<double>();
            for (const json& g : d.at("gamma_star")) {
                fr.diagnostics.gamma_star.push_back(g.get<double>());
            }
            fr.diagnostics.max_speed = d.at("max_speed").get<double>();
            fr.diagnostics.m2 = d.at("m2").get<double>();
            fr.diagnostics.m1_sum = d.at("m1_sum").get<double>();
        }
        frames.push_back(std::move(fr));
        ++index;
    }
    return frames;
}

std::vector<FrameRecord> read_frames_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "' for reading");
    return read_frames(is);
}

} // namespace stripvortex
