#include "camcover/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "camcover/rng.hpp"
#include "json.hpp"

namespace camcover {

namespace {

constexpr int kSchemaVersion = 1;

struct Harmonic {
    int order;
    double amplitude;
    double phase;
};

double field_value(const std::vector<Harmonic>& field, double u) {
    double v = 0.0;
    for (const Harmonic& h : field) v += h.amplitude * std::cos(h.order * u + h.phase);
    return v;
}

double field_derivative(const std::vector<Harmonic>& field, double u) {
    double v = 0.0;
    for (const Harmonic& h : field) v -= h.amplitude * h.order * std::sin(h.order * u + h.phase);
    return v;
}

}  // namespace

DeformableContour generate_random_contour(const ContourGeneratorSpec& spec) {
    if (spec.point_count < 3)
        throw std::domain_error("contour generator: point count must be >= 3");
    if (spec.sample_count < 2)
        throw std::domain_error("contour generator: sample count must be >= 2");
    if (!(spec.base_radius > 0.0))
        throw std::domain_error("contour generator: base radius must be positive");
    if (spec.roughness < 0.0 || spec.deformation < 0.0)
        throw std::domain_error("contour generator: roughness and deformation must be >= 0");
    if (!(spec.t_end > spec.t_start) || spec.t_start < 0.0)
        throw std::domain_error("contour generator: needs t_end > t_start >= 0");

    std::mt19937_64 rng(spec.seed);

    // Base shape: radius r(u) = base_radius * (1 + sum of low harmonics).
    std::vector<Harmonic> shape;
    for (int order = 2; order <= 5; ++order) {
        const double amplitude =
            spec.base_radius * spec.roughness * uniform_in(rng, 0.5, 1.0) / order;
        shape.push_back({order, amplitude, uniform_in(rng, 0.0, kTwoPi)});
    }

    // Radial deformation field, rescaled so its largest magnitude over the
    // sampled angles is exactly the requested displacement.
    std::vector<Harmonic> motion;
    for (int order = 1; order <= 3; ++order)
        motion.push_back({order, uniform_in(rng, 0.5, 1.0) / order, uniform_in(rng, 0.0, kTwoPi)});

    const int k_count = spec.point_count;
    const int m_count = spec.sample_count;
    std::vector<double> angles(static_cast<std::size_t>(k_count));
    double peak = 0.0;
    for (int k = 0; k < k_count; ++k) {
        angles[static_cast<std::size_t>(k)] = kTwoPi * k / k_count;
        peak = std::max(peak, std::abs(field_value(motion, angles[static_cast<std::size_t>(k)])));
    }
    const double motion_scale = peak > 0.0 ? spec.deformation / peak : 0.0;
    for (Harmonic& h : motion) h.amplitude *= motion_scale;

    DeformableContour contour;
    contour.trajectories.reserve(static_cast<std::size_t>(k_count));
    for (int k = 0; k < k_count; ++k) {
        const double u = angles[static_cast<std::size_t>(k)];
        const double cos_u = std::cos(u);
        const double sin_u = std::sin(u);
        Trajectory trajectory;
        trajectory.point_index = k + 1;
        trajectory.t0 = spec.t_start;
        trajectory.ts = spec.t_end;
        trajectory.samples.reserve(static_cast<std::size_t>(m_count));
        for (int m = 0; m < m_count; ++m) {
            const double tau = static_cast<double>(m) / (m_count - 1);
            const double radius =
                spec.base_radius + field_value(shape, u) + tau * field_value(motion, u);
            if (!(radius > 0.0))
                throw std::domain_error(
                    "contour generator: ripple plus deformation exceeds the base radius");
            const double radius_du = field_derivative(shape, u) + tau * field_derivative(motion, u);
            // Tangent of u -> radius(u) * (cos u, sin u); outward normal is
            // the tangent rotated clockwise for this counterclockwise sweep.
            const Vec2 tangent{radius_du * cos_u - radius * sin_u,
                               radius_du * sin_u + radius * cos_u};
            const double rho = std::atan2(-tangent.x, tangent.y);
            trajectory.samples.emplace_back(radius * cos_u, radius * sin_u, rho);
        }
        contour.trajectories.push_back(std::move(trajectory));
    }
    validate(contour);
    return contour;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
    throw std::runtime_error(origin + ": " + message);
}

const json& require(const json& obj, const char* key, const std::string& where,
                     const std::string& origin) {
    if (!obj.is_object()) fail(origin, where + " must be an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(origin, where + ": missing field '" + key + "'");
    return *it;
}

double require_number(const json& obj, const char* key, const std::string& where,
                      const std::string& origin) {
    const json& v = require(obj, key, where, origin);
    if (!v.is_number()) fail(origin, where + "." + key + " must be a number");
    return v.get<double>();
}

int require_int(const json& obj, const char* key, const std::string& where,
                const std::string& origin) {
    const json& v = require(obj, key, where, origin);
    if (!v.is_number_integer()) fail(origin, where + "." + key + " must be an integer");
    return v.get<int>();
}

/// Reads an angle stored as either <base>_rad or <base>_deg.
double require_angle(const json& obj, const std::string& base, const std::string& where,
                     const std::string& origin) {
    const std::string rad_key = base + "_rad";
    const std::string deg_key = base + "_deg";
    const bool has_rad = obj.is_object() && obj.contains(rad_key);
    const bool has_deg = obj.is_object() && obj.contains(deg_key);
    if (has_rad && has_deg)
        fail(origin, where + ": give either " + rad_key + " or " + deg_key + ", not both");
    if (has_rad) return require_number(obj, rad_key.c_str(), where, origin);
    if (has_deg) return deg_to_rad(require_number(obj, deg_key.c_str(), where, origin));
    fail(origin, where + ": missing field '" + rad_key + "' (or '" + deg_key + "')");
}

void read_optional_angle(const json& obj, const std::string& base, const std::string& where,
                         const std::string& origin, double& out) {
    const bool has = obj.contains(base + "_rad") || obj.contains(base + "_deg");
    if (has) out = require_angle(obj, base, where, origin);
}

CameraIntrinsics read_intrinsics(const json& obj, const std::string& where,
                                 const std::string& origin) {
    CameraIntrinsics intrinsics;
    intrinsics.d_min = require_number(obj, "d_min_mm", where, origin);
    intrinsics.d_max = require_number(obj, "d_max_mm", where, origin);
    intrinsics.half_angle = require_angle(obj, "half_angle", where, origin);
    return intrinsics;
}

json write_intrinsics(const CameraIntrinsics& intrinsics) {
    return {{"d_min_mm", intrinsics.d_min},
            {"d_max_mm", intrinsics.d_max},
            {"half_angle_rad", intrinsics.half_angle}};
}

PackParams read_params(const json& obj, const std::string& where, const std::string& origin) {
    PackParams params;
    if (obj.is_null()) return params;
    if (!obj.is_object()) fail(origin, where + " must be an object");
    auto read_int = [&](const char* key, int& out) {
        if (obj.contains(key)) out = require_int(obj, key, where, origin);
    };
    auto read_num = [&](const char* key, double& out) {
        if (obj.contains(key)) out = require_number(obj, key, where, origin);
    };
    read_int("pack_size", params.pack_size);
    read_num("detective_ratio", params.detective_ratio);
    read_num("elimination_ratio", params.elimination_ratio);
    read_int("wander_times", params.wander_times);
    read_optional_angle(obj, "wander_dir_offset", where, origin, params.wander_dir_offset);
    read_num("wander_step_pos_mm", params.wander_step_pos);
    read_optional_angle(obj, "wander_step_ori", where, origin, params.wander_step_ori);
    read_int("wander_gain_levels", params.wander_gain_levels);
    read_num("wander_gain_offset", params.wander_gain_offset);
    read_int("rush_times", params.rush_times);
    read_num("rush_step_pos_mm", params.rush_step_pos);
    read_optional_angle(obj, "rush_step_ori", where, origin, params.rush_step_ori);
    read_num("besiege_radius_mm", params.besiege_radius);
    read_int("besiege_times", params.besiege_times);
    read_num("besiege_step_pos_mm", params.besiege_step_pos);
    read_optional_angle(obj, "besiege_step_ori", where, origin, params.besiege_step_ori);
    read_num("besiege_gain_min", params.besiege_gain_min);
    read_num("besiege_gain_max", params.besiege_gain_max);
    read_int("max_iterations", params.max_iterations);
    if (obj.contains("seed")) {
        const json& v = obj.at("seed");
        if (!v.is_number_unsigned() && !v.is_number_integer())
            fail(origin, where + ".seed must be a nonnegative integer");
        params.seed = v.get<std::uint64_t>();
    }
    return params;
}

json write_params(const PackParams& params) {
    return {{"pack_size", params.pack_size},
            {"detective_ratio", params.detective_ratio},
            {"elimination_ratio", params.elimination_ratio},
            {"wander_times", params.wander_times},
            {"wander_dir_offset_rad", params.wander_dir_offset},
            {"wander_step_pos_mm", params.wander_step_pos},
            {"wander_step_ori_rad", params.wander_step_ori},
            {"wander_gain_levels", params.wander_gain_levels},
            {"wander_gain_offset", params.wander_gain_offset},
            {"rush_times", params.rush_times},
            {"rush_step_pos_mm", params.rush_step_pos},
            {"rush_step_ori_rad", params.rush_step_ori},
            {"besiege_radius_mm", params.besiege_radius},
            {"besiege_times", params.besiege_times},
            {"besiege_step_pos_mm", params.besiege_step_pos},
            {"besiege_step_ori_rad", params.besiege_step_ori},
            {"besiege_gain_min", params.besiege_gain_min},
            {"besiege_gain_max", params.besiege_gain_max},
            {"max_iterations", params.max_iterations},
            {"seed", params.seed}};
}

ContourGeneratorSpec read_generator(const json& obj, const std::string& where,
                                    const std::string& origin) {
    ContourGeneratorSpec spec;
    const json& seed = require(obj, "seed", where, origin);
    if (!seed.is_number_unsigned() && !seed.is_number_integer())
        fail(origin, where + ".seed must be a nonnegative integer");
    spec.seed = seed.get<std::uint64_t>();
    spec.point_count = require_int(obj, "point_count", where, origin);
    spec.sample_count = require_int(obj, "sample_count", where, origin);
    spec.t_start = require_number(obj, "t_start", where, origin);
    spec.t_end = require_number(obj, "t_end", where, origin);
    spec.base_radius = require_number(obj, "base_radius_mm", where, origin);
    spec.roughness = require_number(obj, "roughness", where, origin);
    spec.deformation = require_number(obj, "deformation_mm", where, origin);
    return spec;
}

json write_generator(const ContourGeneratorSpec& spec) {
    return {{"type", "generated"},
            {"seed", spec.seed},
            {"point_count", spec.point_count},
            {"sample_count", spec.sample_count},
            {"t_start", spec.t_start},
            {"t_end", spec.t_end},
            {"base_radius_mm", spec.base_radius},
            {"roughness", spec.roughness},
            {"deformation_mm", spec.deformation}};
}

DeformableContour read_explicit_contour(const json& obj, const std::string& where,
                                        const std::string& origin) {
    const double t0 = require_number(obj, "t_start", where, origin);
    const double ts = require_number(obj, "t_end", where, origin);
    const json& list = require(obj, "trajectories", where, origin);
    if (!list.is_array() || list.empty())
        fail(origin, where + ".trajectories must be a nonempty array");
    DeformableContour contour;
    int index = 1;
    for (const json& item : list) {
        const std::string entry = where + ".trajectories[" + std::to_string(index - 1) + "]";
        Trajectory trajectory;
        trajectory.point_index =
            item.contains("point") ? require_int(item, "point", entry, origin) : index;
        trajectory.t0 = t0;
        trajectory.ts = ts;
        const json& samples = require(item, "samples", entry, origin);
        if (!samples.is_array()) fail(origin, entry + ".samples must be an array");
        int sample_no = 0;
        for (const json& sample : samples) {
            const std::string sample_where = entry + ".samples[" + std::to_string(sample_no) + "]";
            trajectory.samples.emplace_back(require_number(sample, "x_mm", sample_where, origin),
                                            require_number(sample, "y_mm", sample_where, origin),
                                            require_angle(sample, "rho", sample_where, origin));
            ++sample_no;
        }
        contour.trajectories.push_back(std::move(trajectory));
        ++index;
    }
    return contour;
}

json write_explicit_contour(const DeformableContour& contour) {
    json list = json::array();
    for (const Trajectory& trajectory : contour.trajectories) {
        json samples = json::array();
        for (const Pose& pose : trajectory.samples)
            samples.push_back({{"x_mm", pose.x}, {"y_mm", pose.y}, {"rho_rad", pose.rho}});
        list.push_back({{"point", trajectory.point_index}, {"samples", std::move(samples)}});
    }
    const Trajectory& first = contour.trajectories.front();
    return {{"type", "explicit"},
            {"t_start", first.t0},
            {"t_end", first.ts},
            {"trajectories", std::move(list)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(path + ": write failed");
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, e.what());
    }
}

void check_schema(const json& root, const std::string& origin) {
    const int version = require_int(root, "schema_version", "document", origin);
    if (version != kSchemaVersion)
        fail(origin, "unsupported schema_version " + std::to_string(version) + " (expected " +
                         std::to_string(kSchemaVersion) + ")");
}

}  // namespace

void validate(const Scenario& scenario) {
    validate(scenario.intrinsics);
    if (scenario.camera_count < 1)
        throw std::domain_error("scenario: camera count must be >= 1");
    if (scenario.space.camera_count != scenario.camera_count)
        throw std::domain_error("scenario: search space camera count mismatch");
    validate(scenario.space);
    validate(scenario.params, scenario.space);
    validate(scenario.contour);
}

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    const json root = parse_json(text, origin);
    check_schema(root, origin);

    Scenario scenario;
    const json& name = require(root, "name", "document", origin);
    if (!name.is_string()) fail(origin, "name must be a string");
    scenario.name = name.get<std::string>();
    scenario.intrinsics = read_intrinsics(require(root, "intrinsics", "document", origin),
                                          "intrinsics", origin);
    scenario.camera_count = require_int(root, "camera_count", "document", origin);

    const json& space = require(root, "space", "document", origin);
    scenario.space.x_min = require_number(space, "x_min_mm", "space", origin);
    scenario.space.x_max = require_number(space, "x_max_mm", "space", origin);
    scenario.space.y_min = require_number(space, "y_min_mm", "space", origin);
    scenario.space.y_max = require_number(space, "y_max_mm", "space", origin);
    scenario.space.camera_count = scenario.camera_count;

    scenario.params = read_params(root.contains("params") ? root.at("params") : json(),
                                  "params", origin);

    const json& contour = require(root, "contour", "document", origin);
    const json& type = require(contour, "type", "contour", origin);
    if (type == "generated") {
        scenario.generator = read_generator(contour, "contour", origin);
        scenario.contour = generate_random_contour(*scenario.generator);
    } else if (type == "explicit") {
        scenario.contour = read_explicit_contour(contour, "contour", origin);
    } else {
        fail(origin, "contour.type must be \"generated\" or \"explicit\"");
    }

    try {
        validate(scenario);
    } catch (const std::domain_error& e) {
        fail(origin, e.what());
    }
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    return parse_scenario(read_file(path), path);
}

std::string serialize_scenario(const Scenario& scenario) {
    json root = {{"schema_version", kSchemaVersion},
                 {"name", scenario.name},
                 {"intrinsics", write_intrinsics(scenario.intrinsics)},
                 {"camera_count", scenario.camera_count},
                 {"space",
                  {{"x_min_mm", scenario.space.x_min},
                   {"x_max_mm", scenario.space.x_max},
                   {"y_min_mm", scenario.space.y_min},
                   {"y_max_mm", scenario.space.y_max}}},
                 {"params", write_params(scenario.params)}};
    root["contour"] = scenario.generator ? write_generator(*scenario.generator)
                                         : write_explicit_contour(scenario.contour);
    return root.dump(2) + "\n";
}

void save_scenario(const std::string& path, const Scenario& scenario) {
    write_file(path, serialize_scenario(scenario));
}

Deployment parse_deployment(const std::string& text, const std::string& origin) {
    const json root = parse_json(text, origin);
    check_schema(root, origin);
    Deployment deployment;
    deployment.intrinsics = read_intrinsics(require(root, "intrinsics", "document", origin),
                                            "intrinsics", origin);
    const json& cameras = require(root, "cameras", "document", origin);
    if (!cameras.is_array()) fail(origin, "cameras must be an array");
    int index = 0;
    for (const json& item : cameras) {
        const std::string where = "cameras[" + std::to_string(index) + "]";
        deployment.cameras.emplace_back(require_number(item, "x_mm", where, origin),
                                        require_number(item, "y_mm", where, origin),
                                        require_angle(item, "theta", where, origin));
        ++index;
    }
    try {
        validate(deployment);
    } catch (const std::domain_error& e) {
        fail(origin, e.what());
    }
    return deployment;
}

Deployment load_deployment(const std::string& path) {
    return parse_deployment(read_file(path), path);
}

std::string serialize_deployment(const Deployment& deployment) {
    json cameras = json::array();
    for (const CameraConfig& camera : deployment.cameras)
        cameras.push_back({{"x_mm", camera.x}, {"y_mm", camera.y}, {"theta_rad", camera.theta}});
    const json root = {{"schema_version", kSchemaVersion},
                       {"intrinsics", write_intrinsics(deployment.intrinsics)},
                       {"cameras", std::move(cameras)}};
    return root.dump(2) + "\n";
}

void save_deployment(const std::string& path, const Deployment& deployment) {
    write_file(path, serialize_deployment(deployment));
}

}  // namespace camcover
