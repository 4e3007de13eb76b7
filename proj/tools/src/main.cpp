// Command line front end: every subcommand prints a deterministic CSV or JSON
// document (metadata first), so runs can be diffed byte for byte.
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monopole/acceptance.hpp"
#include "monopole/coriolis.hpp"
#include "monopole/dynamics.hpp"
#include "monopole/errors.hpp"
#include "monopole/exchange.hpp"
#include "monopole/fields.hpp"
#include "monopole/loops.hpp"
#include "monopole/phases.hpp"
#include "monopole/setup.hpp"
#include "monopole/version.hpp"

namespace {

using monopole::Vec3;
using Json = nlohmann::ordered_json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Vec3 parse_vec3(const std::string& text) {
  std::istringstream ss(text);
  Vec3 v;
  char c1 = 0, c2 = 0;
  if (!(ss >> v.x() >> c1 >> v.y() >> c2 >> v.z()) || c1 != ',' || c2 != ',' ||
      !(ss >> std::ws).eof()) {
    throw monopole::ValidationError("expected a vector as x,y,z: got '" + text + "'");
  }
  return v;
}

Vec3 vec3_from_json(const Json& j, const std::string& key) {
  if (j.is_string()) return parse_vec3(j.get<std::string>());
  if (j.is_array() && j.size() == 3 && j[0].is_number() && j[1].is_number() &&
      j[2].is_number()) {
    return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
  }
  throw monopole::ValidationError("config key '" + key +
                                  "' must be \"x,y,z\" or a 3-number array");
}

// Config file support: JSON object, one key per long option (without the
// leading dashes). Command line flags win over config values.
class ConfigBinding {
 public:
  void bind(CLI::Option* option, const std::string& key,
            std::function<void(const Json&)> apply) {
    entries_[key] = {option, std::move(apply)};
  }

  void apply_file(const std::string& path) const {
    std::ifstream in(path);
    if (!in) throw monopole::ValidationError("cannot open config file: " + path);
    Json config;
    try {
      in >> config;
    } catch (const Json::parse_error& e) {
      throw monopole::ValidationError(std::string("config is not valid JSON: ") +
                                      e.what());
    }
    if (!config.is_object()) {
      throw monopole::ValidationError("config root must be a JSON object");
    }
    for (const auto& [key, value] : config.items()) {
      const auto it = entries_.find(key);
      if (it == entries_.end()) {
        throw monopole::ValidationError("config key '" + key +
                                        "' is not recognized by this command");
      }
      if (it->second.option->count() > 0) continue;  // flag wins
      try {
        it->second.apply(value);
      } catch (const Json::exception& e) {
        throw monopole::ValidationError("config key '" + key + "': " + e.what());
      }
    }
  }

 private:
  struct Entry {
    CLI::Option* option;
    std::function<void(const Json&)> apply;
  };
  std::map<std::string, Entry> entries_;
};

struct OutputTarget {
  std::string path = "-";  // "-" means stdout
  std::string format = "csv";

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    auto* opt_out = cmd->add_option("-o,--output", path, "Output file ('-' = stdout)");
    auto* opt_fmt = cmd->add_option("--format", format, "Output format")
                        ->check(CLI::IsMember({"csv", "json"}));
    cfg.bind(opt_out, "output", [this](const Json& j) { path = j.get<std::string>(); });
    cfg.bind(opt_fmt, "format", [this](const Json& j) {
      format = j.get<std::string>();
      if (format != "csv" && format != "json") {
        throw monopole::ValidationError("format must be csv or json");
      }
    });
  }

  void write(const std::string& text) const {
    if (path == "-") {
      std::fputs(text.c_str(), stdout);
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw monopole::ValidationError("cannot write output file: " + path);
    out << text;
  }
};

std::string csv_document(const std::string& command, const Json& meta,
                         const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows,
                         const std::vector<std::string>& notes = {}) {
  std::string text = "# monopole-lab " + command + "\n";
  text += "# version: ";
  text += monopole::kVersion;
  text += "\n# config: " + meta.dump() + "\n";
  for (const std::string& note : notes) text += "# " + note + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    text += (i == 0 ? "" : ",") + columns[i];
  }
  text += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) text += ",";
      text += num(row[i]);
    }
    text += "\n";
  }
  return text;
}

std::string json_document(const std::string& command, const Json& meta,
                          const std::vector<std::string>& columns,
                          const std::vector<std::vector<double>>& rows,
                          const std::vector<std::string>& notes = {}) {
  Json doc;
  doc["command"] = command;
  doc["version"] = monopole::kVersion;
  doc["config"] = meta;
  if (!notes.empty()) doc["notes"] = notes;
  Json out_rows = Json::array();
  for (const auto& row : rows) {
    Json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[columns[i]] = row[i];
    out_rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(out_rows);
  return doc.dump(2) + "\n";
}

void emit(const OutputTarget& target, const std::string& command, const Json& meta,
          const std::vector<std::string>& columns,
          const std::vector<std::vector<double>>& rows,
          const std::vector<std::string>& notes = {}) {
  target.write(target.format == "csv"
                   ? csv_document(command, meta, columns, rows, notes)
                   : json_document(command, meta, columns, rows, notes));
}

// shared physics options -------------------------------------------------

struct SetupOptions {
  int n = 1;
  double charge = 1.0, hbar = 1.0, light_speed = 1.0, mass = 1.0;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    auto* o_n = cmd->add_option("-n,--n", n, "Coupling index (integer)");
    auto* o_e = cmd->add_option("--charge", charge, "Electric charge");
    auto* o_h = cmd->add_option("--hbar", hbar, "Reduced Planck constant");
    auto* o_c = cmd->add_option("--light-speed", light_speed, "Speed of light");
    auto* o_m = cmd->add_option("--mass", mass, "Particle mass");
    cfg.bind(o_n, "n", [this](const Json& j) { n = j.get<int>(); });
    cfg.bind(o_e, "charge", [this](const Json& j) { charge = j.get<double>(); });
    cfg.bind(o_h, "hbar", [this](const Json& j) { hbar = j.get<double>(); });
    cfg.bind(o_c, "light-speed", [this](const Json& j) { light_speed = j.get<double>(); });
    cfg.bind(o_m, "mass", [this](const Json& j) { mass = j.get<double>(); });
  }

  monopole::PhysicalSetup make() const {
    monopole::SetupOverrides o;
    o.charge = charge;
    o.hbar = hbar;
    o.light_speed = light_speed;
    o.mass = mass;
    return monopole::PhysicalSetup::quantized(n, o);
  }

  void describe(Json& meta) const {
    meta["n"] = n;
    meta["charge"] = charge;
    meta["hbar"] = hbar;
    meta["light_speed"] = light_speed;
    meta["mass"] = mass;
  }
};

struct LoopOptions {
  double theta = monopole::kPi / 2.0;
  int vertices = 1000;
  int turns = 1;
  double radius = 1.0;
  std::string axis_text = "0,0,1";
  std::string loop_file;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    auto* o_t = cmd->add_option("--theta", theta, "Cap polar angle (radians)");
    auto* o_v = cmd->add_option("--vertices", vertices, "Cap vertex count");
    auto* o_w = cmd->add_option("--turns", turns, "Number of times the cap is wound");
    auto* o_r = cmd->add_option("--radius", radius, "Cap radius");
    auto* o_a = cmd->add_option("--axis", axis_text, "Cap axis as x,y,z");
    auto* o_f = cmd->add_option("--loop", loop_file, "CSV file with loop vertices");
    cfg.bind(o_t, "theta", [this](const Json& j) { theta = j.get<double>(); });
    cfg.bind(o_v, "vertices", [this](const Json& j) { vertices = j.get<int>(); });
    cfg.bind(o_w, "turns", [this](const Json& j) { turns = j.get<int>(); });
    cfg.bind(o_r, "radius", [this](const Json& j) { radius = j.get<double>(); });
    cfg.bind(o_a, "axis", [this](const Json& j) {
      axis_text = vec3_text(j, "axis");
    });
    cfg.bind(o_f, "loop", [this](const Json& j) { loop_file = j.get<std::string>(); });
  }

  static std::string vec3_text(const Json& j, const std::string& key) {
    const Vec3 v = vec3_from_json(j, key);
    return num(v.x()) + "," + num(v.y()) + "," + num(v.z());
  }

  monopole::ClosedPath make() const {
    if (!loop_file.empty()) return monopole::ClosedPath::from_csv(loop_file);
    return monopole::ClosedPath::cap_wound(theta, vertices, turns, radius,
                                           parse_vec3(axis_text));
  }

  void describe(Json& meta) const {
    if (!loop_file.empty()) {
      meta["loop"] = loop_file;
    } else {
      meta["theta"] = theta;
      meta["vertices"] = vertices;
      meta["turns"] = turns;
      meta["radius"] = radius;
      meta["axis"] = axis_text;
    }
  }
};

// subcommands -------------------------------------------------------------

struct SimulateCommand {
  SetupOptions setup;
  OutputTarget out;
  std::string r0_text = "1,0,0";
  std::string v0_text = "0,0.5,0";
  double t_end = 10.0;
  std::size_t max_steps = 100000;
  double max_rotation = 0.05;
  double max_displacement = 0.01;
  double min_radius = 0.0;  // 0 = scale from the initial radius
  std::size_t every = 1;
  int exit_code = 0;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    setup.attach(cmd, cfg);
    out.attach(cmd, cfg);
    auto* o_r0 = cmd->add_option("--r0", r0_text, "Initial position x,y,z");
    auto* o_v0 = cmd->add_option("--v0", v0_text, "Initial velocity x,y,z");
    auto* o_te = cmd->add_option("--t-end", t_end, "Integration end time");
    auto* o_ms = cmd->add_option("--max-steps", max_steps, "Step budget");
    auto* o_mr = cmd->add_option("--max-rotation", max_rotation,
                                 "Velocity rotation cap per step (radians)");
    auto* o_md = cmd->add_option("--max-displacement", max_displacement,
                                 "Displacement cap per step (initial radii)");
    auto* o_mn = cmd->add_option("--min-radius", min_radius,
                                 "Stop radius (default: 1e-3 of initial radius)");
    auto* o_ev = cmd->add_option("--every", every, "Keep every k-th sample");
    cfg.bind(o_r0, "r0", [this](const Json& j) { r0_text = LoopOptions::vec3_text(j, "r0"); });
    cfg.bind(o_v0, "v0", [this](const Json& j) { v0_text = LoopOptions::vec3_text(j, "v0"); });
    cfg.bind(o_te, "t-end", [this](const Json& j) { t_end = j.get<double>(); });
    cfg.bind(o_ms, "max-steps", [this](const Json& j) { max_steps = j.get<std::size_t>(); });
    cfg.bind(o_mr, "max-rotation", [this](const Json& j) { max_rotation = j.get<double>(); });
    cfg.bind(o_md, "max-displacement", [this](const Json& j) { max_displacement = j.get<double>(); });
    cfg.bind(o_mn, "min-radius", [this](const Json& j) { min_radius = j.get<double>(); });
    cfg.bind(o_ev, "every", [this](const Json& j) { every = j.get<std::size_t>(); });
  }

  void run() {
    const monopole::PhysicalSetup physical = setup.make();
    const Vec3 r0 = parse_vec3(r0_text);
    const Vec3 v0 = parse_vec3(v0_text);
    if (every < 1) throw monopole::ValidationError("--every must be at least 1");
    monopole::IntegratorSpec spec = monopole::IntegratorSpec::defaults_for(r0.norm());
    spec.max_rotation_angle = max_rotation;
    spec.max_displacement_fraction = max_displacement;
    if (min_radius > 0.0) spec.min_radius = min_radius;
    const monopole::ParticleState initial{r0, v0, 0.0};
    const monopole::TrajectoryRecord record =
        monopole::integrate(initial, physical, spec, t_end, max_steps);

    Json meta;
    setup.describe(meta);
    meta["r0"] = r0_text;
    meta["v0"] = v0_text;
    meta["t_end"] = t_end;
    meta["max_steps"] = max_steps;
    meta["max_rotation"] = spec.max_rotation_angle;
    meta["max_displacement"] = spec.max_displacement_fraction;
    meta["min_radius"] = spec.min_radius;
    meta["every"] = every;

    const std::vector<std::string> columns = {
        "t", "x", "y", "z", "vx", "vy", "vz",
        "Jx", "Jy", "Jz", "cone_proj", "speed", "energy"};
    std::vector<std::vector<double>> rows;
    rows.reserve(record.samples.size() / every + 1);
    for (std::size_t i = 0; i < record.samples.size(); ++i) {
      if (i % every != 0 && i + 1 != record.samples.size()) continue;
      const monopole::TrajectorySample& s = record.samples[i];
      rows.push_back({s.state.time, s.state.position.x(), s.state.position.y(),
                      s.state.position.z(), s.state.velocity.x(),
                      s.state.velocity.y(), s.state.velocity.z(),
                      s.total_angular_momentum.x(), s.total_angular_momentum.y(),
                      s.total_angular_momentum.z(), s.cone_projection, s.speed,
                      s.energy});
    }
    const bool plunged =
        record.termination == monopole::Termination::kNearOrigin;
    emit(out, "simulate", meta, columns, rows,
         {std::string("termination: ") + (plunged ? "near-origin" : "reached-end")});
    exit_code = plunged ? 3 : 0;
  }
};

struct PhaseCommand {
  SetupOptions setup;
  LoopOptions loop;
  OutputTarget out;
  std::string string_text = "0,0,-1";
  double tolerance = 1e-6;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    setup.attach(cmd, cfg);
    loop.attach(cmd, cfg);
    out.attach(cmd, cfg);
    auto* o_s = cmd->add_option("--string", string_text, "String direction x,y,z");
    auto* o_t = cmd->add_option("--tolerance", tolerance,
                                "Cross-check tolerance for the loop phases");
    cfg.bind(o_s, "string", [this](const Json& j) {
      string_text = LoopOptions::vec3_text(j, "string");
    });
    cfg.bind(o_t, "tolerance", [this](const Json& j) { tolerance = j.get<double>(); });
  }

  void run() {
    const monopole::PhysicalSetup physical = setup.make();
    const monopole::StringConfig string =
        monopole::StringConfig::magnetic_along(parse_vec3(string_text));
    const monopole::ClosedPath path = loop.make();
    const monopole::PhaseReport report =
        monopole::duality_report(path, physical, string, tolerance);
    const monopole::WindingResult winding =
        monopole::winding_number(path, -string.direction());
    Json meta;
    setup.describe(meta);
    loop.describe(meta);
    meta["string"] = string_text;
    meta["tolerance"] = tolerance;
    emit(out, "phase", meta,
         {"n", "omega", "phi_type1", "phi_type2", "delta_mod_2pi", "winding"},
         {{static_cast<double>(physical.n()), report.omega, report.phi_type1,
           report.phi_type2, report.delta_mod_2pi,
           static_cast<double>(winding.winding)}});
  }
};

struct DualityCommand {
  SetupOptions setup;
  OutputTarget out;
  std::string string_text = "0,0,-1";
  int loops = 100;
  int loop_vertices = 8;
  std::uint64_t seed = 12345;
  double tolerance = 1e-6;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    setup.attach(cmd, cfg);
    out.attach(cmd, cfg);
    auto* o_s = cmd->add_option("--string", string_text, "String direction x,y,z");
    auto* o_l = cmd->add_option("--loops", loops, "Number of random loops");
    auto* o_v = cmd->add_option("--loop-vertices", loop_vertices,
                                "Vertices per random loop");
    auto* o_sd = cmd->add_option("--seed", seed, "Random generator seed");
    auto* o_t = cmd->add_option("--tolerance", tolerance, "Duality tolerance");
    cfg.bind(o_s, "string", [this](const Json& j) {
      string_text = LoopOptions::vec3_text(j, "string");
    });
    cfg.bind(o_l, "loops", [this](const Json& j) { loops = j.get<int>(); });
    cfg.bind(o_v, "loop-vertices", [this](const Json& j) { loop_vertices = j.get<int>(); });
    cfg.bind(o_sd, "seed", [this](const Json& j) { seed = j.get<std::uint64_t>(); });
    cfg.bind(o_t, "tolerance", [this](const Json& j) { tolerance = j.get<double>(); });
  }

  void run() {
    if (loops < 1) throw monopole::ValidationError("--loops must be at least 1");
    const monopole::PhysicalSetup physical = setup.make();
    const Vec3 direction = parse_vec3(string_text);
    const monopole::StringConfig string =
        monopole::StringConfig::magnetic_along(direction);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> rows;
    rows.reserve(loops);
    for (int i = 0; i < loops; ++i) {
      const monopole::ClosedPath path = monopole::random_shell_loop(
          rng, loop_vertices, 1.0, direction.normalized());
      const monopole::PhaseReport report =
          monopole::duality_report(path, physical, string, tolerance);
      const double offset = monopole::wrap_angle(
          report.phi_type2 - report.phi_type1 - physical.n() * monopole::kPi);
      rows.push_back({static_cast<double>(i), report.omega, report.phi_type1,
                      report.phi_type2, report.delta_mod_2pi, offset});
    }
    Json meta;
    setup.describe(meta);
    meta["string"] = string_text;
    meta["loops"] = loops;
    meta["loop_vertices"] = loop_vertices;
    meta["seed"] = seed;
    meta["tolerance"] = tolerance;
    emit(out, "duality", meta,
         {"loop", "omega", "phi_type1", "phi_type2", "delta_mod_2pi", "offset"},
         rows);
  }
};

struct GaugeCommand {
  SetupOptions setup;
  LoopOptions loop;
  OutputTarget out;
  std::string string_a_text = "0,0,1";
  std::string string_b_text = "0,0,-1";
  double tolerance = 1e-6;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    setup.attach(cmd, cfg);
    loop.attach(cmd, cfg);
    out.attach(cmd, cfg);
    auto* o_a = cmd->add_option("--string-a", string_a_text, "First string x,y,z");
    auto* o_b = cmd->add_option("--string-b", string_b_text, "Second string x,y,z");
    auto* o_t = cmd->add_option("--tolerance", tolerance, "Phase cross-check tolerance");
    cfg.bind(o_a, "string-a", [this](const Json& j) {
      string_a_text = LoopOptions::vec3_text(j, "string-a");
    });
    cfg.bind(o_b, "string-b", [this](const Json& j) {
      string_b_text = LoopOptions::vec3_text(j, "string-b");
    });
    cfg.bind(o_t, "tolerance", [this](const Json& j) { tolerance = j.get<double>(); });
  }

  void run() {
    const monopole::PhysicalSetup physical = setup.make();
    const monopole::StringConfig string_a =
        monopole::StringConfig::magnetic_along(parse_vec3(string_a_text));
    const monopole::StringConfig string_b =
        monopole::StringConfig::magnetic_along(parse_vec3(string_b_text));
    const monopole::ClosedPath path = loop.make();
    const double mismatch =
        monopole::gauge_mismatch(path, physical, string_a, string_b);
    const double quantum =
        monopole::kTwoPi * physical.n() * physical.hbar();
    const double phase_a =
        monopole::type2_phase(path, physical, string_a, tolerance).value;
    const double phase_b =
        monopole::type2_phase(path, physical, string_b, tolerance).value;
    Json meta;
    setup.describe(meta);
    loop.describe(meta);
    meta["string_a"] = string_a_text;
    meta["string_b"] = string_b_text;
    meta["tolerance"] = tolerance;
    emit(out, "gauge", meta,
         {"mismatch", "quantum", "turns", "phi_a", "phi_b", "shift_mod_2pi"},
         {{mismatch, quantum, quantum != 0.0 ? mismatch / quantum : 0.0, phase_a,
           phase_b, monopole::wrap_angle(phase_b - phase_a)}});
  }
};

struct ExchangeCommand {
  SetupOptions setup;
  OutputTarget out;
  std::string string_text = "0,0,-1";
  std::string path_file;
  double spin = 0.0;
  int segments = 400;
  double tilt = 0.0;
  double tolerance = 1e-6;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    setup.attach(cmd, cfg);
    out.attach(cmd, cfg);
    auto* o_s = cmd->add_option("--string", string_text, "String direction x,y,z");
    auto* o_p = cmd->add_option("--path", path_file,
                                "CSV with the open exchange path vertices");
    auto* o_sp = cmd->add_option("--spin", spin, "Intrinsic spin of each composite");
    auto* o_sg = cmd->add_option("--segments", segments,
                                 "Half-circle segments when no path file is given");
    auto* o_tl = cmd->add_option("--tilt", tilt,
                                 "Half-circle tilt out of the equator (radians)");
    auto* o_t = cmd->add_option("--tolerance", tolerance, "Phase grid tolerance");
    cfg.bind(o_s, "string", [this](const Json& j) {
      string_text = LoopOptions::vec3_text(j, "string");
    });
    cfg.bind(o_p, "path", [this](const Json& j) { path_file = j.get<std::string>(); });
    cfg.bind(o_sp, "spin", [this](const Json& j) { spin = j.get<double>(); });
    cfg.bind(o_sg, "segments", [this](const Json& j) { segments = j.get<int>(); });
    cfg.bind(o_tl, "tilt", [this](const Json& j) { tilt = j.get<double>(); });
    cfg.bind(o_t, "tolerance", [this](const Json& j) { tolerance = j.get<double>(); });
  }

  void run() {
    const monopole::PhysicalSetup physical = setup.make();
    const monopole::StringConfig string =
        monopole::StringConfig::magnetic_along(parse_vec3(string_text));
    std::vector<Vec3> path;
    if (!path_file.empty()) {
      std::ifstream in(path_file);
      if (!in) {
        throw monopole::ValidationError("cannot open path file: " + path_file);
      }
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string squashed;
        for (char ch : line) {
          if (!std::isspace(static_cast<unsigned char>(ch))) squashed += ch;
        }
        if (squashed.empty() || squashed == "x,y,z") continue;
        path.push_back(parse_vec3(squashed));
      }
    } else {
      if (segments < 2) {
        throw monopole::ValidationError("--segments must be at least 2");
      }
      path.reserve(segments + 1);
      for (int k = 0; k <= segments; ++k) {
        const double t = monopole::kPi * k / segments;
        path.emplace_back(std::cos(t), std::sin(t) * std::cos(tilt),
                          std::sin(t) * std::sin(tilt));
      }
    }
    const double alpha =
        monopole::exchange_phase(path, physical, string, tolerance);
    const monopole::CompositeSpec composite(spin, physical.n());
    Json meta;
    setup.describe(meta);
    meta["string"] = string_text;
    if (!path_file.empty()) {
      meta["path"] = path_file;
    } else {
      meta["segments"] = segments;
      meta["tilt"] = tilt;
    }
    meta["spin"] = spin;
    meta["tolerance"] = tolerance;
    emit(out, "exchange", meta,
         {"n", "spin", "alpha", "alpha_mod_2pi", "statistics"},
         {{static_cast<double>(physical.n()), spin, alpha,
           monopole::wrap_angle(alpha),
           static_cast<double>(monopole::exchange_statistics(composite))}});
  }
};

struct FoucaultCommand {
  OutputTarget out;
  double latitude_deg = 30.0;
  double ratio = 200.0;
  int revolutions = 1;
  int steps_per_period = 4000;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    out.attach(cmd, cfg);
    auto* o_l = cmd->add_option("--latitude-deg", latitude_deg, "Latitude in degrees");
    auto* o_r = cmd->add_option("--ratio", ratio,
                                "Pendulum-to-frame frequency ratio");
    auto* o_v = cmd->add_option("--revolutions", revolutions, "Frame revolutions");
    auto* o_s = cmd->add_option("--steps-per-period", steps_per_period,
                                "Integrator steps per fast period");
    cfg.bind(o_l, "latitude-deg", [this](const Json& j) { latitude_deg = j.get<double>(); });
    cfg.bind(o_r, "ratio", [this](const Json& j) { ratio = j.get<double>(); });
    cfg.bind(o_v, "revolutions", [this](const Json& j) { revolutions = j.get<int>(); });
    cfg.bind(o_s, "steps-per-period", [this](const Json& j) {
      steps_per_period = j.get<int>();
    });
  }

  void run() {
    const double latitude = latitude_deg * monopole::kPi / 180.0;
    monopole::RotatingFrameSpec spec;
    spec.latitude = latitude;
    spec.pendulum_frequency = ratio * spec.frame_rate;
    const monopole::PendulumRun run =
        monopole::simulate_pendulum(spec, revolutions, steps_per_period);
    const double per_rev = run.precession / revolutions;
    const double cap_shift =
        monopole::kTwoPi * (1.0 - std::sin(latitude)) - monopole::kTwoPi;
    const monopole::PhysicalSetup doubled = monopole::PhysicalSetup::quantized(2);
    const double phase = monopole::type1_phase(
        monopole::kTwoPi * (1.0 - std::sin(latitude)), doubled);
    Json meta;
    meta["latitude_deg"] = latitude_deg;
    meta["ratio"] = ratio;
    meta["revolutions"] = revolutions;
    meta["steps_per_period"] = steps_per_period;
    emit(out, "foucault", meta,
         {"precession_per_rev", "omega_minus_2pi", "residual", "phase_n2",
          "energy_drift", "adiabatic"},
         {{per_rev, cap_shift, std::abs(per_rev - cap_shift), phase,
           run.energy_drift, run.adiabatic ? 1.0 : 0.0}});
  }
};

struct VerifyCommand {
  double scale = 1.0;
  int exit_code = 0;

  void attach(CLI::App* cmd, ConfigBinding& cfg) {
    auto* o_s = cmd->add_option("--scale", scale,
                                "Multiply every acceptance tolerance");
    cfg.bind(o_s, "scale", [this](const Json& j) { scale = j.get<double>(); });
  }

  void run() {
    const auto results = monopole::run_acceptance(scale);
    std::size_t failures = 0;
    for (const auto& r : results) {
      std::printf("%s %2d %-24s %s\n", r.passed ? "PASS" : "FAIL", r.index,
                  r.name.c_str(), r.detail.c_str());
      if (!r.passed) ++failures;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failures,
                results.size());
    exit_code = failures == 0 ? 0 : 2;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for the two field-interaction descriptions "
               "of a charge-monopole pair"};
  app.require_subcommand(1);
  app.set_version_flag("--version", monopole::kVersion);

  SimulateCommand simulate;
  PhaseCommand phase;
  DualityCommand duality;
  GaugeCommand gauge;
  ExchangeCommand exchange;
  FoucaultCommand foucault;
  VerifyCommand verify;

  struct Registered {
    CLI::App* cmd;
    ConfigBinding cfg;
    std::string config_file;
    std::function<void()> run;
    std::function<int()> code;
  };
  std::vector<Registered> registered;
  registered.reserve(7);

  auto add_command = [&](const char* name, const char* help, auto& handler) {
    CLI::App* cmd = app.add_subcommand(name, help);
    registered.push_back({cmd, {}, "", {}, {}});
    Registered& slot = registered.back();
    handler.attach(cmd, slot.cfg);
    cmd->add_option("--config", slot.config_file,
                    "JSON file with defaults for this command");
    slot.run = [&handler]() { handler.run(); };
    if constexpr (requires { handler.exit_code; }) {
      slot.code = [&handler]() { return handler.exit_code; };
    } else {
      slot.code = []() { return 0; };
    }
  };

  add_command("simulate", "Integrate a trajectory and tabulate its invariants",
              simulate);
  add_command("phase", "Loop phases of both descriptions for one closed path",
              phase);
  add_command("duality", "Seeded random-loop sweep of the phase duality", duality);
  add_command("gauge", "Circulation mismatch between two string placements", gauge);
  add_command("exchange", "Exchange phase and statistics of two composites",
              exchange);
  add_command("foucault", "Rotating-frame pendulum precession and its loop-phase "
              "reading", foucault);
  add_command("verify", "Run the acceptance criteria and report pass/fail",
              verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    for (Registered& slot : registered) {
      if (!slot.cmd->parsed()) continue;
      if (!slot.config_file.empty()) slot.cfg.apply_file(slot.config_file);
      slot.run();
      return slot.code();
    }
    std::fprintf(stderr, "no subcommand selected\n");
    return 1;
  } catch (const monopole::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const monopole::ToleranceError& e) {
    std::fprintf(stderr, "tolerance: %s\n", e.what());
    return 2;
  } catch (const monopole::SingularityError& e) {
    std::fprintf(stderr, "singularity: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
