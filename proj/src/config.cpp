/*
 * Copyright 2026 The dolphin-los Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dolphin/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "dolphin/angles.hpp"
#include "dolphin/csv.hpp"
#include "dolphin/errors.hpp"

namespace dolphin {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::string where(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  if (mark.is_null()) return {};
  return " (line " + std::to_string(mark.line + 1) + ")";
}

// A mapping node whose keys must all be consumed. finish() rejects the rest.
class Section {
 public:
  Section(const YAML::Node& node, std::string path) : node_(node), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw ConfigError(display() + ": expected a mapping" + where(node_));
    }
  }

  std::string child_path(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  YAML::Node take(std::string_view key) {
    seen_.insert(std::string(key));
    if (!node_ || !node_.IsMap()) return YAML::Node(YAML::NodeType::Undefined);
    const YAML::Node& map = node_;
    return map[std::string(key)];
  }

  bool has(std::string_view key) const {
    return node_ && node_.IsMap() && node_[std::string(key)];
  }

  void finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const std::string key = kv.first.as<std::string>();
      if (!seen_.count(key)) {
        throw ConfigError("unknown key '" + child_path(key) + "'" + where(kv.first));
      }
    }
  }

 private:
  std::string display() const { return path_.empty() ? "<root>" : path_; }

  YAML::Node node_;
  std::string path_;
  std::set<std::string> seen_;
};

double to_double(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) throw ConfigError(path + ": expected a number" + where(node));
  const std::string text = trim(node.Scalar());
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError(path + ": expected a number, got '" + text + "'" + where(node));
  }
  return value;
}

double to_angle(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) throw ConfigError(path + ": expected an angle" + where(node));
  try {
    return parse_angle_text(node.Scalar());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what() + where(node));
  }
}

long to_integer(const YAML::Node& node, const std::string& path) {
  const double value = to_double(node, path);
  if (value != std::floor(value) || std::abs(value) > 9.0e15) {
    throw ConfigError(path + ": expected an integer" + where(node));
  }
  return static_cast<long>(value);
}

std::string to_text(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) throw ConfigError(path + ": expected a string" + where(node));
  return node.Scalar();
}

template <typename Convert>
auto to_list(const YAML::Node& node, const std::string& path, Convert convert) {
  if (!node.IsSequence()) throw ConfigError(path + ": expected a list" + where(node));
  std::vector<decltype(convert(node, path))> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(convert(node[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void read_number(Section& s, std::string_view key, double& out) {
  if (YAML::Node n = s.take(key)) out = to_double(n, s.child_path(key));
}

void read_angle(Section& s, std::string_view key, double& out) {
  if (YAML::Node n = s.take(key)) out = to_angle(n, s.child_path(key));
}

// Scalar applied to every joint, or a list with one entry per joint.
void read_joint_vector(Section& s, std::string_view key, JointVectord& out) {
  YAML::Node n = s.take(key);
  if (!n) return;
  const std::string path = s.child_path(key);
  if (n.IsScalar()) {
    out.setConstant(to_double(n, path));
    return;
  }
  const std::vector<double> values = to_list(n, path, to_double);
  if (values.size() != kNumJoints) {
    throw ConfigError(path + ": expected 7 entries" + where(n));
  }
  for (std::size_t i = 0; i < kNumJoints; ++i) out[static_cast<Eigen::Index>(i)] = values[i];
}

// Fluke-joint triple (joints 5, 6, 7): one value for all or a list of three.
void read_triple(Section& s, std::string_view key, std::array<double, 3>& out, bool angle) {
  YAML::Node n = s.take(key);
  if (!n) return;
  const std::string path = s.child_path(key);
  auto convert = angle ? to_angle : to_double;
  if (n.IsScalar()) {
    out.fill(convert(n, path));
    return;
  }
  const std::vector<double> values = to_list(n, path, convert);
  if (values.size() != 3) throw ConfigError(path + ": expected 3 entries" + where(n));
  std::copy(values.begin(), values.end(), out.begin());
}

Vector2<double> read_pair(const YAML::Node& n, const std::string& path) {
  const std::vector<double> values = to_list(n, path, to_double);
  if (values.size() != 2) throw ConfigError(path + ": expected [x, y]" + where(n));
  return {values[0], values[1]};
}

JointAxis parse_axis(const YAML::Node& n, const std::string& path) {
  const std::string text = to_text(n, path);
  if (text == "yaw") return JointAxis::kYaw;
  if (text == "pitch") return JointAxis::kPitch;
  throw ConfigError(path + ": expected 'yaw' or 'pitch', got '" + text + "'" + where(n));
}

void read_sim(Section& root, SweepSpec& spec) {
  SimConfig& c = spec.base;
  Section sim(root.take("sim"), "sim");
  read_number(sim, "dt", c.dt);
  read_number(sim, "t_max", c.t_max);
  if (YAML::Node n = sim.take("log_decimation")) {
    c.log_decimation = static_cast<int>(to_integer(n, "sim.log_decimation"));
  }
  if (YAML::Node n = sim.take("seed")) {
    const long seed = to_integer(n, "sim.seed");
    if (seed < 0) throw ConfigError("sim.seed must be >= 0" + where(n));
    c.rng_seed = static_cast<std::uint64_t>(seed);
  }
  Section initial(sim.take("initial"), "sim.initial");
  read_number(initial, "x", c.initial.pose.x());
  read_number(initial, "y", c.initial.pose.y());
  read_angle(initial, "psi", c.initial.pose.z());
  read_number(initial, "u", c.initial.velocity.x());
  read_number(initial, "v", c.initial.velocity.y());
  read_number(initial, "r", c.initial.velocity.z());
  initial.finish();
  sim.finish();
}

}  // namespace

double parse_angle_text(std::string_view text) {
  std::string body = trim(text);
  bool degrees = false;
  auto strip_suffix = [&body](std::string_view suffix) {
    if (body.size() > suffix.size() && body.compare(body.size() - suffix.size(), suffix.size(),
                                                    suffix) == 0) {
      body = trim(std::string_view(body).substr(0, body.size() - suffix.size()));
      return true;
    }
    return false;
  };
  if (strip_suffix("deg")) {
    degrees = true;
  } else {
    strip_suffix("rad");
  }
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || end != body.data() + body.size()) {
    throw ConfigError("expected an angle such as 0.5, 30deg or 0.5rad, got '" +
                      std::string(text) + "'");
  }
  return degrees ? deg_to_rad(value) : value;
}

SweepSpec parse_config(std::string_view text, std::string_view source) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(std::string(source) + ": parse error at line " +
                      std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  SweepSpec spec;
  SimConfig& c = spec.base;
  try {
    Section root(doc, "");

    read_sim(root, spec);

    Section metrics(root.take("metrics"), "metrics");
    read_number(metrics, "warmup", c.metrics_warmup);
    metrics.finish();

    Section disturbance(root.take("disturbance"), "disturbance");
    if (YAML::Node n = disturbance.take("current")) c.current = read_pair(n, "disturbance.current");
    disturbance.finish();

    Section vehicle(root.take("vehicle"), "vehicle");
    read_number(vehicle, "mass", c.hydro.mass);
    read_number(vehicle, "inertia_zz", c.hydro.inertia_zz);
    read_number(vehicle, "xu_dot", c.hydro.xu_dot);
    read_number(vehicle, "yv_dot", c.hydro.yv_dot);
    read_number(vehicle, "nr_dot", c.hydro.nr_dot);
    read_number(vehicle, "xu", c.hydro.xu);
    read_number(vehicle, "yv", c.hydro.yv);
    read_number(vehicle, "nr", c.hydro.nr);
    read_number(vehicle, "water_density", c.hydro.water_density);
    if (YAML::Node links = vehicle.take("links")) {
      if (!links.IsSequence() || links.size() != kNumJoints) {
        throw ConfigError("vehicle.links: expected a list of 7 links" + where(links));
      }
      for (std::size_t i = 0; i < kNumJoints; ++i) {
        Section link(links[i], "vehicle.links[" + std::to_string(i) + "]");
        Link& l = c.body.links[i];
        read_number(link, "length", l.length);
        read_number(link, "area", l.area);
        read_number(link, "drag_coefficient", l.drag_coefficient);
        if (YAML::Node n = link.take("axis")) l.axis = parse_axis(n, link.child_path("axis"));
        link.finish();
      }
    }
    vehicle.finish();

    Section guidance(root.take("guidance"), "guidance");
    if (YAML::Node n = guidance.take("mode")) {
      try {
        c.guidance.mode = parse_guidance_mode(to_text(n, "guidance.mode"));
      } catch (const ConfigError& e) {
        throw ConfigError(std::string(e.what()) + where(n));
      }
    }
    const bool has_delta = guidance.has("delta");
    const bool has_multiple = guidance.has("delta_multiple");
    if (has_delta && has_multiple) {
      throw ConfigError("guidance: give either delta or delta_multiple, not both");
    }
    read_number(guidance, "delta", c.guidance.delta);
    if (YAML::Node n = guidance.take("delta_multiple")) {
      c.guidance.delta = to_double(n, "guidance.delta_multiple") * c.body.total_length();
    }
    read_number(guidance, "gamma", c.guidance.gamma);
    read_number(guidance, "switch_radius", c.guidance.switch_radius);
    guidance.finish();

    Section cpg(root.take("cpg"), "cpg");
    read_joint_vector(cpg, "frequency", c.cpg.frequency);
    read_joint_vector(cpg, "gain_a", c.cpg.gain_a);
    read_joint_vector(cpg, "gain_b", c.cpg.gain_b);
    if (YAML::Node n = cpg.take("coupling")) {
      if (n.IsMap()) {
        Section chain(n, "cpg.coupling");
        double weight = kDefaultCouplingWeight;
        double lag = kDefaultTailLag;
        read_number(chain, "weight", weight);
        read_angle(chain, "tail_lag", lag);
        chain.finish();
        c.cpg.coupling = CpgParams::chain(0.0, 0.0, weight, lag).coupling;
      } else if (n.IsSequence()) {
        c.cpg.coupling.clear();
        for (std::size_t i = 0; i < n.size(); ++i) {
          const std::string path = "cpg.coupling[" + std::to_string(i) + "]";
          Section edge(n[i], path);
          CouplingEdge e;
          auto joint = [&](std::string_view key) -> std::size_t {
            YAML::Node j = edge.take(key);
            if (!j) throw ConfigError(edge.child_path(key) + " is required" + where(n[i]));
            const long v = to_integer(j, edge.child_path(key));
            if (v < 1 || v > static_cast<long>(kNumJoints)) {
              throw ConfigError(edge.child_path(key) + ": joint must be in 1..7" + where(j));
            }
            return static_cast<std::size_t>(v - 1);
          };
          e.from = joint("from");
          e.to = joint("to");
          read_number(edge, "weight", e.weight);
          read_angle(edge, "phase_bias", e.phase_bias);
          edge.finish();
          c.cpg.coupling.push_back(e);
        }
      } else {
        throw ConfigError("cpg.coupling: expected a chain mapping or a list of edges" + where(n));
      }
    }
    cpg.finish();

    Section mapping(root.take("mapping"), "mapping");
    read_number(mapping, "k", c.mapping.k);
    read_triple(mapping, "gaussian_width", c.mapping.gaussian_width, true);
    read_triple(mapping, "gaussian_center", c.mapping.gaussian_center, true);
    read_triple(mapping, "max_amplitude", c.mapping.max_amplitude, true);
    read_triple(mapping, "max_yaw_offset", c.mapping.max_yaw_offset, true);
    if (YAML::Node n = mapping.take("amplitude_mode")) {
      try {
        c.mapping.amplitude_mode = parse_amplitude_mode(to_text(n, "mapping.amplitude_mode"));
      } catch (const ConfigError& e) {
        throw ConfigError(std::string(e.what()) + where(n));
      }
    }
    mapping.finish();

    Section path(root.take("path"), "path");
    read_number(path, "amplitude", c.path.amplitude);
    read_number(path, "periods", c.path.periods);
    read_number(path, "length", c.path.length);
    read_angle(path, "heading", c.path.heading);
    if (YAML::Node n = path.take("points")) {
      c.path.points = static_cast<int>(to_integer(n, "path.points"));
    }
    if (YAML::Node n = path.take("origin")) {
      c.path.origin = read_pair(n, "path.origin");
    } else {
      c.path.origin = c.initial.position();
    }
    path.finish();

    Section sweep(root.take("sweep"), "sweep");
    if (YAML::Node n = sweep.take("delta_multiples")) {
      spec.delta_multiples = to_list(n, "sweep.delta_multiples", to_double);
    }
    if (YAML::Node n = sweep.take("guidance_modes")) {
      spec.guidance_modes.clear();
      for (const std::string& m : to_list(n, "sweep.guidance_modes", to_text)) {
        spec.guidance_modes.push_back(parse_guidance_mode(m));
      }
    }
    if (YAML::Node n = sweep.take("amplitude_modes")) {
      spec.amplitude_modes.clear();
      for (const std::string& m : to_list(n, "sweep.amplitude_modes", to_text)) {
        spec.amplitude_modes.push_back(parse_amplitude_mode(m));
      }
    }
    sweep.finish();

    root.finish();
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }

  try {
    spec.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }
  return spec;
}

SweepSpec load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const IoError& e) {
    throw ConfigError(std::string("cannot read config: ") + e.what());
  }
  return parse_config(text, path.string());
}

namespace {

// Shortest text that parses back to the same double.
std::string exact(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

void emit_vector(YAML::Emitter& out, const JointVectord& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (Eigen::Index i = 0; i < v.size(); ++i) out << exact(v[i]);
  out << YAML::EndSeq;
}

void emit_triple(YAML::Emitter& out, const std::array<double, 3>& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double x : v) out << exact(x);
  out << YAML::EndSeq;
}

void emit_pair(YAML::Emitter& out, const Vector2<double>& v) {
  out << YAML::Flow << YAML::BeginSeq << exact(v.x()) << exact(v.y()) << YAML::EndSeq;
}

}  // namespace

std::string serialize_config(const SweepSpec& spec) {
  const SimConfig& c = spec.base;
  YAML::Emitter out;
  out << YAML::BeginMap;

  out << YAML::Key << "sim" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "dt" << YAML::Value << exact(c.dt);
  out << YAML::Key << "t_max" << YAML::Value << exact(c.t_max);
  out << YAML::Key << "log_decimation" << YAML::Value << c.log_decimation;
  out << YAML::Key << "seed" << YAML::Value << c.rng_seed;
  out << YAML::Key << "initial" << YAML::Value << YAML::BeginMap;
  const char* pose_keys[3] = {"x", "y", "psi"};
  const char* velocity_keys[3] = {"u", "v", "r"};
  for (int i = 0; i < 3; ++i) out << YAML::Key << pose_keys[i] << YAML::Value << exact(c.initial.pose[i]);
  for (int i = 0; i < 3; ++i) {
    out << YAML::Key << velocity_keys[i] << YAML::Value << exact(c.initial.velocity[i]);
  }
  out << YAML::EndMap << YAML::EndMap;

  out << YAML::Key << "metrics" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "warmup" << YAML::Value << exact(c.metrics_warmup) << YAML::EndMap;

  out << YAML::Key << "disturbance" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "current" << YAML::Value;
  emit_pair(out, c.current);
  out << YAML::EndMap;

  const HydroParams& h = c.hydro;
  out << YAML::Key << "vehicle" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "mass" << YAML::Value << exact(h.mass);
  out << YAML::Key << "inertia_zz" << YAML::Value << exact(h.inertia_zz);
  out << YAML::Key << "xu_dot" << YAML::Value << exact(h.xu_dot);
  out << YAML::Key << "yv_dot" << YAML::Value << exact(h.yv_dot);
  out << YAML::Key << "nr_dot" << YAML::Value << exact(h.nr_dot);
  out << YAML::Key << "xu" << YAML::Value << exact(h.xu);
  out << YAML::Key << "yv" << YAML::Value << exact(h.yv);
  out << YAML::Key << "nr" << YAML::Value << exact(h.nr);
  out << YAML::Key << "water_density" << YAML::Value << exact(h.water_density);
  out << YAML::Key << "links" << YAML::Value << YAML::BeginSeq;
  for (const Link& l : c.body.links) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "length" << YAML::Value << exact(l.length);
    out << YAML::Key << "area" << YAML::Value << exact(l.area);
    out << YAML::Key << "drag_coefficient" << YAML::Value << exact(l.drag_coefficient);
    out << YAML::Key << "axis" << YAML::Value << (l.axis == JointAxis::kYaw ? "yaw" : "pitch");
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::Key << "guidance" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "mode" << YAML::Value << std::string(to_string(c.guidance.mode));
  out << YAML::Key << "delta" << YAML::Value << exact(c.guidance.delta);
  out << YAML::Key << "gamma" << YAML::Value << exact(c.guidance.gamma);
  out << YAML::Key << "switch_radius" << YAML::Value << exact(c.guidance.switch_radius);
  out << YAML::EndMap;

  out << YAML::Key << "cpg" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "frequency" << YAML::Value;
  emit_vector(out, c.cpg.frequency);
  out << YAML::Key << "gain_a" << YAML::Value;
  emit_vector(out, c.cpg.gain_a);
  out << YAML::Key << "gain_b" << YAML::Value;
  emit_vector(out, c.cpg.gain_b);
  out << YAML::Key << "coupling" << YAML::Value << YAML::BeginSeq;
  for (const CouplingEdge& e : c.cpg.coupling) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "from" << YAML::Value << e.from + 1;
    out << YAML::Key << "to" << YAML::Value << e.to + 1;
    out << YAML::Key << "weight" << YAML::Value << exact(e.weight);
    out << YAML::Key << "phase_bias" << YAML::Value << exact(e.phase_bias);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;

  const MappingParams& m = c.mapping;
  out << YAML::Key << "mapping" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "k" << YAML::Value << exact(m.k);
  out << YAML::Key << "gaussian_width" << YAML::Value;
  emit_triple(out, m.gaussian_width);
  out << YAML::Key << "gaussian_center" << YAML::Value;
  emit_triple(out, m.gaussian_center);
  out << YAML::Key << "max_amplitude" << YAML::Value;
  emit_triple(out, m.max_amplitude);
  out << YAML::Key << "max_yaw_offset" << YAML::Value;
  emit_triple(out, m.max_yaw_offset);
  out << YAML::Key << "amplitude_mode" << YAML::Value << std::string(to_string(m.amplitude_mode));
  out << YAML::EndMap;

  out << YAML::Key << "path" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "amplitude" << YAML::Value << exact(c.path.amplitude);
  out << YAML::Key << "periods" << YAML::Value << exact(c.path.periods);
  out << YAML::Key << "length" << YAML::Value << exact(c.path.length);
  out << YAML::Key << "heading" << YAML::Value << exact(c.path.heading);
  out << YAML::Key << "points" << YAML::Value << c.path.points;
  out << YAML::Key << "origin" << YAML::Value;
  emit_pair(out, c.path.origin);
  out << YAML::EndMap;

  out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "delta_multiples" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (double d : spec.delta_multiples) out << exact(d);
  out << YAML::EndSeq;
  out << YAML::Key << "guidance_modes" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (GuidanceMode g : spec.guidance_modes) out << std::string(to_string(g));
  out << YAML::EndSeq;
  out << YAML::Key << "amplitude_modes" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (AmplitudeMode a : spec.amplitude_modes) out << std::string(to_string(a));
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace dolphin
