#include "wigprop/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wigprop {

namespace {

using nlohmann::json;

// Typed accessor over one JSON object; remembers which keys were read so
// leftovers can be reported as unknown.
class Section {
 public:
  Section(const json& node, std::string path)
      : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_, "must be an object");
  }

  std::string key(const std::string& name) const {
    return path_.empty() ? name : path_ + "." + name;
  }

  bool has(const std::string& name) const { return node_.contains(name); }

  const json* find(const std::string& name) {
    seen_.insert(name);
    auto it = node_.find(name);
    return it == node_.end() ? nullptr : &*it;
  }

  double number(const std::string& name, std::optional<double> fallback = {}) {
    const json* v = find(name);
    if (v == nullptr) {
      if (fallback) return *fallback;
      throw ConfigError(key(name), "is required");
    }
    if (!v->is_number()) throw ConfigError(key(name), "must be a number");
    const double d = v->get<double>();
    if (!std::isfinite(d)) throw ConfigError(key(name), "must be finite");
    return d;
  }

  double positive(const std::string& name,
                  std::optional<double> fallback = {}) {
    const double d = number(name, fallback);
    if (!(d > 0.0)) throw ConfigError(key(name), "must be positive");
    return d;
  }

  long long integer(const std::string& name,
                    std::optional<long long> fallback = {}) {
    const json* v = find(name);
    if (v == nullptr) {
      if (fallback) return *fallback;
      throw ConfigError(key(name), "is required");
    }
    if (!v->is_number_integer()) {
      throw ConfigError(key(name), "must be an integer");
    }
    return v->get<long long>();
  }

  bool boolean(const std::string& name, bool fallback) {
    const json* v = find(name);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) throw ConfigError(key(name), "must be true or false");
    return v->get<bool>();
  }

  std::string string(const std::string& name,
                     std::optional<std::string> fallback = {}) {
    const json* v = find(name);
    if (v == nullptr) {
      if (fallback) return *fallback;
      throw ConfigError(key(name), "is required");
    }
    if (!v->is_string()) throw ConfigError(key(name), "must be a string");
    return v->get<std::string>();
  }

  Section child(const std::string& name) {
    const json* v = find(name);
    if (v == nullptr) throw ConfigError(key(name), "block is required");
    return Section(*v, key(name));
  }

  void reject_unknown() const {
    for (const auto& [k, v] : node_.items()) {
      if (!seen_.contains(k)) throw ConfigError(key(k), "unknown key");
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

GridConfig parse_grid(Section s) {
  GridConfig g;
  for (const char* name : {"nx", "np"}) {
    const long long n = s.integer(name);
    if (n < 2 || n % 2 != 0) {
      throw ConfigError(s.key(name), "must be an even integer >= 2, got " +
                                         std::to_string(n));
    }
    (std::string(name) == "nx" ? g.nx : g.np) = static_cast<std::size_t>(n);
  }
  g.lx = s.positive("lx");
  g.lp = s.positive("lp");
  g.hbar = s.positive("hbar", 1.0);
  s.reject_unknown();
  return g;
}

PotentialSpec parse_potential(Section s) {
  const std::string kind_name = s.string("kind");
  const auto kind = parse_potential_kind(kind_name);
  if (!kind) {
    throw ConfigError(s.key("kind"), "unknown potential kind '" + kind_name +
                                         "'");
  }
  PotentialSpec spec = PotentialSpec::free();
  switch (*kind) {
    case PotentialKind::Free:
      break;
    case PotentialKind::Harmonic:
      spec = PotentialSpec::harmonic(s.positive("m", 1.0),
                                     s.positive("omega", 1.0));
      break;
    case PotentialKind::Quartic:
      spec = PotentialSpec::quartic(s.number("c", 0.1));
      break;
    case PotentialKind::Morse:
      spec = PotentialSpec::morse(s.positive("D", 20.0), s.positive("a", 0.16),
                                  s.number("x0", 0.0));
      break;
    case PotentialKind::MorseLinear:
      spec = PotentialSpec::morse_linear(s.positive("D", 20.0),
                                                s.positive("a", 0.16));
      break;
    case PotentialKind::GaussianBarrier:
      spec = PotentialSpec::gaussian_barrier(s.number("V0", 3.0),
                                             s.positive("sigma", 1.0),
                                             s.number("x0", 0.0));
      break;
  }
  if (s.has("drive")) {
    Section d = s.child("drive");
    Drive drive;
    drive.amplitude = d.number("E0");
    drive.frequency = d.number("omega");
    drive.phase = d.number("phase", 0.0);
    d.reject_unknown();
    spec = spec.with_drive(drive);
  }
  s.reject_unknown();
  return spec;
}

int parse_level(Section& s) {
  const long long n = s.integer("n");
  if (n < 0 || n > kMaxOscillatorLevel) {
    throw ConfigError(s.key("n"), "must be in [0, 30]");
  }
  return static_cast<int>(n);
}

StateSpec parse_state(Section s) {
  StateSpec st;
  const std::string kind = s.string("kind");
  if (kind == "gaussian") {
    st.kind = StateKind::Gaussian;
    st.x0 = s.number("x0", 0.0);
    st.p0 = s.number("p0", 0.0);
    st.sigma_x = s.positive("sigma_x");
    st.sigma_p = s.positive("sigma_p");
  } else if (kind == "ho_eigenstate") {
    st.kind = StateKind::HoEigenstate;
    st.n = parse_level(s);
    st.mass = s.positive("m", 1.0);
    st.omega = s.positive("omega", 1.0);
  } else if (kind == "from_wavefunction") {
    st.kind = StateKind::FromWavefunction;
    const std::string packet = s.string("packet");
    if (packet == "gaussian") {
      st.packet = PacketKind::Gaussian;
      st.x0 = s.number("x0", 0.0);
      st.p0 = s.number("p0", 0.0);
      st.sigma_x = s.positive("sigma_x");
    } else if (packet == "hermite") {
      st.packet = PacketKind::Hermite;
      st.n = parse_level(s);
      st.mass = s.positive("m", 1.0);
      st.omega = s.positive("omega", 1.0);
    } else {
      throw ConfigError(s.key("packet"), "must be 'gaussian' or 'hermite'");
    }
  } else {
    throw ConfigError(s.key("kind"), "unknown state kind '" + kind + "'");
  }
  st.normalize = s.boolean("normalize", true);
  s.reject_unknown();
  return st;
}

PropagationConfig parse_propagation(Section s) {
  PropagationConfig p;
  p.settings.dt = s.positive("dt");
  const long long steps = s.integer("n_steps");
  if (steps < 1) throw ConfigError(s.key("n_steps"), "must be >= 1");
  p.n_steps = static_cast<std::size_t>(steps);
  const long long order = s.integer("order", 1);
  if (order != 1 && order != 2) {
    throw ConfigError(s.key("order"), "must be 1 or 2");
  }
  p.settings.order = static_cast<int>(order);
  const long long every = s.integer("snapshot_every", 0);
  if (every < 0) throw ConfigError(s.key("snapshot_every"), "must be >= 0");
  p.snapshot_every = static_cast<std::size_t>(every);
  p.settings.mass = s.positive("mass", 1.0);
  p.settings.merge_half_steps = s.boolean("merge_half_steps", false);
  p.settings.flip_kinetic_sign = s.boolean("flip_kinetic_sign", false);
  s.reject_unknown();
  return p;
}

OutputConfig parse_output(Section s, const GridConfig& grid) {
  OutputConfig o;
  o.directory = s.string("directory", o.directory);
  const std::string format = s.string("format", "raw64");
  if (format == "csv") {
    o.format = OutputFormat::Csv;
    if (grid.nx * grid.np > kMaxCsvCells) {
      throw ConfigError(s.key("format"),
                        "csv is limited to 256x256 cells; use raw64");
    }
  } else if (format == "raw64") {
    o.format = OutputFormat::Raw64;
  } else {
    throw ConfigError(s.key("format"), "must be 'csv' or 'raw64'");
  }
  o.emit_marginals = s.boolean("emit_marginals", false);
  s.reject_unknown();
  return o;
}

ValidationThresholds parse_validation(Section s) {
  ValidationThresholds v;
  v.max_linf_rel = s.positive("max_linf_rel", v.max_linf_rel);
  v.max_l2_rel = s.positive("max_l2_rel", v.max_l2_rel);
  s.reject_unknown();
  return v;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  Section root(doc, "");
  RunConfig cfg;
  cfg.grid = parse_grid(root.child("grid"));
  cfg.potential = parse_potential(root.child("potential"));
  cfg.state = parse_state(root.child("state"));
  cfg.propagation = parse_propagation(root.child("propagation"));
  if (root.has("output")) {
    cfg.output = parse_output(root.child("output"), cfg.grid);
  }
  if (root.has("validation")) {
    cfg.validation = parse_validation(root.child("validation"));
  }
  root.reject_unknown();
  cfg.echo = doc.dump();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace wigprop
