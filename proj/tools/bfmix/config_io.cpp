#include "config_io.hpp"

#include <fstream>
#include <sstream>

#include "bfmix/errors.hpp"

namespace bfmix::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(where.empty() ? "<root>" : where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
  }
}

std::string path_of(const std::string& where, std::string_view key) {
  return where.empty() ? std::string(key) : where + "." + std::string(key);
}

std::optional<double> number(const json& obj, const std::string& where, std::string_view key) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_number()) throw ConfigError(path_of(where, key), "expected a number");
  return it->get<double>();
}

std::optional<std::string> text(const json& obj, const std::string& where, std::string_view key) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_string()) throw ConfigError(path_of(where, key), "expected a string");
  return it->get<std::string>();
}

std::optional<std::array<double, 2>> pair(const json& obj, const std::string& where, std::string_view key) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
    throw ConfigError(path_of(where, key), "expected [lo, hi]");
  }
  return std::array<double, 2>{(*it)[0].get<double>(), (*it)[1].get<double>()};
}

void read_species(const json& root, const char* name, std::optional<double>& mass, std::optional<double>& omega,
                  std::optional<double>& count) {
  auto it = root.find(name);
  if (it == root.end()) return;
  reject_unknown(*it, name, {"mass", "omega", "N"});
  mass = number(*it, name, "mass");
  omega = number(*it, name, "omega");
  count = number(*it, name, "N");
}

scan::Axis read_axis(const json& j, const std::string& where) {
  reject_unknown(j, where, {"field", "from", "to", "points", "scale", "values"});
  scan::Axis a;
  auto field = text(j, where, "field");
  if (!field) throw ConfigError(where + ".field", "missing required field");
  a.field = *field;
  if (auto it = j.find("values"); it != j.end()) {
    if (!it->is_array() || it->empty()) throw ConfigError(where + ".values", "expected a non-empty array of numbers");
    for (const auto& v : *it) {
      if (!v.is_number()) throw ConfigError(where + ".values", "expected a non-empty array of numbers");
      a.values.push_back(v.get<double>());
    }
    if (j.contains("from") || j.contains("to") || j.contains("points")) {
      throw ConfigError(where, "give either values or from/to/points");
    }
    return a;
  }
  auto from = number(j, where, "from");
  auto to = number(j, where, "to");
  if (!from) throw ConfigError(where + ".from", "missing required field");
  if (!to) throw ConfigError(where + ".to", "missing required field");
  a.from = *from;
  a.to = *to;
  auto points = j.find("points");
  if (points == j.end()) {
    a.points = 200;
  } else if (points->is_number_integer()) {
    a.points = points->get<int>();
  } else {
    throw ConfigError(where + ".points", "expected an integer");
  }
  const auto scale = text(j, where, "scale").value_or("linear");
  if (scale == "linear") {
    a.scale = scan::Scale::Linear;
  } else if (scale == "log") {
    a.scale = scan::Scale::Log;
  } else {
    throw ConfigError(where + ".scale", "expected \"linear\" or \"log\"");
  }
  return a;
}

}  // namespace

LoadedConfig parse_config(const std::string& source) {
  json root;
  try {
    root = json::parse(source);
  } catch (const json::parse_error& e) {
    // The message carries "at line L, column C".
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  reject_unknown(root, "",
                 {"unit_system", "compat_mode", "rel_tol", "boson", "fermion", "interaction", "thermal", "scan"});

  LoadedConfig out;
  ConfigInput& in = out.input;
  if (auto units = text(root, "", "unit_system")) {
    if (*units == "oscillator") {
      in.unit_system = UnitSystem::Oscillator;
    } else if (*units == "si") {
      in.unit_system = UnitSystem::SI;
    } else {
      throw ConfigError("unit_system", "expected \"oscillator\" or \"si\"");
    }
  }
  if (auto mode = text(root, "", "compat_mode")) {
    if (*mode == "paper") {
      in.compat_mode = CompatMode::Paper;
    } else if (*mode == "derived") {
      in.compat_mode = CompatMode::Derived;
    } else {
      throw ConfigError("compat_mode", "expected \"paper\" or \"derived\"");
    }
  }
  if (auto tol = number(root, "", "rel_tol")) in.rel_tol = *tol;

  read_species(root, "boson", in.m_b, in.omega_b, in.N_b);
  read_species(root, "fermion", in.m_f, in.omega_f, in.N_f);

  if (auto it = root.find("interaction"); it != root.end()) {
    const std::string w = "interaction";
    reject_unknown(*it, w, {"g_bb", "g_bf", "g_ff", "a_bb", "a_bf", "a_ff"});
    auto& x = in.interaction;
    x.g_bb = number(*it, w, "g_bb");
    x.g_bf = number(*it, w, "g_bf");
    x.g_ff = number(*it, w, "g_ff");
    x.a_bb = number(*it, w, "a_bb");
    x.a_bf = number(*it, w, "a_bf");
    x.a_ff = number(*it, w, "a_ff");
  }

  if (auto it = root.find("thermal"); it != root.end()) {
    const std::string w = "thermal";
    reject_unknown(*it, w, {"volume", "temperature", "T_over_TF", "radius", "T_range", "T_over_TF_range"});
    in.volume = number(*it, w, "volume");
    in.temperature = number(*it, w, "temperature");
    in.T_over_TF = number(*it, w, "T_over_TF");
    in.radius = number(*it, w, "radius");
    in.T_range = pair(*it, w, "T_range");
    in.T_over_TF_range = pair(*it, w, "T_over_TF_range");
  }

  if (auto it = root.find("scan"); it != root.end()) {
    const std::string w = "scan";
    reject_unknown(*it, w, {"observable", "axes"});
    ScanSection s;
    auto obs = text(*it, w, "observable");
    if (!obs) throw ConfigError("scan.observable", "missing required field");
    s.observable = scan::parse_observable(*obs);
    auto axes = it->find("axes");
    if (axes == it->end() || !axes->is_array()) throw ConfigError("scan.axes", "expected an array of axes");
    for (std::size_t i = 0; i < axes->size(); ++i) {
      s.axes.push_back(read_axis((*axes)[i], "scan.axes[" + std::to_string(i) + "]"));
    }
    out.scan = std::move(s);
  }
  return out;
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  if (file.bad()) throw IoError("cannot read config file '" + path.string() + "'");
  return parse_config(buf.str());
}

namespace {

void put(nlohmann::ordered_json& obj, const char* key, const std::optional<double>& v) {
  if (v) obj[key] = *v;
}

}  // namespace

nlohmann::ordered_json to_json(const ConfigInput& in) {
  nlohmann::ordered_json j;
  j["unit_system"] = std::string(to_string(in.unit_system));
  j["compat_mode"] = std::string(to_string(in.compat_mode));
  j["rel_tol"] = in.rel_tol;
  nlohmann::ordered_json boson = nlohmann::ordered_json::object();
  put(boson, "mass", in.m_b);
  put(boson, "omega", in.omega_b);
  put(boson, "N", in.N_b);
  j["boson"] = boson;
  nlohmann::ordered_json fermion = nlohmann::ordered_json::object();
  put(fermion, "mass", in.m_f);
  put(fermion, "omega", in.omega_f);
  put(fermion, "N", in.N_f);
  j["fermion"] = fermion;
  nlohmann::ordered_json inter = nlohmann::ordered_json::object();
  put(inter, "g_bb", in.interaction.g_bb);
  put(inter, "g_bf", in.interaction.g_bf);
  put(inter, "g_ff", in.interaction.g_ff);
  put(inter, "a_bb", in.interaction.a_bb);
  put(inter, "a_bf", in.interaction.a_bf);
  put(inter, "a_ff", in.interaction.a_ff);
  j["interaction"] = inter;
  nlohmann::ordered_json thermal = nlohmann::ordered_json::object();
  put(thermal, "volume", in.volume);
  put(thermal, "temperature", in.temperature);
  put(thermal, "T_over_TF", in.T_over_TF);
  put(thermal, "radius", in.radius);
  if (in.T_range) thermal["T_range"] = *in.T_range;
  if (in.T_over_TF_range) thermal["T_over_TF_range"] = *in.T_over_TF_range;
  if (!thermal.empty()) j["thermal"] = thermal;
  return j;
}

nlohmann::ordered_json to_json(const scan::Axis& axis) {
  nlohmann::ordered_json j;
  j["field"] = axis.field;
  if (!axis.values.empty()) {
    j["values"] = axis.values;
  } else {
    j["from"] = axis.from;
    j["to"] = axis.to;
    j["points"] = axis.points;
    j["scale"] = axis.scale == scan::Scale::Log ? "log" : "linear";
  }
  return j;
}

}  // namespace bfmix::cli
