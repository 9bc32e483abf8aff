#include "wsnsim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wsnsim {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void NetworkConfig::validate() const {
  require(num_nodes >= 1, "num_nodes must be >= 1 (got " + std::to_string(num_nodes) + ")");
  require(std::isfinite(length) && length > 0.0, "length must be > 0 (got " + fmt(length) + ")");
  require(std::isfinite(width) && width > 0.0, "width must be > 0 (got " + fmt(width) + ")");
  require(std::isfinite(bs_x), "bs_x must be finite");
  require(std::isfinite(bs_y), "bs_y must be finite");
  require(std::isfinite(initial_energy) && initial_energy > 0.0,
          "initial_energy must be > 0 (got " + fmt(initial_energy) + ")");
  require(std::isfinite(e_elec) && e_elec > 0.0, "e_elec must be > 0 (got " + fmt(e_elec) + ")");
  require(std::isfinite(e_fs) && e_fs > 0.0, "e_fs must be > 0 (got " + fmt(e_fs) + ")");
  require(std::isfinite(e_mp) && e_mp > 0.0, "e_mp must be > 0 (got " + fmt(e_mp) + ")");
  require(std::isfinite(e_da) && e_da > 0.0, "e_da must be > 0 (got " + fmt(e_da) + ")");
  require(data_packet_bits > 0,
          "data_packet_bits must be > 0 (got " + std::to_string(data_packet_bits) + ")");
  require(ctrl_packet_bits > 0,
          "ctrl_packet_bits must be > 0 (got " + std::to_string(ctrl_packet_bits) + ")");
  require(std::isfinite(leach_p) && leach_p > 0.0 && leach_p <= 1.0,
          "leach_p must be in (0, 1] (got " + fmt(leach_p) + ")");
  require(max_rounds >= 0, "max_rounds must be >= 0 (got " + std::to_string(max_rounds) + ")");
  require(knapsack_scale >= 1,
          "knapsack_scale must be >= 1 (got " + std::to_string(knapsack_scale) + ")");
}

const char* to_string(HeadScore v) { return v == HeadScore::Literal ? "literal" : "intent"; }
const char* to_string(KnapsackValue v) { return v == KnapsackValue::Energy ? "energy" : "unit"; }
const char* to_string(ChargeModel v) { return v == ChargeModel::Radio ? "radio" : "eq7_8"; }
const char* to_string(HeadlessPolicy v) { return v == HeadlessPolicy::Direct ? "direct" : "idle"; }

namespace {

HeadScore head_score_from(const std::string& s) {
  if (s == "literal") return HeadScore::Literal;
  if (s == "intent") return HeadScore::Intent;
  throw ConfigError("head_score must be \"literal\" or \"intent\" (got \"" + s + "\")");
}

KnapsackValue knapsack_value_from(const std::string& s) {
  if (s == "energy") return KnapsackValue::Energy;
  if (s == "unit") return KnapsackValue::Unit;
  throw ConfigError("knapsack_value must be \"energy\" or \"unit\" (got \"" + s + "\")");
}

ChargeModel charge_model_from(const std::string& s) {
  if (s == "radio") return ChargeModel::Radio;
  if (s == "eq7_8") return ChargeModel::Eq78;
  throw ConfigError("charge_model must be \"radio\" or \"eq7_8\" (got \"" + s + "\")");
}

HeadlessPolicy headless_from(const std::string& s) {
  if (s == "direct") return HeadlessPolicy::Direct;
  if (s == "idle") return HeadlessPolicy::Idle;
  throw ConfigError("headless must be \"direct\" or \"idle\" (got \"" + s + "\")");
}

template <typename T>
T get_as(const nlohmann::json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key \"" + key + "\" has the wrong type");
  }
}

}  // namespace

NetworkConfig NetworkConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  NetworkConfig cfg;
  for (const auto& [key, val] : j.items()) {
    if (key == "num_nodes") cfg.num_nodes = get_as<int>(val, key);
    else if (key == "length") cfg.length = get_as<double>(val, key);
    else if (key == "width") cfg.width = get_as<double>(val, key);
    else if (key == "bs_x") cfg.bs_x = get_as<double>(val, key);
    else if (key == "bs_y") cfg.bs_y = get_as<double>(val, key);
    else if (key == "initial_energy") cfg.initial_energy = get_as<double>(val, key);
    else if (key == "e_elec") cfg.e_elec = get_as<double>(val, key);
    else if (key == "e_fs") cfg.e_fs = get_as<double>(val, key);
    else if (key == "e_mp") cfg.e_mp = get_as<double>(val, key);
    else if (key == "e_da") cfg.e_da = get_as<double>(val, key);
    else if (key == "data_packet_bits") cfg.data_packet_bits = get_as<long>(val, key);
    else if (key == "ctrl_packet_bits") cfg.ctrl_packet_bits = get_as<long>(val, key);
    else if (key == "leach_p") cfg.leach_p = get_as<double>(val, key);
    else if (key == "max_rounds") cfg.max_rounds = get_as<long>(val, key);
    else if (key == "knapsack_scale") cfg.knapsack_scale = get_as<int>(val, key);
    else if (key == "seed") cfg.seed = get_as<std::uint64_t>(val, key);
    else if (key == "head_score") cfg.head_score = head_score_from(get_as<std::string>(val, key));
    else if (key == "knapsack_value")
      cfg.knapsack_value = knapsack_value_from(get_as<std::string>(val, key));
    else if (key == "charge_model")
      cfg.charge_model = charge_model_from(get_as<std::string>(val, key));
    else if (key == "headless") cfg.headless = headless_from(get_as<std::string>(val, key));
    else throw ConfigError("unknown config key \"" + key + "\"");
  }
  return cfg;
}

NetworkConfig NetworkConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string NetworkConfig::to_json_text() const {
  nlohmann::ordered_json j;
  j["num_nodes"] = num_nodes;
  j["length"] = length;
  j["width"] = width;
  j["bs_x"] = bs_x;
  j["bs_y"] = bs_y;
  j["initial_energy"] = initial_energy;
  j["e_elec"] = e_elec;
  j["e_fs"] = e_fs;
  j["e_mp"] = e_mp;
  j["e_da"] = e_da;
  j["data_packet_bits"] = data_packet_bits;
  j["ctrl_packet_bits"] = ctrl_packet_bits;
  j["leach_p"] = leach_p;
  j["max_rounds"] = max_rounds;
  j["knapsack_scale"] = knapsack_scale;
  j["seed"] = seed;
  j["head_score"] = to_string(head_score);
  j["knapsack_value"] = to_string(knapsack_value);
  j["charge_model"] = to_string(charge_model);
  j["headless"] = to_string(headless);
  return j.dump(2) + "\n";
}

}  // namespace wsnsim
