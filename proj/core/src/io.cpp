#include "weft/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace weft {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string(what) + ": " + ex.what());
  }
}

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument(msg);
}

} // namespace

EnergyMatrix energy_from_json(const std::string& text) {
  json j = parse_json(text, "energy matrix");
  if (!j.is_object() || !j.contains("states") || !j.contains("matrix"))
    bad("energy matrix: expected an object with \"states\" and \"matrix\"");
  std::vector<std::string> labels;
  for (const auto& s : j["states"]) {
    if (!s.is_string()) bad("energy matrix: states must be strings");
    labels.push_back(s.get<std::string>());
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["matrix"]) {
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) bad("energy matrix: entries must be 0 or 1");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return EnergyMatrix(StateSet(labels), rows);
}

EnergyMatrix load_energy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open energy file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return energy_from_json(buf.str());
}

std::string energy_to_json(const EnergyMatrix& e, int indent) {
  json j;
  j["states"] = e.states().labels();
  json rows = json::array();
  for (int i = 0; i < e.states().size(); ++i) {
    json row = json::array();
    for (int k = 0; k < e.states().size(); ++k) row.push_back(e.eps(i, k));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump(indent);
}

std::string particle_token(const EnergyMatrix& e, const Particle& p) {
  std::ostringstream os;
  if (p.is_primary()) {
    os << p.primary().k << ":" << e.states().label(p.primary().state);
  } else {
    os << p.secondary().k << "*" << e.states().label(p.secondary().upper)
       << "." << e.states().label(p.secondary().lower);
  }
  return os.str();
}

namespace {

int parse_int(const std::string& s, const std::string& token) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(s, &pos);
  } catch (const std::exception&) {
    bad("bad particle token \"" + token + "\": no integer in \"" + s + "\"");
  }
  if (pos != s.size())
    bad("bad particle token \"" + token + "\": trailing characters in \"" +
        s + "\"");
  return value;
}

int parse_state(const EnergyMatrix& e, const std::string& name,
                const std::string& token) {
  auto idx = e.states().find(name);
  if (!idx)
    bad("bad particle token \"" + token + "\": unknown state \"" + name +
        "\"");
  return *idx;
}

} // namespace

Particle parse_particle_token(const EnergyMatrix& e,
                              const std::string& token) {
  auto star = token.find('*');
  if (star != std::string::npos) {
    int k = parse_int(token.substr(0, star), token);
    std::string rest = token.substr(star + 1);
    auto dot = rest.find('.');
    if (dot == std::string::npos)
      bad("bad particle token \"" + token +
          "\": a secondary needs upper.lower");
    int upper = parse_state(e, rest.substr(0, dot), token);
    int lower = parse_state(e, rest.substr(dot + 1), token);
    return Particle{Secondary{k, upper, lower}};
  }
  auto colon = token.find(':');
  if (colon == std::string::npos)
    bad("bad particle token \"" + token + "\": expected k:state or "
        "k*upper.lower");
  int k = parse_int(token.substr(0, colon), token);
  int state = parse_state(e, token.substr(colon + 1), token);
  return Particle{Primary{k, state}};
}

std::string partition_tokens(const EnergyMatrix& e,
                             const ColoredPartition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.particles.size(); ++i) {
    if (i) os << ",";
    os << particle_token(e, p.particles[i]);
  }
  return os.str();
}

ColoredPartition parse_partition_tokens(const EnergyMatrix& e, Side side,
                                        const std::string& text) {
  ColoredPartition out{side, {}};
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.particles.push_back(parse_particle_token(e, cur));
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return out;
}

std::string partition_to_json(const EnergyMatrix& e,
                              const ColoredPartition& p, int indent) {
  json j;
  j["flavor"] = p.side == Side::O ? "O" : "E";
  json parts = json::array();
  for (const Particle& particle : p.particles) {
    json one;
    if (particle.is_primary()) {
      one["k"] = particle.primary().k;
      one["state"] = e.states().label(particle.primary().state);
    } else {
      one["k"] = particle.secondary().k;
      one["upper"] = e.states().label(particle.secondary().upper);
      one["lower"] = e.states().label(particle.secondary().lower);
    }
    parts.push_back(std::move(one));
  }
  j["particles"] = std::move(parts);
  return j.dump(indent);
}

ColoredPartition partition_from_json(const EnergyMatrix& e,
                                     const std::string& text) {
  json j = parse_json(text, "partition");
  if (!j.is_object() || !j.contains("flavor") || !j.contains("particles"))
    bad("partition: expected an object with \"flavor\" and \"particles\"");
  std::string flavor = j["flavor"].get<std::string>();
  if (flavor != "O" && flavor != "E")
    bad("partition: flavor must be \"O\" or \"E\"");
  ColoredPartition out{flavor == "O" ? Side::O : Side::E, {}};
  for (const auto& one : j["particles"]) {
    if (!one.contains("k")) bad("partition: every particle needs \"k\"");
    int k = one["k"].get<int>();
    if (one.contains("state")) {
      std::string name = one["state"].get<std::string>();
      auto idx = e.states().find(name);
      if (!idx) bad("partition: unknown state \"" + name + "\"");
      out.particles.push_back(Particle{Primary{k, *idx}});
    } else if (one.contains("upper") && one.contains("lower")) {
      std::string up = one["upper"].get<std::string>();
      std::string lo = one["lower"].get<std::string>();
      auto ui = e.states().find(up);
      auto li = e.states().find(lo);
      if (!ui || !li)
        bad("partition: unknown state in secondary " + up + "." + lo);
      out.particles.push_back(Particle{Secondary{k, *ui, *li}});
    } else {
      bad("partition: a particle needs \"state\" or \"upper\"+\"lower\"");
    }
  }
  return out;
}

std::string difference_matrix_to_json(const DifferenceMatrix& d, int indent) {
  json j;
  j["primaries"] = d.primaries;
  j["labels"] = d.labels;
  json rows = json::array();
  for (const auto& row : d.entries) rows.push_back(row);
  j["matrix"] = std::move(rows);
  j["secondary_parity"] = d.secondary_parity;
  return j.dump(indent);
}

DifferenceMatrix difference_matrix_from_json(const std::string& text) {
  json j = parse_json(text, "difference matrix");
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix"))
    bad("difference matrix: expected \"labels\" and \"matrix\"");
  DifferenceMatrix d;
  d.primaries = j.value("primaries", 0);
  for (const auto& s : j["labels"]) d.labels.push_back(s.get<std::string>());
  for (const auto& row : j["matrix"])
    d.entries.push_back(row.get<std::vector<int>>());
  if (j.contains("secondary_parity"))
    d.secondary_parity = j["secondary_parity"].get<std::vector<int>>();
  return d;
}

} // namespace weft
