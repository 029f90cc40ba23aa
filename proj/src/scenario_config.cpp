//  Copyright 2026 The Latticeflow Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latticeflow/scenario_config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace latticeflow {

namespace {

[[noreturn]] void config_error(int line_no, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(line_no) + ": " +
                              what);
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  int line_no = 0;
  bool used = false;
};

// One parsed table: the section name plus its key/value entries.
struct Section {
  std::string name;
  int line_no = 0;
  std::map<std::string, Entry> entries;

  bool has(const std::string& key) const { return entries.count(key) > 0; }

  const std::string& require(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end())
      config_error(line_no, "[" + name + "] is missing '" + key + "'");
    it->second.used = true;
    return it->second.value;
  }

  std::string get_or(const std::string& key, const std::string& fallback) {
    auto it = entries.find(key);
    if (it == entries.end()) return fallback;
    it->second.used = true;
    return it->second.value;
  }

  std::int64_t require_int(const std::string& key) {
    const std::string& raw = require(key);
    std::int64_t v = 0;
    const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (res.ec != std::errc() || res.ptr != raw.data() + raw.size())
      config_error(entries.at(key).line_no, "'" + key + "' wants an integer, got '" + raw + "'");
    return v;
  }

  double require_double(const std::string& key) {
    const std::string& raw = require(key);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(raw.c_str(), &end);
    if (end != raw.c_str() + raw.size() || raw.empty() || errno != 0)
      config_error(entries.at(key).line_no, "'" + key + "' wants a number, got '" + raw + "'");
    return v;
  }

  void reject_unused() const {
    for (const auto& [key, entry] : entries)
      if (!entry.used)
        config_error(entry.line_no,
                     "unknown key '" + key + "' in [" + name + "]");
  }
};

std::vector<Section> tokenize(const std::string& text) {
  std::vector<Section> sections;
  sections.push_back({"", 0, {}});  // top-level scalars
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = strip(line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') config_error(line_no, "unterminated section header");
      sections.push_back({strip(line.substr(1, line.size() - 2)), line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) config_error(line_no, "expected 'key = value'");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) config_error(line_no, "empty key");
    if (!sections.back().entries.emplace(key, Entry{value, line_no, false}).second)
      config_error(line_no, "duplicate key '" + key + "'");
  }
  return sections;
}

std::vector<ReplicaId> parse_node_list(const std::string& raw) {
  std::vector<ReplicaId> out;
  std::string cur;
  std::istringstream in(raw);
  while (std::getline(in, cur, ',')) {
    const std::string name = strip(cur);
    if (!name.empty()) out.push_back(ReplicaId(name));
  }
  return out;
}

}  // namespace

std::vector<ReplicaId> ScenarioConfig::node_ids() const {
  std::vector<ReplicaId> out;
  for (int i = 0; i < nodes; ++i) out.push_back(replica_name(i));
  return out;
}

ScenarioConfig ScenarioConfig::parse(const std::string& text) {
  std::vector<Section> sections = tokenize(text);
  ScenarioConfig cfg;

  Section& top = sections.front();
  cfg.scenario = top.require("scenario");
  if (cfg.scenario != "fridge" && cfg.scenario != "gossip")
    config_error(top.entries.at("scenario").line_no,
                 "scenario must be 'fridge' or 'gossip'");
  cfg.nodes = static_cast<int>(top.require_int("nodes"));
  if (top.has("seed")) cfg.seed = static_cast<std::uint64_t>(top.require_int("seed"));
  if (top.has("drop_prob")) cfg.drop_prob = top.require_double("drop_prob");
  if (top.has("dup_prob")) cfg.dup_prob = top.require_double("dup_prob");
  if (top.has("max_delay_rounds"))
    cfg.max_delay_rounds = static_cast<int>(top.require_int("max_delay_rounds"));
  if (top.has("fanout")) cfg.fanout = static_cast<int>(top.require_int("fanout"));
  if (top.has("max_rounds"))
    cfg.max_rounds = static_cast<int>(top.require_int("max_rounds"));
  if (top.has("threshold_celsius"))
    cfg.threshold_celsius = top.require_double("threshold_celsius");
  top.reject_unused();

  for (std::size_t i = 1; i < sections.size(); ++i) {
    Section& sec = sections[i];
    if (sec.name == "partition") {
      PartitionDecl p;
      p.from_round = static_cast<int>(sec.require_int("from_round"));
      p.to_round = static_cast<int>(sec.require_int("to_round"));
      p.side_a = parse_node_list(sec.require("side_a"));
      if (sec.has("side_b")) p.side_b = parse_node_list(sec.require("side_b"));
      cfg.partitions.push_back(std::move(p));
    } else if (sec.name == "reading") {
      ReadingSpec r;
      r.round = static_cast<int>(sec.require_int("round"));
      r.node = ReplicaId(sec.require("node"));
      r.temp_celsius = sec.require_double("temp_celsius");
      cfg.readings.push_back(std::move(r));
    } else if (sec.name == "var") {
      VarDecl v;
      v.name = VarId(sec.require("name"));
      const std::string kind_name = sec.require("kind");
      const auto kind = lattice_kind_from(kind_name);
      if (!kind)
        config_error(sec.line_no, "unknown lattice kind '" + kind_name + "'");
      v.kind = *kind;
      cfg.vars.push_back(std::move(v));
    } else if (sec.name == "derived") {
      DerivedDecl d;
      d.name = VarId(sec.require("name"));
      const std::string op_name = sec.require("op");
      bool found = false;
      for (DfOp op : {DfOp::Map, DfOp::Filter, DfOp::Union, DfOp::Intersection,
                      DfOp::Product, DfOp::FoldSum, DfOp::FoldCount}) {
        if (op_name == to_string(op)) {
          d.op = op;
          found = true;
        }
      }
      if (!found) config_error(sec.line_no, "unknown op '" + op_name + "'");
      d.fn_id = sec.get_or("fn", "");
      for (const ReplicaId& r : parse_node_list(sec.require("inputs")))
        d.inputs.push_back(VarId(r.id));
      cfg.derived.push_back(std::move(d));
    } else if (sec.name == "update") {
      UpdateDecl u;
      u.round = static_cast<int>(sec.require_int("round"));
      u.node = ReplicaId(sec.require("node"));
      u.var = VarId(sec.require("var"));
      u.action = sec.require("action");
      if (sec.has("amount"))
        u.amount = static_cast<std::uint64_t>(sec.require_int("amount"));
      if (sec.has("value")) {
        try {
          u.value = parse_element_literal(sec.require("value"));
        } catch (const std::invalid_argument& e) {
          config_error(sec.line_no, e.what());
        }
      }
      cfg.updates.push_back(std::move(u));
    } else if (sec.name == "watch") {
      cfg.watches.push_back(VarId(sec.require("var")));
    } else {
      config_error(sec.line_no, "unknown section [" + sec.name + "]");
    }
    sec.reject_unused();
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace latticeflow
