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

#include "latticeflow/serialize.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace latticeflow {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw std::invalid_argument("malformed lattice encoding: " + what);
}

std::string hex_bits(double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  char buf[17] = {};
  for (int i = 0; i < 16; ++i)
    buf[i] = "0123456789abcdef"[(bits >> (60 - 4 * i)) & 0xF];
  return std::string(buf, 16);
}

double bits_from_hex(const std::string& s) {
  if (s.size() != 16) parse_error("float bits must be 16 hex digits");
  std::uint64_t bits = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), bits, 16);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    parse_error("bad float bits");
  return std::bit_cast<double>(bits);
}

}  // namespace

Json to_json(const Element& e) {
  switch (e.kind()) {
    case Element::Kind::Int:
      return Json::array({"i", e.as_int()});
    case Element::Kind::F64: {
      const double v = e.as_f64();
      if (std::isfinite(v)) return Json::array({"f", v});
      return Json::array({"fb", hex_bits(v)});
    }
    case Element::Kind::Str:
      return Json::array({"s", e.as_string()});
    case Element::Kind::Pair:
      return Json::array({"p", to_json(e.first()), to_json(e.second())});
  }
  parse_error("unknown element kind");
}

Element element_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    parse_error("element must be a tagged array");
  const std::string tag = j[0].get<std::string>();
  if (tag == "i" && j.size() == 2 && j[1].is_number_integer())
    return Element::of_int(j[1].get<std::int64_t>());
  if (tag == "f" && j.size() == 2 && j[1].is_number())
    return Element::of_f64(j[1].get<double>());
  if (tag == "fb" && j.size() == 2 && j[1].is_string())
    return Element::of_f64(bits_from_hex(j[1].get<std::string>()));
  if (tag == "s" && j.size() == 2 && j[1].is_string())
    return Element::of_string(j[1].get<std::string>());
  if (tag == "p" && j.size() == 3)
    return Element::pair(element_from_json(j[1]), element_from_json(j[2]));
  parse_error("unrecognized element tag '" + tag + "'");
}

Json to_json(const VersionVector& vv) {
  Json out = Json::array();
  for (const auto& [r, n] : vv.entries()) out.push_back(Json::array({r.id, n}));
  return out;
}

VersionVector version_vector_from_json(const Json& j) {
  if (!j.is_array()) parse_error("version vector must be an array");
  VersionVector vv;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_number_unsigned())
      parse_error("version vector entries are [replica, count]");
    const auto n = item[1].get<std::uint64_t>();
    if (n == 0) continue;  // zero entries normalize away
    vv.advance_to(ReplicaId(item[0].get<std::string>()), n);
  }
  return vv;
}

Json to_json(const CausalContext& cc) {
  Json cloud = Json::array();
  for (const Dot& d : cc.cloud())
    cloud.push_back(Json::array({d.replica.id, d.sequence}));
  Json out;
  out["compact"] = to_json(cc.compact());
  out["cloud"] = std::move(cloud);
  return out;
}

CausalContext causal_context_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("compact") || !j.contains("cloud"))
    parse_error("causal context needs compact and cloud");
  VersionVector compact = version_vector_from_json(j["compact"]);
  std::set<Dot> cloud;
  for (const auto& item : j["cloud"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_number_unsigned())
      parse_error("cloud dots are [replica, sequence]");
    cloud.insert(Dot(ReplicaId(item[0].get<std::string>()),
                     item[1].get<std::uint64_t>()));
  }
  return CausalContext::from_parts(std::move(compact), std::move(cloud));
}

namespace {

Json counter_entries_json(const GCounter& c) {
  Json out = Json::array();
  for (const auto& [r, n] : c.entries()) out.push_back(Json::array({r.id, n}));
  return out;
}

GCounter gcounter_from_entries(const Json& j) {
  if (!j.is_array()) parse_error("counter entries must be an array");
  GCounter c;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_number_unsigned())
      parse_error("counter entries are [replica, count]");
    const auto n = item[1].get<std::uint64_t>();
    if (n == 0) continue;
    c = c.incremented(ReplicaId(item[0].get<std::string>()), n);
  }
  return c;
}

}  // namespace

Json to_json(const LatticeValue& v) {
  Json out;
  out["kind"] = std::string(to_string(v.kind()));
  switch (v.kind()) {
    case LatticeKind::GCounter:
      out["entries"] = counter_entries_json(v.as_gcounter());
      break;
    case LatticeKind::PnCounter:
      out["pos"] = counter_entries_json(v.as_pncounter().positive());
      out["neg"] = counter_entries_json(v.as_pncounter().negative());
      break;
    case LatticeKind::GSet: {
      Json elems = Json::array();
      for (const Element& e : v.as_gset().elements()) elems.push_back(to_json(e));
      out["elements"] = std::move(elems);
      break;
    }
    case LatticeKind::OrSet: {
      Json entries = Json::array();
      for (const auto& [dot, elem] : v.as_orset().entries())
        entries.push_back(
            Json::array({dot.replica.id, dot.sequence, to_json(elem)}));
      out["entries"] = std::move(entries);
      out["context"] = to_json(v.as_orset().context());
      break;
    }
    case LatticeKind::LwwRegister: {
      const LwwRegister& reg = v.as_lww();
      out["counter"] = reg.counter();
      out["replica"] = reg.replica().id;
      out["value"] = reg.has_value() ? to_json(reg.value()) : Json(nullptr);
      break;
    }
  }
  return out;
}

LatticeValue lattice_value_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    parse_error("lattice value needs a kind");
  const auto kind = lattice_kind_from(j["kind"].get<std::string>());
  if (!kind)
    parse_error("unknown lattice kind '" + j["kind"].get<std::string>() + "'");
  switch (*kind) {
    case LatticeKind::GCounter:
      return LatticeValue(gcounter_from_entries(j.value("entries", Json::array())));
    case LatticeKind::PnCounter: {
      PnCounter pn;
      const GCounter pos = gcounter_from_entries(j.value("pos", Json::array()));
      const GCounter neg = gcounter_from_entries(j.value("neg", Json::array()));
      for (const auto& [r, n] : pos.entries()) pn = pn.incremented(r, n);
      for (const auto& [r, n] : neg.entries()) pn = pn.decremented(r, n);
      return LatticeValue(std::move(pn));
    }
    case LatticeKind::GSet: {
      GSet s;
      for (const auto& item : j.value("elements", Json::array()))
        s = s.added(element_from_json(item));
      return LatticeValue(std::move(s));
    }
    case LatticeKind::OrSet: {
      if (!j.contains("context")) parse_error("orset needs a context");
      CausalContext ctx = causal_context_from_json(j["context"]);
      std::map<Dot, Element> entries;
      for (const auto& item : j.value("entries", Json::array())) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_string() ||
            !item[1].is_number_unsigned())
          parse_error("orset entries are [replica, sequence, element]");
        Dot dot(ReplicaId(item[0].get<std::string>()),
                item[1].get<std::uint64_t>());
        if (!entries.emplace(std::move(dot), element_from_json(item[2])).second)
          parse_error("duplicate orset entry dot");
      }
      return LatticeValue(OrSet::from_parts(std::move(entries), std::move(ctx)));
    }
    case LatticeKind::LwwRegister: {
      if (!j.contains("value")) parse_error("register needs a value field");
      std::optional<Element> value;
      if (!j["value"].is_null()) value = element_from_json(j["value"]);
      return LatticeValue(LwwRegister::from_parts(
          j.value("counter", std::uint64_t{0}),
          ReplicaId(j.value("replica", std::string{})), std::move(value)));
    }
  }
  parse_error("unknown lattice kind");
}

std::string canonical_bytes(const LatticeValue& v) { return to_json(v).dump(); }

}  // namespace latticeflow
