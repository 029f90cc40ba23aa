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

#include "latticeflow/dataflow_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latticeflow {

namespace {

constexpr std::string_view kVarChars =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-.";

void check_var_name(const VarId& id) {
  if (id.name.empty() ||
      id.name.find_first_not_of(kVarChars) != std::string::npos)
    throw std::invalid_argument("bad variable name '" + id.name + "'");
}

int arity_of(DfOp op) {
  switch (op) {
    case DfOp::Union:
    case DfOp::Intersection:
    case DfOp::Product:
      return 2;
    default:
      return 1;
  }
}

bool takes_fn(DfOp op) { return op == DfOp::Map || op == DfOp::Filter; }

void check_derived_spec(const DerivedSpec& d, const VarId& id) {
  if (static_cast<int>(d.inputs.size()) != arity_of(d.op))
    throw std::invalid_argument("'" + id.name + "': " +
                                std::string(to_string(d.op)) + " takes " +
                                std::to_string(arity_of(d.op)) + " input(s)");
  if (takes_fn(d.op)) {
    if (d.op == DfOp::Map)
      compile_fn(d.fn_id);  // throws on unknown ids
    else
      compile_pred(d.fn_id);
  } else if (!d.fn_id.empty()) {
    throw std::invalid_argument("'" + id.name + "': " +
                                std::string(to_string(d.op)) +
                                " takes no function id");
  }
}

LatticeKind kind_of_spec(const NodeSpec& spec) {
  if (spec.is_input()) return spec.input().kind;
  const DfOp op = spec.derived().op;
  return (op == DfOp::FoldSum || op == DfOp::FoldCount)
             ? LatticeKind::LwwRegister
             : LatticeKind::OrSet;
}

}  // namespace

std::string_view to_string(DfOp op) {
  switch (op) {
    case DfOp::Map:
      return "map";
    case DfOp::Filter:
      return "filter";
    case DfOp::Union:
      return "union";
    case DfOp::Intersection:
      return "intersection";
    case DfOp::Product:
      return "product";
    case DfOp::FoldSum:
      return "fold_sum";
    case DfOp::FoldCount:
      return "fold_count";
  }
  return "?";
}

std::vector<VarId> DataflowGraph::validate_nodes(
    const std::map<VarId, NodeSpec>& nodes) {
  for (const auto& [id, spec] : nodes) {
    check_var_name(id);
    if (spec.is_input()) continue;
    const DerivedSpec& d = spec.derived();
    check_derived_spec(d, id);
    for (const VarId& in : d.inputs) {
      auto it = nodes.find(in);
      if (it == nodes.end())
        throw std::invalid_argument("'" + id.name + "' reads undeclared '" +
                                    in.name + "'");
      if (kind_of_spec(it->second) != LatticeKind::OrSet)
        throw std::invalid_argument("'" + id.name + "' needs an orset input, '" +
                                    in.name + "' is " +
                                    std::string(to_string(kind_of_spec(it->second))));
    }
  }

  // Kahn's algorithm over the name-ordered map; the ready set is ordered, so
  // the returned evaluation order is deterministic.
  std::map<VarId, int> missing;
  std::map<VarId, std::vector<VarId>> readers;
  std::set<VarId> ready;
  for (const auto& [id, spec] : nodes) {
    const int deps = spec.is_input() ? 0
                                     : static_cast<int>(spec.derived().inputs.size());
    missing[id] = deps;
    if (deps == 0) ready.insert(id);
    if (!spec.is_input())
      for (const VarId& in : spec.derived().inputs) readers[in].push_back(id);
  }
  std::vector<VarId> order;
  order.reserve(nodes.size());
  while (!ready.empty()) {
    const VarId id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (const VarId& reader : readers[id])
      if (--missing[reader] == 0) ready.insert(reader);
  }
  if (order.size() != nodes.size())
    throw std::invalid_argument("graph spec contains a cycle");
  return order;
}

DataflowGraph DataflowGraph::from_nodes(ReplicaId owner,
                                        const std::map<VarId, NodeSpec>& nodes) {
  const std::vector<VarId> order = validate_nodes(nodes);
  DataflowGraph g(std::move(owner));
  for (const VarId& id : order) g.declare(id, nodes.at(id));
  g.propagate();
  return g;
}

void DataflowGraph::declare(const VarId& id, const NodeSpec& spec) {
  check_var_name(id);
  if (nodes_.count(id) > 0)
    throw std::invalid_argument("variable '" + id.name + "' already declared");
  if (!spec.is_input()) {
    const DerivedSpec& d = spec.derived();
    check_derived_spec(d, id);
    for (const VarId& in : d.inputs) {
      if (nodes_.count(in) == 0)
        throw std::invalid_argument("'" + id.name + "' reads undeclared '" +
                                    in.name + "'");
      if (value_kind(in) != LatticeKind::OrSet)
        throw std::invalid_argument("'" + id.name + "' needs an orset input, '" +
                                    in.name + "' is " +
                                    std::string(to_string(value_kind(in))));
    }
  }
  nodes_.emplace(id, spec);
  store_.emplace(id, bottom(kind_of_spec(spec)));
}

void DataflowGraph::declare_input(const VarId& id, LatticeKind kind) {
  declare(id, NodeSpec(InputSpec{kind}));
}

void DataflowGraph::declare_derived(const VarId& id, DfOp op, std::string fn_id,
                                    std::vector<VarId> inputs) {
  declare(id, NodeSpec(DerivedSpec{op, std::move(fn_id), std::move(inputs)}));
}

const NodeSpec& DataflowGraph::node_at(const VarId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end())
    throw std::invalid_argument("unknown variable '" + id.name + "'");
  return it->second;
}

void DataflowGraph::update(const VarId& id, const Mutation& m) {
  if (!node_at(id).is_input())
    throw std::invalid_argument("cannot update derived variable '" + id.name + "'");
  store_.at(id) = apply_mutation(store_.at(id), m, owner_);
}

void DataflowGraph::merge_var(const VarId& id, const LatticeValue& remote) {
  if (!node_at(id).is_input())
    throw std::invalid_argument("cannot merge into derived variable '" +
                                id.name + "'");
  store_.at(id) = join(store_.at(id), remote);
}

const LatticeValue& DataflowGraph::read(const VarId& id) const {
  node_at(id);
  return store_.at(id);
}

LatticeKind DataflowGraph::value_kind(const VarId& id) const {
  return kind_of_spec(node_at(id));
}

LatticeValue DataflowGraph::recompute(const VarId& id,
                                      const DerivedSpec& spec) const {
  const auto orset_of = [this](const VarId& in) -> const OrSet& {
    return store_.at(in).as_orset();
  };
  switch (spec.op) {
    case DfOp::Map:
      return LatticeValue(df_map(orset_of(spec.inputs[0]), compile_fn(spec.fn_id)));
    case DfOp::Filter:
      return LatticeValue(
          df_filter(orset_of(spec.inputs[0]), compile_pred(spec.fn_id)));
    case DfOp::Union:
      return LatticeValue(
          df_union(orset_of(spec.inputs[0]), orset_of(spec.inputs[1])));
    case DfOp::Intersection:
      return LatticeValue(
          df_intersection(orset_of(spec.inputs[0]), orset_of(spec.inputs[1])));
    case DfOp::Product:
      return LatticeValue(
          df_product(orset_of(spec.inputs[0]), orset_of(spec.inputs[1])));
    case DfOp::FoldSum:
      return LatticeValue(
          df_fold(orset_of(spec.inputs[0]), FoldOp::Sum, ReplicaId(id.name)));
    case DfOp::FoldCount:
      return LatticeValue(
          df_fold(orset_of(spec.inputs[0]), FoldOp::Count, ReplicaId(id.name)));
  }
  throw std::invalid_argument("unknown dataflow op");
}

void DataflowGraph::propagate() {
  for (const VarId& id : validate_nodes(nodes_)) {
    const NodeSpec& spec = nodes_.at(id);
    if (!spec.is_input()) store_.at(id) = recompute(id, spec.derived());
  }
}

std::map<VarId, LatticeValue> DataflowGraph::input_store() const {
  std::map<VarId, LatticeValue> out;
  for (const auto& [id, spec] : nodes_)
    if (spec.is_input()) out.emplace(id, store_.at(id));
  return out;
}

std::string DataflowGraph::spec_text() const {
  std::ostringstream out;
  for (const auto& [id, spec] : nodes_) {
    out << id.name << " = ";
    if (spec.is_input()) {
      out << "input(" << to_string(spec.input().kind) << ")";
    } else {
      const DerivedSpec& d = spec.derived();
      out << to_string(d.op) << "(";
      bool first = true;
      if (takes_fn(d.op)) {
        out << d.fn_id;
        first = false;
      }
      for (const VarId& in : d.inputs) {
        if (!first) out << ", ";
        out << in.name;
        first = false;
      }
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

DfOp op_from(const std::string& name, const std::string& line) {
  for (DfOp op : {DfOp::Map, DfOp::Filter, DfOp::Union, DfOp::Intersection,
                  DfOp::Product, DfOp::FoldSum, DfOp::FoldCount})
    if (name == to_string(op)) return op;
  throw std::invalid_argument("unknown node op '" + name + "' in: " + line);
}

}  // namespace

std::map<VarId, NodeSpec> DataflowGraph::parse_spec_text(const std::string& text) {
  std::map<VarId, NodeSpec> nodes;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected 'name = op(...)' in: " + line);
    const VarId id(strip(t.substr(0, eq)));
    const std::string rhs = strip(t.substr(eq + 1));
    const auto open = rhs.find('(');
    if (open == std::string::npos || rhs.back() != ')')
      throw std::invalid_argument("expected 'op(args)' in: " + line);
    const std::string op_name = strip(rhs.substr(0, open));
    const std::string args = rhs.substr(open + 1, rhs.size() - open - 2);

    if (op_name == "input") {
      const auto kind = lattice_kind_from(strip(args));
      if (!kind)
        throw std::invalid_argument("unknown lattice kind '" + strip(args) +
                                    "' in: " + line);
      if (!nodes.emplace(id, NodeSpec(InputSpec{*kind})).second)
        throw std::invalid_argument("duplicate variable '" + id.name + "'");
      continue;
    }

    DerivedSpec d;
    d.op = op_from(op_name, line);
    // Split args at top-level commas; function ids may contain parens.
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : args) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(strip(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!strip(cur).empty() || !parts.empty()) parts.push_back(strip(cur));
    if (takes_fn(d.op)) {
      if (parts.empty())
        throw std::invalid_argument("missing function id in: " + line);
      d.fn_id = parts.front();
      parts.erase(parts.begin());
    }
    for (const std::string& p : parts) d.inputs.emplace_back(p);
    if (!nodes.emplace(id, NodeSpec(std::move(d))).second)
      throw std::invalid_argument("duplicate variable '" + id.name + "'");
  }
  validate_nodes(nodes);
  return nodes;
}

}  // namespace latticeflow
