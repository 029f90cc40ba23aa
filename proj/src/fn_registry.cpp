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

#include "latticeflow/fn_registry.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace latticeflow {

namespace {

struct ParsedId {
  std::string name;
  std::string arg;   // raw text inside parens
  bool has_arg = false;
};

ParsedId parse_id(const std::string& id) {
  std::string s = id;
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  const auto open = s.find('(');
  if (open == std::string::npos) return {s, "", false};
  if (s.back() != ')')
    throw std::invalid_argument("malformed function id '" + id + "'");
  return {s.substr(0, open), s.substr(open + 1, s.size() - open - 2), true};
}

Element require_arg(const ParsedId& p, const std::string& id) {
  if (!p.has_arg)
    throw std::invalid_argument("function '" + id + "' needs an argument");
  return parse_element_literal(p.arg);
}

void forbid_arg(const ParsedId& p, const std::string& id) {
  if (p.has_arg)
    throw std::invalid_argument("function '" + id + "' takes no argument");
}

double require_numeric(const Element& e, const std::string& id) {
  if (!e.is_numeric())
    throw std::invalid_argument("function '" + id + "' needs a numeric argument");
  return e.numeric();
}

// Int stays int under int arguments (wrapping via unsigned arithmetic);
// any float operand widens the result to f64.
Element arith(const Element& e, const Element& k, bool multiply) {
  if (!e.is_numeric()) return e;
  if (e.kind() == Element::Kind::Int && k.kind() == Element::Kind::Int) {
    const auto a = static_cast<std::uint64_t>(e.as_int());
    const auto b = static_cast<std::uint64_t>(k.as_int());
    const std::uint64_t r = multiply ? a * b : a + b;
    return Element::of_int(static_cast<std::int64_t>(r));
  }
  const double a = e.numeric();
  const double b = k.numeric();
  return Element::of_f64(multiply ? a * b : a + b);
}

}  // namespace

ElementFn compile_fn(const std::string& fn_id) {
  const ParsedId p = parse_id(fn_id);
  if (p.name == "identity") {
    forbid_arg(p, fn_id);
    return [](const Element& e) { return e; };
  }
  if (p.name == "scale") {
    Element k = require_arg(p, fn_id);
    require_numeric(k, fn_id);
    return [k = std::move(k)](const Element& e) { return arith(e, k, true); };
  }
  if (p.name == "add") {
    Element k = require_arg(p, fn_id);
    require_numeric(k, fn_id);
    return [k = std::move(k)](const Element& e) { return arith(e, k, false); };
  }
  if (p.name == "pair_with") {
    Element k = require_arg(p, fn_id);
    return [k = std::move(k)](const Element& e) { return Element::pair(e, k); };
  }
  if (p.name == "tag") {
    Element k = require_arg(p, fn_id);
    if (k.kind() != Element::Kind::Str)
      throw std::invalid_argument("tag() needs a string argument");
    return [k = std::move(k)](const Element& e) { return Element::pair(k, e); };
  }
  if (p.name == "first") {
    forbid_arg(p, fn_id);
    return [](const Element& e) {
      return e.kind() == Element::Kind::Pair ? e.first() : e;
    };
  }
  if (p.name == "second") {
    forbid_arg(p, fn_id);
    return [](const Element& e) {
      return e.kind() == Element::Kind::Pair ? e.second() : e;
    };
  }
  throw std::invalid_argument("unknown function id '" + fn_id + "'");
}

ElementPred compile_pred(const std::string& pred_id) {
  const ParsedId p = parse_id(pred_id);
  if (p.name == "always_true") {
    forbid_arg(p, pred_id);
    return [](const Element&) { return true; };
  }
  if (p.name == "always_false") {
    forbid_arg(p, pred_id);
    return [](const Element&) { return false; };
  }
  if (p.name == "gt") {
    const double x = require_numeric(require_arg(p, pred_id), pred_id);
    return [x](const Element& e) { return e.is_numeric() && e.numeric() > x; };
  }
  if (p.name == "lt") {
    const double x = require_numeric(require_arg(p, pred_id), pred_id);
    return [x](const Element& e) { return e.is_numeric() && e.numeric() < x; };
  }
  if (p.name == "eq") {
    Element k = require_arg(p, pred_id);
    return [k = std::move(k)](const Element& e) { return e == k; };
  }
  if (p.name == "second_gt") {
    const double x = require_numeric(require_arg(p, pred_id), pred_id);
    return [x](const Element& e) {
      return e.kind() == Element::Kind::Pair && e.second().is_numeric() &&
             e.second().numeric() > x;
    };
  }
  throw std::invalid_argument("unknown predicate id '" + pred_id + "'");
}

bool is_known_fn(const std::string& fn_id) {
  try {
    compile_fn(fn_id);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_known_pred(const std::string& pred_id) {
  try {
    compile_pred(pred_id);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace latticeflow
