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

#include "latticeflow/lattice_value.hpp"

#include <stdexcept>

namespace latticeflow {

std::string_view to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::GCounter:
      return "gcounter";
    case LatticeKind::PnCounter:
      return "pncounter";
    case LatticeKind::GSet:
      return "gset";
    case LatticeKind::OrSet:
      return "orset";
    case LatticeKind::LwwRegister:
      return "lww";
  }
  return "?";
}

std::optional<LatticeKind> lattice_kind_from(std::string_view name) {
  if (name == "gcounter") return LatticeKind::GCounter;
  if (name == "pncounter") return LatticeKind::PnCounter;
  if (name == "gset") return LatticeKind::GSet;
  if (name == "orset") return LatticeKind::OrSet;
  if (name == "lww") return LatticeKind::LwwRegister;
  return std::nullopt;
}

namespace {

[[noreturn]] void kind_error(std::string_view want, LatticeKind got) {
  throw std::invalid_argument("expected " + std::string(want) + ", got " +
                              std::string(to_string(got)));
}

}  // namespace

const GCounter& LatticeValue::as_gcounter() const {
  if (auto* p = std::get_if<GCounter>(&v_)) return *p;
  kind_error("gcounter", kind());
}

const PnCounter& LatticeValue::as_pncounter() const {
  if (auto* p = std::get_if<PnCounter>(&v_)) return *p;
  kind_error("pncounter", kind());
}

const GSet& LatticeValue::as_gset() const {
  if (auto* p = std::get_if<GSet>(&v_)) return *p;
  kind_error("gset", kind());
}

const OrSet& LatticeValue::as_orset() const {
  if (auto* p = std::get_if<OrSet>(&v_)) return *p;
  kind_error("orset", kind());
}

const LwwRegister& LatticeValue::as_lww() const {
  if (auto* p = std::get_if<LwwRegister>(&v_)) return *p;
  kind_error("lww", kind());
}

LatticeValue bottom(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::GCounter:
      return LatticeValue(GCounter{});
    case LatticeKind::PnCounter:
      return LatticeValue(PnCounter{});
    case LatticeKind::GSet:
      return LatticeValue(GSet{});
    case LatticeKind::OrSet:
      return LatticeValue(OrSet{});
    case LatticeKind::LwwRegister:
      return LatticeValue(LwwRegister{});
  }
  throw std::invalid_argument("unknown lattice kind");
}

LatticeValue join(const LatticeValue& a, const LatticeValue& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("cannot join " + std::string(to_string(a.kind())) +
                                " with " + std::string(to_string(b.kind())));
  switch (a.kind()) {
    case LatticeKind::GCounter:
      return LatticeValue(a.as_gcounter().joined(b.as_gcounter()));
    case LatticeKind::PnCounter:
      return LatticeValue(a.as_pncounter().joined(b.as_pncounter()));
    case LatticeKind::GSet:
      return LatticeValue(a.as_gset().joined(b.as_gset()));
    case LatticeKind::OrSet:
      return LatticeValue(a.as_orset().joined(b.as_orset()));
    case LatticeKind::LwwRegister:
      return LatticeValue(a.as_lww().joined(b.as_lww()));
  }
  throw std::invalid_argument("unknown lattice kind");
}

bool leq(const LatticeValue& a, const LatticeValue& b) {
  return join(a, b) == b;
}

Mutation Mutation::counter_inc(std::uint64_t amount) {
  Mutation m;
  m.kind = Kind::CounterInc;
  m.amount = amount;
  return m;
}

Mutation Mutation::counter_dec(std::uint64_t amount) {
  Mutation m;
  m.kind = Kind::CounterDec;
  m.amount = amount;
  return m;
}

Mutation Mutation::set_add(Element e) {
  Mutation m;
  m.kind = Kind::SetAdd;
  m.value = std::move(e);
  return m;
}

Mutation Mutation::set_remove(Element e) {
  Mutation m;
  m.kind = Kind::SetRemove;
  m.value = std::move(e);
  return m;
}

Mutation Mutation::register_set(Element e) {
  Mutation m;
  m.kind = Kind::RegisterSet;
  m.value = std::move(e);
  return m;
}

std::string_view to_string(Mutation::Kind kind) {
  switch (kind) {
    case Mutation::Kind::CounterInc:
      return "inc";
    case Mutation::Kind::CounterDec:
      return "dec";
    case Mutation::Kind::SetAdd:
      return "add";
    case Mutation::Kind::SetRemove:
      return "remove";
    case Mutation::Kind::RegisterSet:
      return "set";
  }
  return "?";
}

LatticeValue apply_mutation(const LatticeValue& value, const Mutation& m,
                            const ReplicaId& actor) {
  switch (m.kind) {
    case Mutation::Kind::CounterInc:
      if (value.kind() == LatticeKind::GCounter)
        return LatticeValue(value.as_gcounter().incremented(actor, m.amount));
      if (value.kind() == LatticeKind::PnCounter)
        return LatticeValue(value.as_pncounter().incremented(actor, m.amount));
      break;
    case Mutation::Kind::CounterDec:
      if (value.kind() == LatticeKind::PnCounter)
        return LatticeValue(value.as_pncounter().decremented(actor, m.amount));
      break;
    case Mutation::Kind::SetAdd:
      if (value.kind() == LatticeKind::GSet)
        return LatticeValue(value.as_gset().added(m.value));
      if (value.kind() == LatticeKind::OrSet)
        return LatticeValue(value.as_orset().add(actor, m.value));
      break;
    case Mutation::Kind::SetRemove:
      if (value.kind() == LatticeKind::OrSet)
        return LatticeValue(value.as_orset().remove(m.value));
      break;
    case Mutation::Kind::RegisterSet:
      if (value.kind() == LatticeKind::LwwRegister)
        return LatticeValue(value.as_lww().written(actor, m.value));
      break;
  }
  throw std::invalid_argument("mutation '" + std::string(to_string(m.kind)) +
                              "' does not apply to " +
                              std::string(to_string(value.kind())));
}

}  // namespace latticeflow
