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

#include "latticeflow/lattices.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace latticeflow {

GCounter GCounter::incremented(const ReplicaId& r, std::uint64_t amount) const {
  if (amount < 1)
    throw std::invalid_argument("counter increments must be >= 1");
  GCounter out = *this;
  out.entries_[r] += amount;
  return out;
}

GCounter GCounter::joined(const GCounter& other) const {
  GCounter out = *this;
  for (const auto& [r, n] : other.entries_) {
    auto [it, inserted] = out.entries_.emplace(r, n);
    if (!inserted) it->second = std::max(it->second, n);
  }
  return out;
}

std::uint64_t GCounter::value() const {
  std::uint64_t total = 0;
  for (const auto& [r, n] : entries_) total += n;
  return total;
}

PnCounter PnCounter::incremented(const ReplicaId& r, std::uint64_t amount) const {
  PnCounter out = *this;
  out.positive_ = positive_.incremented(r, amount);
  return out;
}

PnCounter PnCounter::decremented(const ReplicaId& r, std::uint64_t amount) const {
  PnCounter out = *this;
  out.negative_ = negative_.incremented(r, amount);
  return out;
}

PnCounter PnCounter::joined(const PnCounter& other) const {
  PnCounter out;
  out.positive_ = positive_.joined(other.positive_);
  out.negative_ = negative_.joined(other.negative_);
  return out;
}

std::int64_t PnCounter::value() const {
  return static_cast<std::int64_t>(positive_.value()) -
         static_cast<std::int64_t>(negative_.value());
}

GSet GSet::added(Element e) const {
  GSet out = *this;
  out.elements_.insert(std::move(e));
  return out;
}

GSet GSet::joined(const GSet& other) const {
  GSet out = *this;
  out.elements_.insert(other.elements_.begin(), other.elements_.end());
  return out;
}

const Element& LwwRegister::value() const {
  if (!value_) throw std::invalid_argument("register is unset");
  return *value_;
}

LwwRegister LwwRegister::written(const ReplicaId& r, Element v) const {
  LwwRegister out;
  out.counter_ = counter_ + 1;
  out.replica_ = r;
  out.value_ = std::move(v);
  return out;
}

LwwRegister LwwRegister::joined(const LwwRegister& other) const {
  const auto key = [](const LwwRegister& reg) {
    return std::tie(reg.counter_, reg.replica_, reg.value_);
  };
  return key(*this) < key(other) ? other : *this;
}

LwwRegister LwwRegister::from_parts(std::uint64_t counter, ReplicaId replica,
                                    std::optional<Element> value) {
  LwwRegister out;
  if (!value) return out;  // unset registers normalize to bottom
  if (counter == 0)
    throw std::invalid_argument("a written register needs counter >= 1");
  out.counter_ = counter;
  out.replica_ = std::move(replica);
  out.value_ = std::move(value);
  return out;
}

}  // namespace latticeflow
