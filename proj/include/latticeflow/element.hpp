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

#ifndef LATTICEFLOW_ELEMENT_HPP_
#define LATTICEFLOW_ELEMENT_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

namespace latticeflow {

// The element universe for sets and registers: integer, float, string, or a
// pair of elements. Floats compare bitwise so that equality stays exact and
// set membership stays decidable; the cross-kind order is by kind rank, then
// value. Elements are immutable; pairs share their children.
class Element {
 public:
  enum class Kind { Int = 0, F64 = 1, Str = 2, Pair = 3 };

  Element() : repr_(std::int64_t{0}) {}

  static Element of_int(std::int64_t v) { return Element(Repr(v)); }
  static Element of_f64(double v) { return Element(Repr(v)); }
  static Element of_string(std::string v) { return Element(Repr(std::move(v))); }
  static Element pair(Element first, Element second);

  Kind kind() const { return static_cast<Kind>(repr_.index()); }
  bool is_numeric() const { return kind() == Kind::Int || kind() == Kind::F64; }

  std::int64_t as_int() const;       // throws unless Int
  double as_f64() const;             // throws unless F64
  double numeric() const;            // Int or F64 widened; throws otherwise
  const std::string& as_string() const;
  const Element& first() const;      // throws unless Pair
  const Element& second() const;

  friend bool operator==(const Element& a, const Element& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  // Literal form: 5, 9.5, "text", pair(5, "x"). Floats always carry a '.'
  // or exponent so the literal parses back to the same kind.
  std::string to_literal() const;

 private:
  struct PairBox {
    std::shared_ptr<const Element> first;
    std::shared_ptr<const Element> second;
  };
  using Repr = std::variant<std::int64_t, double, std::string, PairBox>;

  explicit Element(Repr r) : repr_(std::move(r)) {}

  Repr repr_;
};

// Total order over doubles: numeric order with ties (and NaNs) broken by bit
// pattern, so -0.0 < 0.0 and every NaN payload is distinct. Keeps the order
// consistent with bitwise equality.
std::strong_ordering f64_total_order(double a, double b);

// Shortest round-trip decimal form; integral-valued doubles keep a ".0"
// suffix so the literal stays unambiguously a float.
std::string f64_to_string(double v);

// Parses what to_literal produces. Throws std::invalid_argument on junk.
Element parse_element_literal(const std::string& text);

}  // namespace latticeflow

#endif  // LATTICEFLOW_ELEMENT_HPP_
