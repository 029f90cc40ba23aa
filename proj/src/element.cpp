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

#include "latticeflow/element.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace latticeflow {

Element Element::pair(Element first, Element second) {
  PairBox box{std::make_shared<const Element>(std::move(first)),
              std::make_shared<const Element>(std::move(second))};
  return Element(Repr(std::move(box)));
}

std::int64_t Element::as_int() const {
  if (kind() != Kind::Int) throw std::invalid_argument("element is not an int");
  return std::get<std::int64_t>(repr_);
}

double Element::as_f64() const {
  if (kind() != Kind::F64) throw std::invalid_argument("element is not a float");
  return std::get<double>(repr_);
}

double Element::numeric() const {
  switch (kind()) {
    case Kind::Int:
      return static_cast<double>(std::get<std::int64_t>(repr_));
    case Kind::F64:
      return std::get<double>(repr_);
    default:
      throw std::invalid_argument("element is not numeric");
  }
}

const std::string& Element::as_string() const {
  if (kind() != Kind::Str) throw std::invalid_argument("element is not a string");
  return std::get<std::string>(repr_);
}

const Element& Element::first() const {
  if (kind() != Kind::Pair) throw std::invalid_argument("element is not a pair");
  return *std::get<PairBox>(repr_).first;
}

const Element& Element::second() const {
  if (kind() != Kind::Pair) throw std::invalid_argument("element is not a pair");
  return *std::get<PairBox>(repr_).second;
}

std::strong_ordering f64_total_order(double a, double b) {
  const auto abits = std::bit_cast<std::uint64_t>(a);
  const auto bbits = std::bit_cast<std::uint64_t>(b);
  const bool a_nan = std::isnan(a);
  const bool b_nan = std::isnan(b);
  if (a_nan || b_nan) {
    if (a_nan != b_nan) return a_nan ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    return abits <=> bbits;
  }
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return abits <=> bbits;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.repr_.index() != b.repr_.index())
    return a.repr_.index() <=> b.repr_.index();
  switch (a.kind()) {
    case Element::Kind::Int:
      return std::get<std::int64_t>(a.repr_) <=> std::get<std::int64_t>(b.repr_);
    case Element::Kind::F64:
      return f64_total_order(std::get<double>(a.repr_),
                             std::get<double>(b.repr_));
    case Element::Kind::Str:
      return std::get<std::string>(a.repr_) <=> std::get<std::string>(b.repr_);
    case Element::Kind::Pair: {
      const auto fst = a.first() <=> b.first();
      if (fst != std::strong_ordering::equal) return fst;
      return a.second() <=> b.second();
    }
  }
  return std::strong_ordering::equal;  // unreachable
}

std::string f64_to_string(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

std::string Element::to_literal() const {
  switch (kind()) {
    case Kind::Int:
      return std::to_string(std::get<std::int64_t>(repr_));
    case Kind::F64:
      return f64_to_string(std::get<double>(repr_));
    case Kind::Str: {
      std::string out = "\"";
      for (char c : std::get<std::string>(repr_)) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return out;
    }
    case Kind::Pair:
      return "pair(" + first().to_literal() + ", " + second().to_literal() + ")";
  }
  return {};
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("bad element literal '" + text + "': " + what);
  }
};

Element parse_one(Cursor& cur) {
  cur.skip_ws();
  if (cur.pos >= cur.text.size()) cur.fail("empty literal");
  const char c = cur.text[cur.pos];

  if (c == '"') {
    ++cur.pos;
    std::string out;
    while (cur.pos < cur.text.size() && cur.text[cur.pos] != '"') {
      char ch = cur.text[cur.pos];
      if (ch == '\\' && cur.pos + 1 < cur.text.size()) {
        ++cur.pos;
        ch = cur.text[cur.pos];
      }
      out += ch;
      ++cur.pos;
    }
    if (!cur.consume('"')) cur.fail("unterminated string");
    return Element::of_string(std::move(out));
  }

  // Bare token: number, pair(...), inf/nan, or an unquoted word.
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() && cur.text[cur.pos] != ',' &&
         cur.text[cur.pos] != ')' && cur.text[cur.pos] != '(')
    ++cur.pos;
  std::string tok = cur.text.substr(start, cur.pos - start);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();

  if (tok == "pair" && cur.peek() == '(') {
    cur.consume('(');
    Element first = parse_one(cur);
    if (!cur.consume(',')) cur.fail("expected ',' in pair");
    Element second = parse_one(cur);
    if (!cur.consume(')')) cur.fail("expected ')' after pair");
    return Element::pair(std::move(first), std::move(second));
  }
  if (tok.empty()) cur.fail("expected a value");
  if (tok == "nan") return Element::of_f64(std::nan(""));
  if (tok == "inf") return Element::of_f64(HUGE_VAL);
  if (tok == "-inf") return Element::of_f64(-HUGE_VAL);

  const bool int_like =
      tok.find_first_not_of("0123456789+-") == std::string::npos &&
      tok.find_first_of("0123456789") != std::string::npos;
  if (int_like) {
    std::int64_t v = 0;
    const char* b = tok.data() + (tok[0] == '+' ? 1 : 0);
    const auto res = std::from_chars(b, tok.data() + tok.size(), v);
    if (res.ec == std::errc() && res.ptr == tok.data() + tok.size())
      return Element::of_int(v);
    cur.fail("bad integer '" + tok + "'");
  }
  if (tok.find_first_of("0123456789") != std::string::npos &&
      tok.find_first_not_of("0123456789+-.eE") == std::string::npos) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() + tok.size() && errno == 0)
      return Element::of_f64(v);
  }
  // Unquoted word: treated as a string for config convenience.
  if (tok.find_first_not_of(
          "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-.") ==
      std::string::npos)
    return Element::of_string(std::move(tok));
  cur.fail("unrecognized token '" + tok + "'");
}

}  // namespace

Element parse_element_literal(const std::string& text) {
  Cursor cur{text};
  Element e = parse_one(cur);
  if (!cur.at_end())
    throw std::invalid_argument("bad element literal '" + text +
                                "': trailing characters");
  return e;
}

}  // namespace latticeflow
