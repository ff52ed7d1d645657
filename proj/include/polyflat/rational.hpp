// Copyright 2026 The polyflat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyflat/error.hpp"

namespace polyflat {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always normalized: lowest terms, positive denominator.
/// Expression templates are off so `auto` never captures a lazy expression.
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline bool is_integer(const Rat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// "p/q" with the denominator omitted when it is 1.
inline std::string format_rat(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  }
  return true;
}

}  // namespace detail

/// Accepts "p" or "p/q" with decimal integers and q != 0.
inline Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!detail::is_decimal_integer(num_text) ||
      !detail::is_decimal_integer(den_text) || den_text[0] == '-' ||
      den_text[0] == '+') {
    throw Error(ErrorKind::kParse,
                "malformed rational \"" + std::string(text) + "\"");
  }
  const std::string num_str(num_text.front() == '+' ? num_text.substr(1)
                                                    : num_text);
  BigInt num(num_str);
  BigInt den{std::string(den_text)};
  if (den == 0) {
    throw Error(ErrorKind::kParse,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rat(num, den);
}

}  // namespace polyflat
