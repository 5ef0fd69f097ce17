// Copyright 2026 The posetgame Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posetgame/rational.h"

#include <cctype>
#include <string>

#include "posetgame/errors.h"

namespace posetgame {
namespace {

[[noreturn]] void Malformed(std::string_view text) {
  throw Error(ErrorCode::kMalformedInput,
              "not a rational number: '" + std::string(text) + "'");
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) Malformed(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  const size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Malformed(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) Malformed(text);
    result = Rational(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    const size_t e = s.find_first_of("eE");
    if (e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' ||
                                exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!AllDigits(exp_text) || exp_text.size() > 6) Malformed(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    const size_t dot = mantissa.find('.');
    if (dot != std::string_view::npos) {
      std::string_view int_part = mantissa.substr(0, dot);
      std::string_view frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) Malformed(text);
      if (!int_part.empty() && !AllDigits(int_part)) Malformed(text);
      if (!frac_part.empty() && !AllDigits(frac_part)) Malformed(text);
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      if (!AllDigits(mantissa)) Malformed(text);
      digits = std::string(mantissa);
    }
    mpz_class value(digits, 10);
    if (exponent >= 0) {
      result = Rational(value * PowerOfTen(exponent));
    } else {
      result = Rational(value, PowerOfTen(-exponent));
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

std::string ToString(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

}  // namespace posetgame
