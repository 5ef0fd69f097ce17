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

#ifndef POSETGAME_RATIONAL_H_
#define POSETGAME_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace posetgame {

using Rational = mpq_class;

// Parses "p/q", integers and decimal literals (with optional exponent)
// exactly: "0.4" yields 2/5. Throws Error(kMalformedInput) otherwise.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is one.
std::string ToString(const Rational& value);

inline bool IsZero(const Rational& value) { return sgn(value) == 0; }
inline bool IsPositive(const Rational& value) { return sgn(value) > 0; }
inline bool IsNegative(const Rational& value) { return sgn(value) < 0; }

}  // namespace posetgame

#endif  // POSETGAME_RATIONAL_H_
