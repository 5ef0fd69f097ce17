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

#include "gtest/gtest.h"
#include "posetgame/errors.h"

namespace posetgame {
namespace {

TEST(ParseRationalTest, Forms) {
  EXPECT_EQ(ParseRational("0.4"), Rational(2, 5));
  EXPECT_EQ(ParseRational("3/6"), Rational(1, 2));
  EXPECT_EQ(ParseRational("-7"), Rational(-7));
  EXPECT_EQ(ParseRational("1e-2"), Rational(1, 100));
  EXPECT_EQ(ParseRational("-2.5E1"), Rational(-25));
  EXPECT_EQ(ParseRational(".5"), Rational(1, 2));
}

TEST(ParseRationalTest, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/", "/2", "0x10"}) {
    EXPECT_THROW(ParseRational(bad), Error) << bad;
  }
}

TEST(ToStringTest, Canonical) {
  EXPECT_EQ(ToString(Rational(4, 5)), "4/5");
  EXPECT_EQ(ToString(Rational(6, 3)), "2");
  EXPECT_EQ(ToString(Rational(-1, 10)), "-1/10");
  EXPECT_EQ(ParseRational(ToString(Rational(-22, 7))), Rational(-22, 7));
}

}  // namespace
}  // namespace posetgame
