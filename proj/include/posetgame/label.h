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

#ifndef POSETGAME_LABEL_H_
#define POSETGAME_LABEL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace posetgame {

// Opaque element or node id. Integer ids order numerically and before
// string ids; string ids order lexicographically.
class Label {
 public:
  Label() = default;

  static Label Integer(int64_t value) {
    Label l;
    l.is_integer_ = true;
    l.value_ = value;
    l.text_ = std::to_string(value);
    return l;
  }

  static Label String(std::string text) {
    Label l;
    l.text_ = std::move(text);
    return l;
  }

  bool is_integer() const { return is_integer_; }
  int64_t integer() const { return value_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const Label& a, const Label& b) {
    return a.is_integer_ == b.is_integer_ && a.value_ == b.value_ &&
           a.text_ == b.text_;
  }

  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.is_integer_ != b.is_integer_) {
      return a.is_integer_ ? std::strong_ordering::less
                           : std::strong_ordering::greater;
    }
    if (a.is_integer_) return a.value_ <=> b.value_;
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  bool is_integer_ = false;
  int64_t value_ = 0;
  std::string text_;
};

}  // namespace posetgame

#endif  // POSETGAME_LABEL_H_
