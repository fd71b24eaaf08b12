// Copyright 2026 The NCG Workbench Authors
//
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

#ifndef NCG_EXTENDED_H_
#define NCG_EXTENDED_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace ncg {

// A value of T extended with +infinity and -infinity. Infinity is a tag,
// never a sentinel, and absorbs finite operands in arithmetic.
template <typename T>
class Extended {
 public:
  enum class Kind : std::uint8_t { kNegInfinite, kFinite, kInfinite };

  constexpr Extended() : kind_(Kind::kFinite), value_() {}
  constexpr Extended(T value) : kind_(Kind::kFinite), value_(value) {}  // NOLINT

  static constexpr Extended infinite() { return Extended(Kind::kInfinite); }
  static constexpr Extended neg_infinite() {
    return Extended(Kind::kNegInfinite);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_infinite() const { return kind_ == Kind::kInfinite; }
  constexpr bool is_neg_infinite() const {
    return kind_ == Kind::kNegInfinite;
  }

  const T& value() const {
    if (!is_finite()) throw std::logic_error("value() of an infinite quantity");
    return value_;
  }

  template <typename U>
  Extended<U> as() const {
    switch (kind_) {
      case Kind::kInfinite:
        return Extended<U>::infinite();
      case Kind::kNegInfinite:
        return Extended<U>::neg_infinite();
      case Kind::kFinite:
        break;
    }
    return Extended<U>(U(value_));
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.is_finite() && b.is_finite()) return Extended(a.value_ + b.value_);
    if ((a.is_infinite() && b.is_neg_infinite()) ||
        (a.is_neg_infinite() && b.is_infinite())) {
      throw std::logic_error("infinity minus infinity");
    }
    return a.is_finite() ? b : a;
  }

  friend Extended operator-(const Extended& a) {
    switch (a.kind_) {
      case Kind::kInfinite:
        return neg_infinite();
      case Kind::kNegInfinite:
        return infinite();
      case Kind::kFinite:
        break;
    }
    return Extended(-a.value_);
  }

  friend Extended operator-(const Extended& a, const Extended& b) {
    return a + (-b);
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend bool operator!=(const Extended& a, const Extended& b) {
    return !(a == b);
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.is_finite() && a.value_ < b.value_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) {
    return !(b < a);
  }
  friend bool operator>=(const Extended& a, const Extended& b) {
    return !(a < b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& x) {
    switch (x.kind_) {
      case Kind::kInfinite:
        return os << "inf";
      case Kind::kNegInfinite:
        return os << "-inf";
      case Kind::kFinite:
        break;
    }
    return os << x.value_;
  }

 private:
  explicit constexpr Extended(Kind kind) : kind_(kind), value_() {}

  Kind kind_;
  T value_;
};

// Hop counts and hop-count differences.
using Hops = Extended<std::int64_t>;

}  // namespace ncg

#endif  // NCG_EXTENDED_H_
