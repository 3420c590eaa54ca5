/* Copyright 2026 The Higman Extract Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
// Finitely described total infinite sequences, and the truncation operators
// ext and spec used by the explicitly controlled recursor.
//
// A sequence is an explicit prefix followed by a tail rule. Sequences whose
// tail is ZeroTail are "finitely supported": everything past the prefix is the
// canonical zero of the element type. The recursors only ever compare and
// cache finitely supported sequences.

#ifndef HIGMAN_SEQ_H_
#define HIGMAN_SEQ_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "higman/fuel.h"

namespace higman {

// The designated element 0_T. Value-initialisation gives 0 for integers,
// false for booleans and the empty word for vectors; function types
// specialise this to the constant-zero function.
template <class T>
struct CanonicalZero {
  static T value() { return T{}; }
};

template <class R, class... Args>
struct CanonicalZero<std::function<R(Args...)>> {
  static std::function<R(Args...)> value() {
    return [](Args...) { return CanonicalZero<R>::value(); };
  }
};

template <class T>
T zero_of() {
  return CanonicalZero<T>::value();
}

struct ZeroTail {};
struct RepeatLastTail {};

template <class T>
struct PeriodicTail {
  std::vector<T> block;
};

// A pure index rule, called on every read. `start` is the rule index of the
// first element after the prefix; freshly built generators use
// start = |prefix|, so the rule sees absolute positions.
template <class T>
struct GeneratorTail {
  std::string name;
  std::function<T(std::uint64_t)> rule;
  std::uint64_t start = 0;
};

template <class T>
class InfSeq {
 public:
  using Tail =
      std::variant<ZeroTail, RepeatLastTail, PeriodicTail<T>, GeneratorTail<T>>;

  // The all-zero sequence.
  InfSeq() = default;

  static InfSeq zeros() { return InfSeq(); }

  static InfSeq finite(std::vector<T> prefix) {
    return InfSeq(std::move(prefix), ZeroTail{});
  }

  static InfSeq repeat_last(std::vector<T> prefix) {
    if (prefix.empty()) return InfSeq();
    return InfSeq(std::move(prefix), RepeatLastTail{});
  }

  static InfSeq periodic(std::vector<T> prefix, std::vector<T> block) {
    if (block.empty()) {
      throw std::invalid_argument("periodic tail needs a non-empty block");
    }
    return InfSeq(std::move(prefix), PeriodicTail<T>{std::move(block)});
  }

  static InfSeq generator(std::vector<T> prefix, std::string name,
                          std::function<T(std::uint64_t)> rule) {
    if (!rule) throw std::invalid_argument("generator tail needs a rule");
    const std::uint64_t start = prefix.size();
    return InfSeq(std::move(prefix),
                  GeneratorTail<T>{std::move(name), std::move(rule), start});
  }

  T at(std::uint64_t n) const {
    const std::vector<T>& prefix = this->prefix();
    if (n < prefix.size()) return prefix[n];
    const std::uint64_t offset = n - prefix.size();
    return std::visit(
        [&](const auto& tail) -> T {
          using Kind = std::decay_t<decltype(tail)>;
          if constexpr (std::is_same_v<Kind, ZeroTail>) {
            return zero_of<T>();
          } else if constexpr (std::is_same_v<Kind, RepeatLastTail>) {
            return prefix.back();
          } else if constexpr (std::is_same_v<Kind, PeriodicTail<T>>) {
            return tail.block[offset % tail.block.size()];
          } else {
            return tail.rule(tail.start + offset);
          }
        },
        tail());
  }

  T operator[](std::uint64_t n) const { return at(n); }

  // The initial segment u|n.
  std::vector<T> take(std::uint64_t n) const {
    std::vector<T> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(at(i));
    return out;
  }

  const std::vector<T>& prefix() const {
    return prefix_ ? *prefix_ : empty_prefix();
  }
  const Tail& tail() const { return tail_ ? *tail_ : zero_tail(); }

  bool finitely_supported() const {
    return std::holds_alternative<ZeroTail>(tail());
  }

  // Every index at or past the bound evaluates to 0_T.
  std::uint64_t support_bound() const {
    if (!finitely_supported()) {
      throw std::logic_error("support_bound needs a zero tail");
    }
    return prefix().size();
  }

  std::string tail_name() const {
    return std::visit(
        [](const auto& tail) -> std::string {
          using Kind = std::decay_t<decltype(tail)>;
          if constexpr (std::is_same_v<Kind, ZeroTail>) {
            return "zero";
          } else if constexpr (std::is_same_v<Kind, RepeatLastTail>) {
            return "repeat_last";
          } else if constexpr (std::is_same_v<Kind, PeriodicTail<T>>) {
            return "periodic";
          } else {
            return "generator:" + tail.name;
          }
        },
        tail());
  }

  // u|n * v, keeping v's tail rule aligned with its own indices.
  static InfSeq splice(const InfSeq& u, std::uint64_t n, const InfSeq& v) {
    std::vector<T> prefix = u.take(n);
    prefix.insert(prefix.end(), v.prefix().begin(), v.prefix().end());
    InfSeq out(std::move(prefix), v.tail_);
    if (std::holds_alternative<RepeatLastTail>(v.tail()) &&
        v.prefix().empty()) {
      out.tail_ = nullptr;
    }
    return out;
  }

 private:
  InfSeq(std::vector<T> prefix, Tail tail)
      : InfSeq(std::move(prefix),
               std::holds_alternative<ZeroTail>(tail)
                   ? nullptr
                   : std::make_shared<const Tail>(std::move(tail))) {}

  InfSeq(std::vector<T> prefix, std::shared_ptr<const Tail> tail)
      : tail_(std::move(tail)) {
    if (!prefix.empty()) {
      prefix_ = std::make_shared<const std::vector<T>>(std::move(prefix));
    }
  }

  static const std::vector<T>& empty_prefix() {
    static const std::vector<T> empty;
    return empty;
  }
  static const Tail& zero_tail() {
    static const Tail zero = ZeroTail{};
    return zero;
  }

  // Shared and immutable, so copies are cheap. Null means empty prefix and
  // zero tail respectively.
  std::shared_ptr<const std::vector<T>> prefix_;
  std::shared_ptr<const Tail> tail_;
};

// ext(α, m): α below m, canonical zero from m on.
template <class T>
InfSeq<T> ext(const InfSeq<T>& alpha, std::uint64_t m) {
  return InfSeq<T>::finite(alpha.take(m));
}

// The prefix of a finitely supported sequence with trailing zeros removed.
// Two finitely supported sequences are equal iff their keys are equal.
template <class T>
std::vector<T> support_key(const InfSeq<T>& s) {
  if (!s.finitely_supported()) {
    throw std::logic_error("support_key needs a zero tail");
  }
  std::vector<T> key = s.prefix();
  const T zero = zero_of<T>();
  while (!key.empty() && key.back() == zero) key.pop_back();
  return key;
}

// Pointwise equality, defined only between finitely supported sequences.
template <class T>
bool same_sequence(const InfSeq<T>& a, const InfSeq<T>& b) {
  return support_key(a) == support_key(b);
}

template <class T>
struct SpecResult {
  InfSeq<T> seq;
  std::uint64_t threshold = 0;
};

// spec(α, F): ext(α, m0) for the least m0 with F(ext(α, m0)) < m0. Probes
// m = 0, 1, 2, ... in order, one fuel unit per probe.
template <class T, class Control>
SpecResult<T> spec(const InfSeq<T>& alpha, const Control& control,
                   Fuel& fuel) {
  for (std::uint64_t m = 0;; ++m) {
    fuel.consume();
    InfSeq<T> candidate = ext(alpha, m);
    if (control(candidate) < m) return {std::move(candidate), m};
  }
}

}  // namespace higman

#endif  // HIGMAN_SEQ_H_
