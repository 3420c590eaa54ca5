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
#include "higman/orders.h"

#include <stdexcept>

namespace higman {

QuasiOrder<Bit> bit_equality() {
  return [](const Bit& a, const Bit& b) { return a == b; };
}

BitWord parse_bits(const std::string& text) {
  BitWord w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("not a bit string: " + text);
    }
    w.push_back(static_cast<Bit>(ch - '0'));
  }
  return w;
}

std::string format_bits(const BitWord& w) {
  std::string out;
  out.reserve(w.size());
  for (Bit b : w) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace higman
