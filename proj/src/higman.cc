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
#include "higman/higman.h"

namespace higman {

HigmanInstance<Bit> boolean_instance() {
  HigmanInstance<Bit> inst;
  inst.base = bit_equality();
  inst.G = [](const InfSeq<Bit>& x, const Omega& omega, Fuel& fuel) {
    return swqo_bool_realizer(x, omega, fuel);
  };
  return inst;
}

HigmanInstance<Unary> unary_instance() {
  HigmanInstance<Unary> inst;
  inst.base = [](const Unary&, const Unary&) { return true; };
  inst.G = [](const InfSeq<Unary>&, const Omega&, Fuel&) {
    return IndexMap::identity();
  };
  return inst;
}

UnaryWord unary_word(std::size_t length) { return UnaryWord(length); }

}  // namespace higman
