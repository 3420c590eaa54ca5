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
#include "higman/fuel.h"

#include <utility>

namespace higman {

namespace {

std::string ExhaustedMessage(std::uint64_t budget, std::size_t deepest) {
  return "fuel exhausted after " + std::to_string(budget) +
         " steps (deepest recursion " + std::to_string(deepest) + ")";
}

}  // namespace

FuelExhausted::FuelExhausted(std::uint64_t budget, std::size_t deepest,
                             std::vector<std::uint64_t> deepest_path)
    : std::runtime_error(ExhaustedMessage(budget, deepest)),
      budget_(budget),
      deepest_(deepest),
      deepest_path_(std::move(deepest_path)) {}

void Fuel::exhaust() {
  consumed_ = budget_;
  throw FuelExhausted(budget_, deepest_path_.size(), deepest_path_);
}

Fuel::Frame::Frame(Fuel& fuel, std::uint64_t n) : fuel_(fuel) {
  fuel_.path_.push_back(n);
  if (fuel_.path_.size() > fuel_.deepest_path_.size()) {
    fuel_.deepest_path_ = fuel_.path_;
  }
}

Fuel::Frame::~Frame() { fuel_.path_.pop_back(); }

}  // namespace higman
