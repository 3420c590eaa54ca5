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
#ifndef HIGMAN_FUEL_H_
#define HIGMAN_FUEL_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace higman {

// Default step budget for a top-level evaluation.
inline constexpr std::uint64_t kDefaultFuel = 100'000'000;

// Thrown when an evaluation runs out of its step budget. Carries the deepest
// recursion path seen, as the list of splice positions taken at each level.
class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted(std::uint64_t budget, std::size_t deepest,
                std::vector<std::uint64_t> deepest_path);

  std::uint64_t budget() const { return budget_; }
  std::size_t deepest_depth() const { return deepest_; }
  const std::vector<std::uint64_t>& deepest_path() const {
    return deepest_path_;
  }

 private:
  std::uint64_t budget_;
  std::size_t deepest_;
  std::vector<std::uint64_t> deepest_path_;
};

// A checked post-condition failed. Signals inputs outside a routine's
// hypotheses, never a recoverable condition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The bound returned by the Higman pipeline did not contain a good pair.
class GuaranteeViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Step budget threaded through every recursor, spec search and counterexample
// call. Not thread-safe; one Fuel per evaluation.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget = kDefaultFuel) : budget_(budget) {}

  Fuel(const Fuel&) = delete;
  Fuel& operator=(const Fuel&) = delete;

  // Spends `units` steps; throws FuelExhausted once the budget is gone.
  void consume(std::uint64_t units = 1) {
    if (units > budget_ - consumed_) exhaust();
    consumed_ += units;
  }

  std::uint64_t budget() const { return budget_; }
  std::uint64_t consumed() const { return consumed_; }
  std::uint64_t remaining() const { return budget_ - consumed_; }

  // RAII marker for one level of recursion entered through position `n`.
  class Frame {
   public:
    Frame(Fuel& fuel, std::uint64_t n);
    ~Frame();
    Frame(const Frame&) = delete;
    Frame& operator=(const Frame&) = delete;

   private:
    Fuel& fuel_;
  };

  std::size_t depth() const { return path_.size(); }
  std::size_t deepest_depth() const { return deepest_path_.size(); }
  const std::vector<std::uint64_t>& deepest_path() const {
    return deepest_path_;
  }

 private:
  [[noreturn]] void exhaust();

  std::uint64_t budget_;
  std::uint64_t consumed_ = 0;
  std::vector<std::uint64_t> path_;
  std::vector<std::uint64_t> deepest_path_;
};

}  // namespace higman

#endif  // HIGMAN_FUEL_H_
