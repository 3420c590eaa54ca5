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
// Sequence specs, brute-force oracles and corpus generators for the boolean
// Higman pipeline.
//
// A spec is JSON of the form
//
//   {"prefix": [[1, 0], [], [1]], "tail": <tail>}
//
// where <tail> is "zero", "repeat_last", {"periodic": [[0], [1, 1]]} or
// {"generator": "empty_words" | "alternating" | "binary_count"}. Generators
// are indexed by absolute position, so a prefix overrides their first
// entries.

#ifndef HIGMAN_HARNESS_H_
#define HIGMAN_HARNESS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "higman/higman.h"
#include "higman/orders.h"
#include "json.hpp"

namespace higman {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SequenceSpec {
  enum class Tail { kZero, kRepeatLast, kPeriodic, kGenerator };

  std::vector<BitWord> prefix;
  Tail tail = Tail::kZero;
  std::vector<BitWord> block;  // kPeriodic
  std::string generator;       // kGenerator

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

// Throws SpecError on anything that does not describe a sequence of 0/1
// words.
SequenceSpec spec_from_json(const nlohmann::json& j);
SequenceSpec parse_spec(const std::string& text);
nlohmann::ordered_json spec_to_json(const SequenceSpec& spec);

WordSeq<Bit> build_sequence(const SequenceSpec& spec);

// Word n of the named generators.
BitWord alternating_word(std::uint64_t n);
BitWord binary_count_word(std::uint64_t n);

// The first pair in (j, then i) order with i < j < horizon and u_i ≼* u_j,
// decided by brute_embeds.
std::optional<IndexPair> first_good_pair(const WordSeq<Bit>& u,
                                         std::uint64_t horizon);

nlohmann::ordered_json word_to_json(const BitWord& w);
nlohmann::ordered_json good_pair_to_json(const GoodPair& pair);
// The learning trace of the realizer run and the evaluated certificate.
nlohmann::ordered_json certificate_to_json(
    const ZLCertificate<BitWord>& cert);

struct CorpusEntry {
  std::string family;
  SequenceSpec spec;
};

// Every bad list of boolean words of length ≤ max_word with at most
// max_len entries, in depth-first order. Badness is decided by brute_embeds.
std::vector<std::vector<BitWord>> bad_lists(std::size_t max_word,
                                            std::size_t max_len);

// Generator families. Word lengths are uniform on 0..max_word.
std::vector<CorpusEntry> periodic_family(std::mt19937_64& rng,
                                         std::size_t count,
                                         std::size_t max_period,
                                         std::size_t max_word);
std::vector<CorpusEntry> eventually_constant_family(std::mt19937_64& rng,
                                                    std::size_t count,
                                                    std::size_t max_prefix,
                                                    std::size_t max_word);
// The plain generator followed by variants with short random prefixes.
std::vector<CorpusEntry> binary_count_family(std::mt19937_64& rng,
                                             std::size_t count);
// Long bad lists from bad_lists(3, max_len), each followed by a zero,
// repeat_last or periodic tail.
std::vector<CorpusEntry> bad_prefix_family(std::mt19937_64& rng,
                                           std::size_t count,
                                           std::size_t max_len);

struct CorpusSizes {
  std::size_t periodic = 200;
  std::size_t eventually_constant = 150;
  std::size_t binary_count = 4;
  std::size_t bad_prefix = 146;
};

// All four families, interleaved so that any initial segment samples each.
std::vector<CorpusEntry> higman_corpus(std::uint64_t seed,
                                       const CorpusSizes& sizes = {});

}  // namespace higman

#endif  // HIGMAN_HARNESS_H_
