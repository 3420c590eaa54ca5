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
#include "higman/harness.h"

#include <algorithm>
#include <span>
#include <utility>

namespace higman {

using nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace {

BitWord word_from_json(const json& j) {
  if (!j.is_array()) throw SpecError("a word must be an array of 0/1");
  BitWord w;
  for (const json& letter : j) {
    if (!letter.is_number_integer()) {
      throw SpecError("letters must be the integers 0 or 1");
    }
    const auto value = letter.get<std::int64_t>();
    if (value != 0 && value != 1) {
      throw SpecError("letters must be the integers 0 or 1");
    }
    w.push_back(static_cast<Bit>(value));
  }
  return w;
}

std::vector<BitWord> words_from_json(const json& j) {
  if (!j.is_array()) throw SpecError("expected an array of words");
  std::vector<BitWord> out;
  for (const json& w : j) out.push_back(word_from_json(w));
  return out;
}

OrderedJson words_to_json(const std::vector<BitWord>& words) {
  OrderedJson out = OrderedJson::array();
  for (const BitWord& w : words) out.push_back(word_to_json(w));
  return out;
}

BitWord random_word(std::mt19937_64& rng, std::size_t max_word) {
  std::uniform_int_distribution<std::size_t> length(0, max_word);
  std::bernoulli_distribution bit;
  BitWord w(length(rng));
  for (Bit& b : w) b = bit(rng) ? 1 : 0;
  return w;
}

bool extends_badly(const std::vector<BitWord>& list, const BitWord& next) {
  const QuasiOrder<Bit> eq = bit_equality();
  return std::none_of(list.begin(), list.end(), [&](const BitWord& w) {
    return brute_embeds(w, next, eq);
  });
}

void collect_bad(const std::vector<BitWord>& alphabet, std::size_t max_len,
                 std::vector<BitWord>& current,
                 std::vector<std::vector<BitWord>>& out) {
  out.push_back(current);
  if (current.size() == max_len) return;
  for (const BitWord& w : alphabet) {
    if (!extends_badly(current, w)) continue;
    current.push_back(w);
    collect_bad(alphabet, max_len, current, out);
    current.pop_back();
  }
}

}  // namespace

SequenceSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("a spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "prefix" && key != "tail") {
      throw SpecError("unknown spec field '" + key + "'");
    }
  }
  SequenceSpec spec;
  if (j.contains("prefix")) spec.prefix = words_from_json(j.at("prefix"));
  if (!j.contains("tail")) return spec;
  const json& tail = j.at("tail");
  if (tail.is_string()) {
    const std::string name = tail.get<std::string>();
    if (name == "zero") {
      spec.tail = SequenceSpec::Tail::kZero;
    } else if (name == "repeat_last") {
      spec.tail = SequenceSpec::Tail::kRepeatLast;
    } else {
      throw SpecError("unknown tail '" + name + "'");
    }
    return spec;
  }
  if (!tail.is_object() || tail.size() != 1) {
    throw SpecError("a tail object must have exactly one field");
  }
  if (tail.contains("periodic")) {
    spec.tail = SequenceSpec::Tail::kPeriodic;
    spec.block = words_from_json(tail.at("periodic"));
    if (spec.block.empty()) throw SpecError("periodic block is empty");
  } else if (tail.contains("generator")) {
    const json& name = tail.at("generator");
    if (!name.is_string()) throw SpecError("generator name must be a string");
    spec.tail = SequenceSpec::Tail::kGenerator;
    spec.generator = name.get<std::string>();
    if (spec.generator != "empty_words" && spec.generator != "alternating" &&
        spec.generator != "binary_count") {
      throw SpecError("unknown generator '" + spec.generator + "'");
    }
  } else {
    throw SpecError("unknown tail object");
  }
  return spec;
}

SequenceSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  return spec_from_json(j);
}

OrderedJson spec_to_json(const SequenceSpec& spec) {
  OrderedJson out;
  out["prefix"] = words_to_json(spec.prefix);
  switch (spec.tail) {
    case SequenceSpec::Tail::kZero:
      out["tail"] = "zero";
      break;
    case SequenceSpec::Tail::kRepeatLast:
      out["tail"] = "repeat_last";
      break;
    case SequenceSpec::Tail::kPeriodic:
      out["tail"] = {{"periodic", words_to_json(spec.block)}};
      break;
    case SequenceSpec::Tail::kGenerator:
      out["tail"] = {{"generator", spec.generator}};
      break;
  }
  return out;
}

BitWord alternating_word(std::uint64_t n) {
  return n % 2 == 0 ? BitWord{1} : BitWord{0};
}

BitWord binary_count_word(std::uint64_t n) {
  if (n == 0) return {0};
  BitWord w;
  for (; n > 0; n >>= 1) w.push_back(static_cast<Bit>(n & 1));
  std::reverse(w.begin(), w.end());
  return w;
}

WordSeq<Bit> build_sequence(const SequenceSpec& spec) {
  switch (spec.tail) {
    case SequenceSpec::Tail::kZero:
      return WordSeq<Bit>::finite(spec.prefix);
    case SequenceSpec::Tail::kRepeatLast:
      return WordSeq<Bit>::repeat_last(spec.prefix);
    case SequenceSpec::Tail::kPeriodic:
      return WordSeq<Bit>::periodic(spec.prefix, spec.block);
    case SequenceSpec::Tail::kGenerator:
      break;
  }
  if (spec.generator == "empty_words") {
    return WordSeq<Bit>::generator(spec.prefix, spec.generator,
                                   [](std::uint64_t) { return BitWord{}; });
  }
  if (spec.generator == "alternating") {
    return WordSeq<Bit>::generator(spec.prefix, spec.generator,
                                   alternating_word);
  }
  if (spec.generator == "binary_count") {
    return WordSeq<Bit>::generator(spec.prefix, spec.generator,
                                   binary_count_word);
  }
  throw SpecError("unknown generator '" + spec.generator + "'");
}

std::optional<IndexPair> first_good_pair(const WordSeq<Bit>& u,
                                         std::uint64_t horizon) {
  const std::vector<BitWord> words = u.take(horizon);
  const QuasiOrder<Bit> eq = bit_equality();
  for (std::uint64_t j = 1; j < horizon; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (brute_embeds(words[i], words[j], eq)) return IndexPair{i, j};
    }
  }
  return std::nullopt;
}

OrderedJson word_to_json(const BitWord& w) {
  OrderedJson out = OrderedJson::array();
  for (Bit b : w) out.push_back(static_cast<int>(b));
  return out;
}

OrderedJson good_pair_to_json(const GoodPair& pair) {
  return {{"i", pair.i},
          {"j", pair.j},
          {"witness", pair.witness},
          {"bound", pair.bound}};
}

OrderedJson certificate_to_json(const ZLCertificate<BitWord>& cert) {
  OrderedJson steps = OrderedJson::array();
  for (const auto& step : cert.trace.steps) {
    OrderedJson s = {{"state", words_to_json(step.truncated.seq.prefix())},
                     {"threshold", step.truncated.threshold},
                     {"accepted", step.accepted}};
    if (!step.accepted) s["position"] = step.position;
    steps.push_back(std::move(s));
  }
  return {{"bound", cert.n},
          {"steps", std::move(steps)},
          {"limit", words_to_json(cert.v.prefix())},
          {"certificate",
           {{"premise", cert.premise},
            {"N", cert.N_v},
            {"M", cert.M_v},
            {"bad_at_N", cert.bad_at_N},
            {"minimal", cert.minimal},
            {"holds", cert.holds()}}}};
}

std::vector<std::vector<BitWord>> bad_lists(std::size_t max_word,
                                            std::size_t max_len) {
  std::vector<BitWord> alphabet;
  for (std::size_t len = 0; len <= max_word; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      BitWord w(len);
      for (std::size_t k = 0; k < len; ++k) w[k] = (bits >> (len - 1 - k)) & 1;
      alphabet.push_back(std::move(w));
    }
  }
  std::vector<std::vector<BitWord>> out;
  std::vector<BitWord> current;
  collect_bad(alphabet, max_len, current, out);
  return out;
}

std::vector<CorpusEntry> periodic_family(std::mt19937_64& rng,
                                         std::size_t count,
                                         std::size_t max_period,
                                         std::size_t max_word) {
  std::uniform_int_distribution<std::size_t> period(1, max_period);
  std::vector<CorpusEntry> out;
  for (std::size_t c = 0; c < count; ++c) {
    SequenceSpec spec;
    spec.tail = SequenceSpec::Tail::kPeriodic;
    for (std::size_t p = period(rng); p > 0; --p) {
      spec.block.push_back(random_word(rng, max_word));
    }
    out.push_back({"periodic", std::move(spec)});
  }
  return out;
}

std::vector<CorpusEntry> eventually_constant_family(std::mt19937_64& rng,
                                                    std::size_t count,
                                                    std::size_t max_prefix,
                                                    std::size_t max_word) {
  std::uniform_int_distribution<std::size_t> length(1, max_prefix);
  std::vector<CorpusEntry> out;
  for (std::size_t c = 0; c < count; ++c) {
    SequenceSpec spec;
    spec.tail = SequenceSpec::Tail::kRepeatLast;
    for (std::size_t p = length(rng); p > 0; --p) {
      spec.prefix.push_back(random_word(rng, max_word));
    }
    out.push_back({"eventually_constant", std::move(spec)});
  }
  return out;
}

std::vector<CorpusEntry> binary_count_family(std::mt19937_64& rng,
                                             std::size_t count) {
  std::uniform_int_distribution<std::size_t> length(1, 2);
  std::vector<CorpusEntry> out;
  for (std::size_t c = 0; c < count; ++c) {
    SequenceSpec spec;
    spec.tail = SequenceSpec::Tail::kGenerator;
    spec.generator = "binary_count";
    if (c > 0) {
      for (std::size_t p = length(rng); p > 0; --p) {
        spec.prefix.push_back(random_word(rng, 2));
      }
    }
    out.push_back({"binary_count", std::move(spec)});
  }
  return out;
}

std::vector<CorpusEntry> bad_prefix_family(std::mt19937_64& rng,
                                           std::size_t count,
                                           std::size_t max_len) {
  std::vector<std::vector<BitWord>> lists = bad_lists(3, max_len);
  // Longest first, so the family favours the longest bad prefixes.
  std::stable_sort(lists.begin(), lists.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  std::vector<CorpusEntry> out;
  if (lists.empty()) return out;
  const std::size_t pool = std::min<std::size_t>(lists.size(), 4 * count);
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (std::size_t c = 0; c < count; ++c) {
    SequenceSpec spec;
    spec.prefix = lists[pick(rng)];
    switch (kind(rng)) {
      case 0:
        spec.tail = SequenceSpec::Tail::kZero;
        break;
      case 1:
        spec.tail = SequenceSpec::Tail::kRepeatLast;
        break;
      default: {
        spec.tail = SequenceSpec::Tail::kPeriodic;
        std::uniform_int_distribution<std::size_t> period(1, 3);
        for (std::size_t p = period(rng); p > 0; --p) {
          spec.block.push_back(random_word(rng, 3));
        }
      }
    }
    out.push_back({"bad_prefix", std::move(spec)});
  }
  return out;
}

std::vector<CorpusEntry> higman_corpus(std::uint64_t seed,
                                       const CorpusSizes& sizes) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<CorpusEntry>> families;
  families.push_back(periodic_family(rng, sizes.periodic, 4, 5));
  families.push_back(
      eventually_constant_family(rng, sizes.eventually_constant, 5, 5));
  families.push_back(binary_count_family(rng, sizes.binary_count));
  families.push_back(bad_prefix_family(rng, sizes.bad_prefix, 6));

  std::vector<CorpusEntry> out;
  std::vector<std::size_t> next(families.size(), 0);
  std::size_t total = 0;
  for (const auto& f : families) total += f.size();
  // Each family is drawn in proportion to its size.
  while (out.size() < total) {
    std::size_t best = 0;
    double lag = -1;
    for (std::size_t f = 0; f < families.size(); ++f) {
      if (next[f] == families[f].size()) continue;
      const double share = static_cast<double>(families[f].size()) / total;
      const double behind = share * (out.size() + 1) - next[f];
      if (behind > lag) {
        lag = behind;
        best = f;
      }
    }
    out.push_back(families[best][next[best]++]);
  }
  return out;
}

}  // namespace higman
