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
#include "higman/cli.h"

#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "higman/harness.h"
#include "higman/higman.h"

namespace higman {
namespace {

using json = nlohmann::ordered_json;

SequenceSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

json pair_json(const std::optional<IndexPair>& pair) {
  if (!pair) return nullptr;
  return {{"i", pair->first}, {"j", pair->second}};
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Good pairs in sequences of boolean words", "higman"};
  app.require_subcommand(1);
  std::uint64_t budget = kDefaultFuel;
  app.add_option("--fuel", budget, "Step budget for one evaluation")
      ->capture_default_str();

  std::string spec_path;
  CLI::App* find = app.add_subcommand("find-pair", "First good pair below Φ");
  find->add_option("spec", spec_path, "Sequence spec (JSON)")->required();
  CLI::App* bound = app.add_subcommand("bound", "The bound Φ");
  bound->add_option("spec", spec_path, "Sequence spec (JSON)")->required();
  CLI::App* trace = app.add_subcommand("trace", "Learning trace");
  trace->add_option("spec", spec_path, "Sequence spec (JSON)")->required();
  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force search");
  oracle->add_option("spec", spec_path, "Sequence spec (JSON)")->required();
  std::uint64_t horizon = 0;
  oracle->add_option("--horizon", horizon, "Search below this index")
      ->required();
  std::string a, b;
  CLI::App* embed = app.add_subcommand("check-embed", "Embed a into b");
  embed->add_option("a", a, "Bit string")->required();
  embed->add_option("b", b, "Bit string")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    Fuel fuel(budget);
    const HigmanInstance<Bit> inst = boolean_instance();
    if (*embed) {
      const BitWord wa = parse_bits(a);
      const BitWord wb = parse_bits(b);
      auto witness = embeds(wa, wb, bit_equality());
      if (witness && !brute_embeds(wa, wb, bit_equality())) {
        throw ContractViolation("greedy and brute-force embedding disagree");
      }
      json map = nullptr;
      if (witness) {
        map = json::object();
        for (std::size_t i = 0; i < witness->size(); ++i) {
          map[std::to_string(i)] = (*witness)[i];
        }
      }
      out << map.dump() << "\n";
      return kExitOk;
    }
    const WordSeq<Bit> u = build_sequence(load_spec(spec_path));
    if (*find) {
      out << good_pair_to_json(find_good_pair(u, inst, fuel)).dump() << "\n";
    } else if (*bound) {
      out << phi_bound(u, inst, fuel) << "\n";
    } else if (*trace) {
      out << certificate_to_json(higman_certificate(u, inst, fuel)).dump()
          << "\n";
    } else if (*oracle) {
      out << pair_json(first_good_pair(u, horizon)).dump() << "\n";
    }
    return kExitOk;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const FuelExhausted& e) {
    err << "error: " << e.what() << "\n";
    err << "deepest recursion path:";
    for (std::uint64_t n : e.deepest_path()) err << " " << n;
    err << "\n";
    return kExitFuel;
  } catch (const GuaranteeViolated& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuarantee;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace higman
