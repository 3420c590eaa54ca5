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
// The `higman` command line tool.

#ifndef HIGMAN_CLI_H_
#define HIGMAN_CLI_H_

#include <ostream>

namespace higman {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitFuel = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitGuarantee = 4;

// Subcommands:
//   find-pair <spec.json>            good pair below Φ, as JSON
//   bound <spec.json>                Φ only
//   trace <spec.json>                learning trace of the realizer run
//   oracle <spec.json> --horizon N   brute-force first good pair below N
//   check-embed <a> <b>              embedding of bit string a into b
// with a global --fuel N. Exit codes are the kExit* constants above.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace higman

#endif  // HIGMAN_CLI_H_
