#pragma once

#include <string>

#include "json.hpp"

namespace iwahori {

struct CommandOptions {
  int radius = 6;
  unsigned long long seed = 0;
  bool include_e7 = false;
  int level = 0;
  int hecke_len = 6;
  int triples = 500;
};

// The body is the deterministic part of a report: two runs with the same
// descriptor and flags produce byte-identical bodies. Timing is kept apart.
struct Report {
  nlohmann::ordered_json body;
  double timing_ms = 0;
  int exit_code = 0;  // 0 pass, 1 check failure, 2 usage/descriptor error
};

// cmd in {describe, verify-coxeter, ftg-identities, ses-check,
// descent-check, hecke-check, emit-presentation}
Report run_command(const std::string& cmd, const std::string& descriptor_text,
                   const CommandOptions& opt = {});

std::string render_text(const Report& r);

}  // namespace iwahori
