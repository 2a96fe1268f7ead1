/**
 * The repository's regression instrument: runs every invariant and property
 * suite over the bundled corpus plus the reflexive polygon sweep. Output is
 * byte-identical across runs and thread counts.
 */
#pragma once

#include <string>

#include "demroot/report.hpp"

namespace demroot {

struct VerifyOptions {
  int jobs = 1;
  unsigned long seed = 12345;
  int box = 3;
  std::string corpus_text;  // optional extra corpus (batch document)
};

struct VerifyResult {
  int polygon_classes = 0;
  long violations = 0;
  std::string text;
};

VerifyResult run_verify(const VerifyOptions& opt);

/// All per-polytope invariants; returns human-readable violation messages
/// (empty means everything holds). Exposed for the test suites.
std::vector<std::string> polytope_property_violations(const LatticePolytope& P,
                                                      unsigned long seed);

}  // namespace demroot
