/**
 * End-to-end analysis pipeline and deterministic report emission. Integers
 * are serialized as decimal strings so arbitrary-precision values survive
 * JSON consumers; arrays are emitted in sorted order and two runs produce
 * byte-identical output.
 */
#pragma once

#include "demroot/criteria.hpp"
#include "demroot/io.hpp"

namespace demroot {

struct AnalysisReport {
  std::string input;
  int dim = 0;
  bool from_rays = false;
  std::optional<bool> reflexive;  // absent for fan-rays input

  RootSet roots;
  DegreeClassData degree_classes;
  CriteriaReport criteria;
  AutSummary aut;

  std::optional<std::vector<Int>> projective_factors;
  std::optional<Decomposition> central;
  std::optional<SpanCheck> span;
  BoundReport bounds;

  std::vector<std::string> violations;
};

/// Full pipeline on a parsed document. Theorem violations are collected in
/// the report; precondition failures propagate as errors.
AnalysisReport analyze_input(const InputDocument& doc);

AnalysisReport analyze_polytope(const LatticePolytope& P, const std::string& label);
AnalysisReport analyze_rays(const RaySet& rays, const std::string& label);

std::string emit_report(const AnalysisReport& rep);       // JSON
std::string emit_report_text(const AnalysisReport& rep);  // terse summary

}  // namespace demroot
