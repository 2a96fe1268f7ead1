/**
 * Input parsing (PALP-style matrix documents) and the bundled corpus.
 *
 * A document starts with "r c" (an optional free-form comment may follow on
 * the same line) and continues with r rows of c integers. When r <= c the
 * rows are coordinates (dimension r, c points as columns), otherwise the
 * rows are points of dimension c. Batch files are documents concatenated
 * back to back.
 */
#pragma once

#include <optional>
#include <string>

#include "demroot/polytope.hpp"

namespace demroot {

struct InputDocument {
  enum class Kind { PolytopeVertices, FanRays };
  Kind kind = Kind::PolytopeVertices;
  int dim = 0;
  std::vector<IntVec> points;
  std::string label;
};

InputDocument parse_matrix_document(const std::string& text,
                                    InputDocument::Kind kind = InputDocument::Kind::PolytopeVertices);

std::vector<InputDocument> parse_batch(const std::string& text,
                                       InputDocument::Kind kind = InputDocument::Kind::PolytopeVertices);

/// Vertices of P as a parsable document (rows as points).
std::string emit_vertices(const LatticePolytope& P, const std::string& comment = "");

struct CorpusEntry {
  std::string name;
  LatticePolytope polytope;
  bool expect_reflexive = true;
  // golden values where the sources pin them; absent means property-only
  std::optional<long> roots_all, roots_semisimple, roots_unipotent;
  std::optional<Int> aut_dim;
  std::optional<bool> reductive;
  std::optional<long> lattice_point_count;
};

const std::vector<CorpusEntry>& bundled_corpus();

}  // namespace demroot
