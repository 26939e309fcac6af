// io.hpp -- the workbench document format: versioned structured text with
// integer index tables, canonical byte-exact emission, and parsing with
// line/column errors.

#pragma once

#include <map>

#include "mlmw/core.hpp"
#include "mlmw/duality.hpp"

namespace mlmw {

struct ParseError : StructuralError {
  int line, col;
  ParseError(int line_, int col_, const std::string& what)
      : StructuralError("line " + std::to_string(line_) + ", column " +
                        std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
};

struct AlgebraDocument {
  int format_version = 1;
  int n = 2, m = 2;
  std::vector<std::string> names;
  bool order_form = true;  // emitted as an order matrix vs meet/join tables
  PosetTable order;        // when order_form
  OpTable2 meet, join;     // when !order_form
  OpTable1 neg;
  std::vector<std::pair<std::pair<int, int>, OpTable1>> sigma;  // sorted keys
  std::optional<OpTable1> exists;
  std::map<std::string, std::string> metadata;

  bool operator==(const AlgebraDocument&) const = default;
};

struct SpaceDocument {
  int format_version = 1;
  int n = 2, m = 2;
  std::vector<std::string> names;
  PosetTable order;
  OpTable1 g;
  std::vector<std::pair<std::pair<int, int>, OpTable1>> f;  // sorted keys
  std::vector<int> eblocks;
  std::map<std::string, std::string> metadata;

  bool operator==(const SpaceDocument&) const = default;
};

enum class DocumentKind { algebra, space };

/// Kind of a document from its header line.
DocumentKind detect_kind(const std::string& text);

AlgebraDocument parse_algebra_document(const std::string& text);
std::string emit_algebra_document(const AlgebraDocument& doc);
AlgebraDocument document_from_algebra(const FiniteAlgebra& L,
                                      std::map<std::string, std::string> meta =
                                          {});

SpaceDocument parse_space_document(const std::string& text);
std::string emit_space_document(const SpaceDocument& doc);
SpaceDocument document_from_space(const MlmSpace& X,
                                  std::map<std::string, std::string> meta = {});

/// Build the algebra a document describes. Lattice defects (no unique meet
/// or join, missing bounds) are law violations, reported in `problems` with
/// no algebra returned; shape defects raise StructuralError.
struct BuildResult {
  std::optional<FiniteAlgebra> algebra;
  Report problems;
};
BuildResult algebra_from_document(const AlgebraDocument& doc);

MlmSpace space_from_document(const SpaceDocument& doc);

}  // namespace mlmw
