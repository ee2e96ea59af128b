#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "biasdoc/rdf/graph.hpp"

namespace biasdoc::rdf {

/// Syntax or prefix error while reading a Turtle document. Line and column
/// are 1-based; token holds the offending text when available.
class TurtleParseError : public Error {
 public:
  TurtleParseError(std::string message, std::size_t line, std::size_t column,
                   std::string token);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// Parses a UTF-8 Turtle document in the supported subset: @prefix
/// directives, IRIs, prefixed names, string literals (language tags and
/// ^^ datatypes), bare integers and decimals, the `a` keyword, predicate
/// lists `;`, object lists `,`, labeled blank nodes `_:x`, and `#` comments.
/// Collections, anonymous blank nodes `[ ]`, and multi-line literals are
/// outside the subset and rejected.
///
/// Duplicate statements collapse (set semantics); every @prefix declaration
/// lands in the result's prefix map.
Graph parse_turtle(std::string_view text);

/// Deterministic Turtle serialization: prefix directives sorted by name,
/// then one statement per line ordered by (subject, predicate, object),
/// blank nodes renamed _:b0, _:b1, ... in first-occurrence order. Two
/// graphs with the same triple set and prefix map serialize byte-identically
/// regardless of insertion order, and the output reparses to an isomorphic
/// graph.
std::string serialize_turtle(const Graph& g);

}  // namespace biasdoc::rdf
