#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace biasdoc::rdf {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An absolute IRI. Must be non-empty, contain no whitespace, and either
/// carry a scheme separator ("://") or be a URN ("urn:...").
/// IRIs compare as plain strings; no normalization is performed.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& value() const noexcept { return value_; }

  friend bool operator==(const Iri& a, const Iri& b) noexcept {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Iri& a, const Iri& b) noexcept {
    return a.value_ < b.value_;
  }

 private:
  std::string value_;
};

/// A blank node with a locally scoped label. Labels carry no meaning
/// across graphs.
class BlankNode {
 public:
  explicit BlankNode(std::string label);

  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const BlankNode& a, const BlankNode& b) noexcept {
    return a.label_ == b.label_;
  }

 private:
  std::string label_;
};

/// An RDF literal: a lexical form plus either a language tag or a datatype
/// IRI (mutually exclusive). A literal constructed with neither defaults to
/// xsd:string. Equality is term equality over (lexical, tag, datatype);
/// "1" and "01" are distinct literals.
class Literal {
 public:
  /// Simple literal; normalized to datatype xsd:string.
  static Literal plain(std::string lexical);
  /// Language-tagged literal, e.g. tagged("Bias", "en"). No datatype.
  static Literal tagged(std::string lexical, std::string lang);
  /// Typed literal with an explicit datatype IRI.
  static Literal typed(std::string lexical, Iri datatype);
  /// Convenience: xsd:integer literal from a value.
  static Literal integer(long long value);
  /// Convenience: xsd:decimal literal from a finite value; the lexical form
  /// is the shortest decimal round-tripping the double, never exponent form.
  static Literal decimal(double value);
  /// xsd:dateTime literal, lexical form as given (caller formats).
  static Literal date_time(std::string lexical);

  const std::string& lexical() const noexcept { return lexical_; }
  /// Empty string when the literal has no language tag.
  const std::string& lang() const noexcept { return lang_; }
  /// Absent exactly when the literal is language-tagged.
  const std::optional<Iri>& datatype() const noexcept { return datatype_; }

  friend bool operator==(const Literal& a, const Literal& b) noexcept {
    return a.lexical_ == b.lexical_ && a.lang_ == b.lang_ &&
           a.datatype_ == b.datatype_;
  }

 private:
  Literal() = default;

  std::string lexical_;
  std::string lang_;
  std::optional<Iri> datatype_;
};

enum class TermKind { kIri, kBlank, kLiteral };

/// Tagged union of Iri | BlankNode | Literal with a total order
/// (IRIs < blank nodes < literals, then content) used by the graph
/// indexes and the deterministic serializer.
class Term {
 public:
  Term(Iri iri) : node_(std::move(iri)) {}                // NOLINT(google-explicit-constructor)
  Term(BlankNode blank) : node_(std::move(blank)) {}      // NOLINT(google-explicit-constructor)
  Term(Literal literal) : node_(std::move(literal)) {}    // NOLINT(google-explicit-constructor)

  TermKind kind() const noexcept {
    return static_cast<TermKind>(node_.index());
  }
  bool is_iri() const noexcept { return kind() == TermKind::kIri; }
  bool is_blank() const noexcept { return kind() == TermKind::kBlank; }
  bool is_literal() const noexcept { return kind() == TermKind::kLiteral; }

  const Iri& iri() const { return std::get<Iri>(node_); }
  const BlankNode& blank() const { return std::get<BlankNode>(node_); }
  const Literal& literal() const { return std::get<Literal>(node_); }

  /// Three-way comparison over (kind, content); total and strict.
  int compare(const Term& other) const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.node_ == b.node_;
  }
  friend bool operator<(const Term& a, const Term& b) noexcept {
    return a.compare(b) < 0;
  }

  /// Debug/report rendering: <iri>, _:label, or the Turtle literal form.
  std::string to_string() const;

 private:
  std::variant<Iri, BlankNode, Literal> node_;
};

namespace xsd {
inline const std::string kNs = "http://www.w3.org/2001/XMLSchema#";
Iri string_type();
Iri integer_type();
Iri decimal_type();
Iri date_time_type();
Iri boolean_type();
}  // namespace xsd

/// Shortest decimal rendering of a finite double without exponent notation;
/// valid as an xsd:decimal lexical form and as a bare Turtle decimal/integer.
std::string decimal_lexical(double value);

}  // namespace biasdoc::rdf
