#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "biasdoc/rdf/term.hpp"

namespace biasdoc::rdf {

/// An atomic statement. Position invariants (no literal subject, IRI-only
/// predicate) are enforced by Graph::insert, not by construction, so tests
/// and parsers can build candidate triples freely.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  /// Predicate as an IRI; only valid for triples accepted by a Graph.
  const Iri& predicate_iri() const { return predicate.iri(); }

  friend bool operator==(const Triple& a, const Triple& b) noexcept {
    return a.subject == b.subject && a.predicate == b.predicate &&
           a.object == b.object;
  }
};

Triple make_triple(Term subject, Iri predicate, Term object);

/// Raised by Graph::insert when a term violates its position constraints.
class PositionError : public Error {
 public:
  using Error::Error;
};

namespace detail {

// Lexicographic triple order over a fixed position permutation
// (0 = subject, 1 = predicate, 2 = object). Transparent so that partially
// bound prefixes can be range-scanned without sentinel terms.
struct TriplePrefix {
  const Term* first = nullptr;
  const Term* second = nullptr;
};

inline const Term& term_at(const Triple& t, std::size_t pos) {
  switch (pos) {
    case 0: return t.subject;
    case 1: return t.predicate;
    default: return t.object;
  }
}

template <std::size_t A, std::size_t B, std::size_t C>
struct TripleOrder {
  using is_transparent = void;

  bool operator()(const Triple& x, const Triple& y) const noexcept {
    if (int c = term_at(x, A).compare(term_at(y, A)); c != 0) return c < 0;
    if (int c = term_at(x, B).compare(term_at(y, B)); c != 0) return c < 0;
    return term_at(x, C).compare(term_at(y, C)) < 0;
  }
  bool operator()(const Triple& x, const TriplePrefix& k) const noexcept {
    if (int c = term_at(x, A).compare(*k.first); c != 0) return c < 0;
    if (k.second == nullptr) return false;
    return term_at(x, B).compare(*k.second) < 0;
  }
  bool operator()(const TriplePrefix& k, const Triple& x) const noexcept {
    if (int c = k.first->compare(term_at(x, A)); c != 0) return c < 0;
    if (k.second == nullptr) return false;
    return k.second->compare(term_at(x, B)) < 0;
  }
};

}  // namespace detail

/// In-memory triple store with set semantics and three sorted indexes
/// (SPO, POS, OSP), so every single- and double-wildcard pattern is one
/// range scan. Construction is single-writer; once loaded a Graph is
/// treated as immutable and shared freely across readers. Module-level
/// operations that extend a graph copy it and return the new version.
class Graph {
 public:
  Graph() = default;

  /// Inserts a triple. Returns false when it was already present.
  /// Throws PositionError for a literal subject or a non-IRI predicate.
  bool insert(Triple t);

  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }
  bool contains(const Triple& t) const { return spo_.count(t) > 0; }

  /// Returns exactly the triples matching every bound position; nullopt is
  /// a wildcard. Result order is deterministic (order of the index chosen
  /// for the bound prefix).
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// All triples in SPO order.
  const std::set<Triple, detail::TripleOrder<0, 1, 2>>& triples() const {
    return spo_;
  }

  void set_prefix(const std::string& name, Iri iri);
  const std::map<std::string, Iri>& prefixes() const { return prefixes_; }

  /// Shallow structural equality: same triple set and same prefix map.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::set<Triple, detail::TripleOrder<0, 1, 2>> spo_;
  std::set<Triple, detail::TripleOrder<1, 2, 0>> pos_;
  std::set<Triple, detail::TripleOrder<2, 0, 1>> osp_;
  std::map<std::string, Iri> prefixes_;
};

/// True iff a blank-node bijection exists mapping one triple set onto the
/// other. Ground graphs compare as plain sets. Prefix maps are ignored.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace biasdoc::rdf
