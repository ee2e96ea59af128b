#include "biasdoc/rdf/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace biasdoc::rdf {

Triple make_triple(Term subject, Iri predicate, Term object) {
  return Triple{std::move(subject), Term(std::move(predicate)),
                std::move(object)};
}

bool Graph::insert(Triple t) {
  if (t.subject.is_literal())
    throw PositionError("literal in subject position: " +
                        t.subject.to_string());
  if (!t.predicate.is_iri())
    throw PositionError("non-IRI in predicate position: " +
                        t.predicate.to_string());
  auto [it, inserted] = spo_.insert(t);
  if (!inserted) return false;
  pos_.insert(t);
  osp_.insert(t);
  return true;
}

void Graph::set_prefix(const std::string& name, Iri iri) {
  prefixes_.insert_or_assign(name, std::move(iri));
}

namespace {

template <typename Set>
std::vector<Triple> scan_prefix(const Set& index, const Term* first,
                                const Term* second) {
  if (first == nullptr) return {index.begin(), index.end()};
  auto [lo, hi] = index.equal_range(detail::TriplePrefix{first, second});
  return {lo, hi};
}

}  // namespace

std::vector<Triple> Graph::match(const std::optional<Term>& s,
                                 const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  const Term* ps = s ? &*s : nullptr;
  const Term* pp = p ? &*p : nullptr;
  const Term* po = o ? &*o : nullptr;

  if (ps && pp && po) {
    Triple probe{*ps, *pp, *po};
    if (spo_.count(probe) > 0) return {probe};
    return {};
  }
  if (ps && pp) return scan_prefix(spo_, ps, pp);
  if (ps && po) {
    // OSP is ordered (object, subject, predicate): scan the (o, s) prefix.
    return scan_prefix(osp_, po, ps);
  }
  if (ps) return scan_prefix(spo_, ps, nullptr);
  if (pp && po) return scan_prefix(pos_, pp, po);
  if (pp) return scan_prefix(pos_, pp, nullptr);
  if (po) return scan_prefix(osp_, po, nullptr);
  return scan_prefix(spo_, nullptr, nullptr);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.prefixes_ == b.prefixes_ &&
         a.spo_.size() == b.spo_.size() &&
         std::equal(a.spo_.begin(), a.spo_.end(), b.spo_.begin());
}

namespace {

bool has_blank(const Triple& t) {
  return t.subject.is_blank() || t.object.is_blank();
}

// Occurrence signature of a blank node: sorted (position, predicate) pairs.
// Candidate images must have an identical signature, which prunes the
// backtracking search to near-nothing on realistic graphs.
std::multiset<std::pair<int, std::string>> blank_signature(
    const Graph& g, const std::string& label) {
  std::multiset<std::pair<int, std::string>> sig;
  for (const Triple& t : g.triples()) {
    if (t.subject.is_blank() && t.subject.blank().label() == label)
      sig.emplace(0, t.predicate.iri().value());
    if (t.object.is_blank() && t.object.blank().label() == label)
      sig.emplace(2, t.predicate.iri().value());
  }
  return sig;
}

std::vector<std::string> blank_labels(const Graph& g) {
  std::set<std::string> labels;
  for (const Triple& t : g.triples()) {
    if (t.subject.is_blank()) labels.insert(t.subject.blank().label());
    if (t.object.is_blank()) labels.insert(t.object.blank().label());
  }
  return {labels.begin(), labels.end()};
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;

  // Ground triples must match exactly.
  std::vector<Triple> ga, gb, ba, bb;
  for (const Triple& t : a.triples()) (has_blank(t) ? ba : ga).push_back(t);
  for (const Triple& t : b.triples()) (has_blank(t) ? bb : gb).push_back(t);
  if (ga.size() != gb.size() || !std::equal(ga.begin(), ga.end(), gb.begin()))
    return false;

  const auto la = blank_labels(a);
  const auto lb = blank_labels(b);
  if (la.size() != lb.size()) return false;
  if (la.empty()) return true;

  std::map<std::string, std::multiset<std::pair<int, std::string>>> sig_a,
      sig_b;
  for (const auto& l : la) sig_a[l] = blank_signature(a, l);
  for (const auto& l : lb) sig_b[l] = blank_signature(b, l);

  std::map<std::string, std::string> mapping;
  std::set<std::string> used;

  auto apply = [&](const Term& t) -> std::optional<Term> {
    if (!t.is_blank()) return t;
    auto it = mapping.find(t.blank().label());
    if (it == mapping.end()) return std::nullopt;
    return Term(BlankNode(it->second));
  };

  // A blank triple is checkable once all its blanks are mapped.
  auto consistent = [&]() {
    for (const Triple& t : ba) {
      auto s = apply(t.subject);
      auto o = apply(t.object);
      if (!s || !o) continue;
      if (!b.contains(Triple{*s, t.predicate, *o})) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == la.size()) return consistent();
    const std::string& from = la[i];
    for (const std::string& to : lb) {
      if (used.count(to) > 0 || sig_a[from] != sig_b[to]) continue;
      mapping[from] = to;
      used.insert(to);
      if (consistent() && assign(i + 1)) return true;
      mapping.erase(from);
      used.erase(to);
    }
    return false;
  };

  return assign(0);
}

}  // namespace biasdoc::rdf
