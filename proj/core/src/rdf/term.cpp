#include "biasdoc/rdf/term.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace biasdoc::rdf {

namespace {

bool has_whitespace(std::string_view s) {
  for (unsigned char c : s) {
    if (std::isspace(c)) return true;
  }
  return false;
}

bool valid_lang_tag(std::string_view tag) {
  // BCP-47 shape: alpha subtag, then alphanumeric subtags joined by '-'.
  if (tag.empty()) return false;
  bool first = true;
  std::size_t sub_len = 0;
  for (char c : tag) {
    if (c == '-') {
      if (sub_len == 0) return false;
      sub_len = 0;
      first = false;
      continue;
    }
    const bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    const bool digit = c >= '0' && c <= '9';
    if (!(alpha || (!first && digit))) return false;
    ++sub_len;
    if (sub_len > 8) return false;
  }
  return sub_len > 0;
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw Error("invalid IRI: empty");
  if (has_whitespace(value_))
    throw Error("invalid IRI (contains whitespace): " + value_);
  const bool has_scheme_sep = value_.find("://") != std::string::npos;
  const bool is_urn = value_.rfind("urn:", 0) == 0 && value_.size() > 4;
  if (!has_scheme_sep && !is_urn)
    throw Error("invalid IRI (no scheme separator and not a URN): " + value_);
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw Error("invalid blank node: empty label");
  if (has_whitespace(label_))
    throw Error("invalid blank node label: " + label_);
}

Literal Literal::plain(std::string lexical) {
  Literal l;
  l.lexical_ = std::move(lexical);
  l.datatype_ = xsd::string_type();
  return l;
}

Literal Literal::tagged(std::string lexical, std::string lang) {
  if (!valid_lang_tag(lang))
    throw Error("invalid language tag: " + lang);
  Literal l;
  l.lexical_ = std::move(lexical);
  l.lang_ = std::move(lang);
  return l;
}

Literal Literal::typed(std::string lexical, Iri datatype) {
  Literal l;
  l.lexical_ = std::move(lexical);
  l.datatype_ = std::move(datatype);
  return l;
}

Literal Literal::integer(long long value) {
  return typed(std::to_string(value), xsd::integer_type());
}

Literal Literal::decimal(double value) {
  return typed(decimal_lexical(value), xsd::decimal_type());
}

Literal Literal::date_time(std::string lexical) {
  return typed(std::move(lexical), xsd::date_time_type());
}

namespace {

int cmp_str(const std::string& a, const std::string& b) {
  const int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int cmp_literal(const Literal& a, const Literal& b) {
  if (int c = cmp_str(a.lexical(), b.lexical()); c != 0) return c;
  if (int c = cmp_str(a.lang(), b.lang()); c != 0) return c;
  const auto& da = a.datatype();
  const auto& db = b.datatype();
  if (da.has_value() != db.has_value()) return da.has_value() ? 1 : -1;
  if (!da) return 0;
  return cmp_str(da->value(), db->value());
}

}  // namespace

int Term::compare(const Term& other) const noexcept {
  const int ka = static_cast<int>(kind());
  const int kb = static_cast<int>(other.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (kind()) {
    case TermKind::kIri:
      return cmp_str(iri().value(), other.iri().value());
    case TermKind::kBlank:
      return cmp_str(blank().label(), other.blank().label());
    case TermKind::kLiteral:
      return cmp_literal(literal(), other.literal());
  }
  return 0;
}

std::string Term::to_string() const {
  switch (kind()) {
    case TermKind::kIri:
      return "<" + iri().value() + ">";
    case TermKind::kBlank:
      return "_:" + blank().label();
    case TermKind::kLiteral: {
      const Literal& l = literal();
      std::string out = "\"" + l.lexical() + "\"";
      if (!l.lang().empty()) {
        out += "@" + l.lang();
      } else if (l.datatype() && l.datatype()->value() != xsd::kNs + "string") {
        out += "^^<" + l.datatype()->value() + ">";
      }
      return out;
    }
  }
  return {};
}

namespace xsd {
Iri string_type() { return Iri(kNs + "string"); }
Iri integer_type() { return Iri(kNs + "integer"); }
Iri decimal_type() { return Iri(kNs + "decimal"); }
Iri date_time_type() { return Iri(kNs + "dateTime"); }
Iri boolean_type() { return Iri(kNs + "boolean"); }
}  // namespace xsd

std::string decimal_lexical(double value) {
  if (!std::isfinite(value)) throw Error("decimal_lexical: non-finite value");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw Error("decimal_lexical: conversion failed");
  std::string s(buf, end);

  // to_chars may pick scientific notation for very small/large magnitudes;
  // xsd:decimal and bare Turtle decimals require plain positional form.
  const auto e_pos = s.find_first_of("eE");
  if (e_pos == std::string::npos) {
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
  }

  std::string mantissa = s.substr(0, e_pos);
  const int exp = std::stoi(s.substr(e_pos + 1));
  std::string sign;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    if (mantissa[0] == '-') sign = "-";
    mantissa.erase(0, 1);
  }
  std::string digits;
  int point = static_cast<int>(mantissa.size());
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    point = static_cast<int>(dot);
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
  } else {
    digits = mantissa;
  }
  point += exp;

  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
  } else if (point >= static_cast<int>(digits.size())) {
    out = digits +
          std::string(static_cast<std::size_t>(point) - digits.size(), '0') +
          ".0";
  } else {
    out = digits.substr(0, static_cast<std::size_t>(point)) + "." +
          digits.substr(static_cast<std::size_t>(point));
  }
  return sign + out;
}

}  // namespace biasdoc::rdf
