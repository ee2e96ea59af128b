#include "biasdoc/rdf/turtle.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace biasdoc::rdf {

TurtleParseError::TurtleParseError(std::string message, std::size_t line,
                                   std::size_t column, std::string token)
    : Error(message + " at " + std::to_string(line) + ":" +
            std::to_string(column) +
            (token.empty() ? "" : " (near \"" + token + "\")")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

enum class Tok {
  kIriRef,      // <...>, text = expanded IRI
  kPName,       // prefix:local, text = raw token
  kBlank,       // _:label, text = label
  kString,      // quoted string, text = decoded value
  kLangTag,     // @tag, text = tag
  kCaretCaret,  // ^^
  kInteger,     // bare integer, text = lexical
  kDecimal,     // bare decimal, text = lexical
  kDot,
  kSemicolon,
  kComma,
  kA,            // the keyword 'a'
  kPrefixDecl,   // @prefix
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws_and_comments();
    const std::size_t line = line_, col = col_;
    if (eof()) return {Tok::kEnd, "", line, col};

    const char c = peek();
    if (c == '<') return iri_ref(line, col);
    if (c == '"' || c == '\'') return quoted_string(line, col, c);
    if (c == '@') return at_token(line, col);
    if (c == '^') {
      if (peek(1) == '^') {
        advance(); advance();
        return {Tok::kCaretCaret, "^^", line, col};
      }
      fail("unexpected character", line, col, "^");
    }
    if (c == '.') {
      // A dot starts a decimal only when directly followed by a digit.
      if (!std::isdigit(static_cast<unsigned char>(peek(1)))) {
        advance();
        return {Tok::kDot, ".", line, col};
      }
    }
    if (c == ';') { advance(); return {Tok::kSemicolon, ";", line, col}; }
    if (c == ',') { advance(); return {Tok::kComma, ",", line, col}; }
    if (c == '_' && peek(1) == ':') return blank_label(line, col);
    if (c == '+' || c == '-' || c == '.' ||
        std::isdigit(static_cast<unsigned char>(c)))
      return number(line, col);
    if (is_name_start(c)) return name_or_pname(line, col);
    fail("unexpected character", line, col, std::string(1, c));
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t line,
                         std::size_t col, const std::string& token) const {
    throw TurtleParseError(msg, line, col, token);
  }

 private:
  bool eof(std::size_t ahead = 0) const { return pos_ + ahead >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return eof(ahead) ? '\0' : text_[pos_ + ahead];
  }
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  Token iri_ref(std::size_t line, std::size_t col) {
    advance();  // '<'
    std::string value;
    while (true) {
      if (eof() || peek() == '\n')
        fail("unterminated IRI", line, col, "<" + value);
      const char c = advance();
      if (c == '>') break;
      if (std::isspace(static_cast<unsigned char>(c)))
        fail("whitespace inside IRI", line, col, value);
      value += c;
    }
    return {Tok::kIriRef, value, line, col};
  }

  Token quoted_string(std::size_t line, std::size_t col, char quote) {
    advance();  // opening quote
    std::string value;
    while (true) {
      if (eof() || peek() == '\n')
        fail("unterminated string literal", line, col, value);
      char c = advance();
      if (c == quote) break;
      if (c == '\\') {
        if (eof()) fail("dangling escape", line, col, value);
        const char e = advance();
        switch (e) {
          case 't': value += '\t'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'b': value += '\b'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': value += unicode_escape(4, line, col); break;
          case 'U': value += unicode_escape(8, line, col); break;
          default:
            fail("unknown escape \\" + std::string(1, e), line, col, value);
        }
      } else {
        value += c;
      }
    }
    return {Tok::kString, value, line, col};
  }

  std::string unicode_escape(int digits, std::size_t line, std::size_t col) {
    unsigned long cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (eof() || !std::isxdigit(static_cast<unsigned char>(peek())))
        fail("bad unicode escape", line, col, "");
      const char h = advance();
      cp = cp * 16 +
           static_cast<unsigned long>(
               std::isdigit(static_cast<unsigned char>(h))
                   ? h - '0'
                   : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
    }
    // Encode the code point as UTF-8.
    std::string out;
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
  }

  Token at_token(std::size_t line, std::size_t col) {
    advance();  // '@'
    std::string word;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '-'))
      word += advance();
    if (word == "prefix") return {Tok::kPrefixDecl, "@prefix", line, col};
    if (!word.empty()) return {Tok::kLangTag, word, line, col};
    fail("bare '@'", line, col, "@");
  }

  Token blank_label(std::size_t line, std::size_t col) {
    advance(); advance();  // '_:'
    std::string label;
    while (!eof() && is_name_char(peek())) label += advance();
    if (label.empty()) fail("empty blank node label", line, col, "_:");
    return {Tok::kBlank, label, line, col};
  }

  Token number(std::size_t line, std::size_t col) {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex += advance();
    bool digits_before = false, saw_dot = false, digits_after = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      lex += advance();
      digits_before = true;
    }
    // A trailing '.' is the statement terminator, not a decimal point.
    if (peek() == '.' &&
        std::isdigit(static_cast<unsigned char>(peek(1)))) {
      lex += advance();
      saw_dot = true;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        lex += advance();
        digits_after = true;
      }
    }
    if (!digits_before && !digits_after)
      fail("malformed number", line, col, lex);
    if (saw_dot) return {Tok::kDecimal, lex, line, col};
    return {Tok::kInteger, lex, line, col};
  }

  Token name_or_pname(std::size_t line, std::size_t col) {
    std::string word;
    while (!eof() && is_name_char(peek())) word += advance();
    if (peek() == ':') {
      advance();
      std::string local;
      // PN_LOCAL may contain dots, but not end with one.
      while (!eof()) {
        const char c = peek();
        if (is_name_char(c)) {
          local += advance();
        } else if (c == '.' && is_name_char(peek(1))) {
          local += advance();
        } else {
          break;
        }
      }
      return {Tok::kPName, word + ":" + local, line, col};
    }
    if (word == "a") return {Tok::kA, "a", line, col};
    fail("unexpected name", line, col, word);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Graph parse() {
    while (cur_.kind != Tok::kEnd) {
      if (cur_.kind == Tok::kPrefixDecl) {
        prefix_directive();
      } else {
        statement();
      }
    }
    return std::move(graph_);
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      lexer_.fail("expected " + what, cur_.line, cur_.column, cur_.text);
  }

  void prefix_directive() {
    shift();  // @prefix
    expect(Tok::kPName, "prefix name");
    const std::string pname = cur_.text;
    const auto colon = pname.find(':');
    if (colon == std::string::npos || colon + 1 != pname.size())
      lexer_.fail("malformed prefix declaration", cur_.line, cur_.column,
                  pname);
    const std::string name = pname.substr(0, colon);
    shift();
    expect(Tok::kIriRef, "IRI");
    Iri iri = make_iri(cur_);
    shift();
    expect(Tok::kDot, "'.'");
    shift();
    graph_.set_prefix(name, std::move(iri));
  }

  Iri make_iri(const Token& tok) {
    try {
      return Iri(tok.text);
    } catch (const Error& e) {
      lexer_.fail(e.what(), tok.line, tok.column, tok.text);
    }
  }

  Iri resolve_pname(const Token& tok) {
    const auto colon = tok.text.find(':');
    const std::string prefix = tok.text.substr(0, colon);
    const std::string local = tok.text.substr(colon + 1);
    const auto& prefixes = graph_.prefixes();
    auto it = prefixes.find(prefix);
    if (it == prefixes.end())
      lexer_.fail("undeclared prefix \"" + prefix + "\"", tok.line,
                  tok.column, tok.text);
    try {
      return Iri(it->second.value() + local);
    } catch (const Error& e) {
      lexer_.fail(e.what(), tok.line, tok.column, tok.text);
    }
  }

  Term subject() {
    switch (cur_.kind) {
      case Tok::kIriRef: {
        Term t{make_iri(cur_)};
        shift();
        return t;
      }
      case Tok::kPName: {
        Term t{resolve_pname(cur_)};
        shift();
        return t;
      }
      case Tok::kBlank: {
        Term t{BlankNode(cur_.text)};
        shift();
        return t;
      }
      case Tok::kString:
      case Tok::kInteger:
      case Tok::kDecimal:
        lexer_.fail("literal in subject position", cur_.line, cur_.column,
                    cur_.text);
      default:
        lexer_.fail("expected subject", cur_.line, cur_.column, cur_.text);
    }
  }

  Iri predicate() {
    switch (cur_.kind) {
      case Tok::kA: {
        shift();
        return Iri(std::string(kRdfType));
      }
      case Tok::kIriRef: {
        Iri i = make_iri(cur_);
        shift();
        return i;
      }
      case Tok::kPName: {
        Iri i = resolve_pname(cur_);
        shift();
        return i;
      }
      default:
        lexer_.fail("expected predicate", cur_.line, cur_.column, cur_.text);
    }
  }

  Term object() {
    switch (cur_.kind) {
      case Tok::kIriRef: {
        Term t{make_iri(cur_)};
        shift();
        return t;
      }
      case Tok::kPName: {
        Term t{resolve_pname(cur_)};
        shift();
        return t;
      }
      case Tok::kBlank: {
        Term t{BlankNode(cur_.text)};
        shift();
        return t;
      }
      case Tok::kString: {
        const std::string lexical = cur_.text;
        shift();
        if (cur_.kind == Tok::kLangTag) {
          Term t{Literal::tagged(lexical, cur_.text)};
          shift();
          return t;
        }
        if (cur_.kind == Tok::kCaretCaret) {
          shift();
          if (cur_.kind != Tok::kIriRef && cur_.kind != Tok::kPName)
            lexer_.fail("expected datatype IRI", cur_.line, cur_.column,
                        cur_.text);
          Iri dt = cur_.kind == Tok::kIriRef ? make_iri(cur_)
                                             : resolve_pname(cur_);
          shift();
          return Term{Literal::typed(lexical, std::move(dt))};
        }
        return Term{Literal::plain(lexical)};
      }
      case Tok::kInteger: {
        Term t{Literal::typed(cur_.text, xsd::integer_type())};
        shift();
        return t;
      }
      case Tok::kDecimal: {
        Term t{Literal::typed(cur_.text, xsd::decimal_type())};
        shift();
        return t;
      }
      default:
        lexer_.fail("expected object", cur_.line, cur_.column, cur_.text);
    }
  }

  void statement() {
    Term subj = subject();
    while (true) {
      Iri pred = predicate();
      while (true) {
        Term obj = object();
        graph_.insert(make_triple(subj, pred, std::move(obj)));
        if (cur_.kind != Tok::kComma) break;
        shift();
      }
      if (cur_.kind != Tok::kSemicolon) break;
      // Tolerate chained/trailing semicolons before '.'.
      while (cur_.kind == Tok::kSemicolon) shift();
      if (cur_.kind == Tok::kDot) break;
    }
    expect(Tok::kDot, "'.'");
    shift();
  }

  Lexer lexer_;
  Token cur_{Tok::kEnd, ""};
  Graph graph_;
};

std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: out += c;
    }
  }
  return out;
}

bool safe_local_name(std::string_view local) {
  if (local.empty()) return false;
  const char c0 = local[0];
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_'))
    return false;
  for (char c : local) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '-'))
      return false;
  }
  return true;
}

bool bare_integer(std::string_view lex) {
  std::size_t i = (lex.size() > 1 && (lex[0] == '+' || lex[0] == '-')) ? 1 : 0;
  if (i >= lex.size()) return false;
  for (; i < lex.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(lex[i]))) return false;
  return true;
}

bool bare_decimal(std::string_view lex) {
  std::size_t i = (lex.size() > 1 && (lex[0] == '+' || lex[0] == '-')) ? 1 : 0;
  const auto dot = lex.find('.', i);
  if (dot == std::string_view::npos || dot + 1 >= lex.size()) return false;
  for (std::size_t k = i; k < lex.size(); ++k) {
    if (k == dot) continue;
    if (!std::isdigit(static_cast<unsigned char>(lex[k]))) return false;
  }
  return true;
}

// Renders an IRI as prefix:local when a declared prefix covers it and the
// remainder is a conservatively safe local name; <...> otherwise.
std::string render_iri(const Iri& iri, const std::map<std::string, Iri>& px) {
  const std::string& v = iri.value();
  const std::string* best_name = nullptr;
  std::size_t best_len = 0;
  for (const auto& [name, ns] : px) {
    const std::string& n = ns.value();
    if (n.size() > best_len && n.size() < v.size() &&
        v.compare(0, n.size(), n) == 0 &&
        safe_local_name(std::string_view(v).substr(n.size()))) {
      best_name = &name;
      best_len = n.size();
    }
  }
  if (best_name) return *best_name + ":" + v.substr(best_len);
  return "<" + v + ">";
}

std::string render_literal(const Literal& l,
                           const std::map<std::string, Iri>& px) {
  if (!l.lang().empty())
    return "\"" + escape_literal(l.lexical()) + "\"@" + l.lang();
  const auto& dt = l.datatype();
  const std::string dtv = dt ? dt->value() : xsd::kNs + "string";
  if (dtv == xsd::kNs + "string")
    return "\"" + escape_literal(l.lexical()) + "\"";
  if (dtv == xsd::kNs + "integer" && bare_integer(l.lexical()))
    return l.lexical();
  if (dtv == xsd::kNs + "decimal" && bare_decimal(l.lexical()))
    return l.lexical();
  return "\"" + escape_literal(l.lexical()) + "\"^^" + render_iri(*dt, px);
}

}  // namespace

Graph parse_turtle(std::string_view text) { return Parser(text).parse(); }

std::string serialize_turtle(const Graph& g) {
  std::ostringstream out;
  for (const auto& [name, iri] : g.prefixes())
    out << "@prefix " << name << ": <" << iri.value() << "> .\n";
  if (!g.prefixes().empty() && !g.triples().empty()) out << "\n";

  // Canonical blank labels by first occurrence in SPO order.
  std::map<std::string, std::string> blank_names;
  auto canon_blank = [&](const BlankNode& b) {
    auto it = blank_names.find(b.label());
    if (it == blank_names.end()) {
      it = blank_names
               .emplace(b.label(), "b" + std::to_string(blank_names.size()))
               .first;
    }
    return "_:" + it->second;
  };

  const auto& px = g.prefixes();
  auto render_term = [&](const Term& t) -> std::string {
    switch (t.kind()) {
      case TermKind::kIri: return render_iri(t.iri(), px);
      case TermKind::kBlank: return canon_blank(t.blank());
      case TermKind::kLiteral: return render_literal(t.literal(), px);
    }
    return {};
  };

  for (const Triple& t : g.triples()) {
    const std::string pred = t.predicate.iri().value() == kRdfType
                                 ? "a"
                                 : render_iri(t.predicate.iri(), px);
    out << render_term(t.subject) << " " << pred << " "
        << render_term(t.object) << " .\n";
  }
  return out.str();
}

}  // namespace biasdoc::rdf
