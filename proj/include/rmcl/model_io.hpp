#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rmcl/regex.hpp"
#include "rmcl/teacher.hpp"
#include "rmcl/transducer.hpp"

namespace rmcl {

class ModelError : public Error {
 public:
  ModelError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Parsed model text:
//
//   alphabet: T N
//   let E = T/T + N/N;
//   init: N* T (N* T N* T N*)*
//   trans: E*
//   trans: E* T/N T/N E* + T/N E* T/N
//   bad: N*
//
// Juxtaposition concatenates, '+' is union, '*' is star, 'eps' is the empty
// word and a/b is a symbol pair. '#' starts a comment. The trans lines are
// united.
struct ModelDoc {
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, Regex>> lets;
  Regex init = Regex::empty();
  std::vector<Regex> trans;
  Regex bad = Regex::empty();
};

namespace detail {

class ModelParser {
 public:
  explicit ModelParser(std::string_view text) { tokenize(text); }

  ModelDoc parse() {
    ModelDoc doc;
    bool have_alphabet = false, have_init = false, have_bad = false;
    skip_newlines();
    if (peek().kind == Tok::End) fail(peek(), "empty model");
    while (peek().kind != Tok::End) {
      const Token kw = expect(Tok::Ident, "expected a statement keyword");
      if (kw.text == "alphabet") {
        if (have_alphabet) fail(kw, "duplicate alphabet declaration");
        expect(Tok::Colon, "expected ':' after 'alphabet'");
        while (peek().kind == Tok::Ident) {
          const Token s = next();
          if (s.text == "eps" || s.text == "empty") fail(s, "'" + s.text + "' is reserved");
          for (const auto& existing : doc.alphabet)
            if (existing == s.text) fail(s, "duplicate alphabet symbol '" + s.text + "'");
          doc.alphabet.push_back(s.text);
        }
        if (doc.alphabet.empty()) fail(peek(), "alphabet must declare at least one symbol");
        have_alphabet = true;
        end_statement();
      } else if (!have_alphabet) {
        fail(kw, "the alphabet must be declared first");
      } else if (kw.text == "let") {
        const Token name = expect(Tok::Ident, "expected a name after 'let'");
        if (is_symbol(doc, name.text)) fail(name, "'" + name.text + "' is an alphabet symbol");
        if (name.text == "eps" || name.text == "empty") fail(name, "'" + name.text + "' is reserved");
        if (flavors_.count(name.text)) fail(name, "duplicate definition of '" + name.text + "'");
        expect(Tok::Equals, "expected '=' after the name");
        multiline_ = true;
        Flavor flavor = Flavor::Neutral;
        Regex r = parse_union(doc, Context::Any, flavor);
        multiline_ = false;
        expect(Tok::Semi, "expected ';' to end the definition");
        flavors_[name.text] = flavor;
        doc.lets.emplace_back(name.text, std::move(r));
        end_statement();
      } else if (kw.text == "init" || kw.text == "bad") {
        bool& seen = kw.text == "init" ? have_init : have_bad;
        if (seen) fail(kw, "duplicate '" + kw.text + "' statement");
        expect(Tok::Colon, "expected ':'");
        Flavor flavor = Flavor::Neutral;
        (kw.text == "init" ? doc.init : doc.bad) = parse_union(doc, Context::Plain, flavor);
        seen = true;
        end_statement();
      } else if (kw.text == "trans") {
        expect(Tok::Colon, "expected ':'");
        Flavor flavor = Flavor::Neutral;
        doc.trans.push_back(parse_union(doc, Context::Pair, flavor));
        end_statement();
      } else {
        fail(kw, "unknown statement '" + kw.text + "'");
      }
      skip_newlines();
    }
    const Token& end = peek();
    if (!have_alphabet) fail(end, "missing 'alphabet' declaration");
    if (!have_init) fail(end, "missing 'init' statement");
    if (doc.trans.empty()) fail(end, "missing 'trans' statement");
    if (!have_bad) fail(end, "missing 'bad' statement");
    return doc;
  }

  // A lone regex over the given symbols: a configuration language, or a
  // relation when `pairs` is set.
  Regex parse_expression(std::vector<std::string> alphabet, bool pairs = false) {
    ModelDoc doc;
    doc.alphabet = std::move(alphabet);
    multiline_ = true;
    if (peek().kind == Tok::End) fail(peek(), "empty expression");
    Flavor flavor = Flavor::Neutral;
    Regex r = parse_union(doc, pairs ? Context::Pair : Context::Plain, flavor);
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return r;
  }

 private:
  enum class Tok { Ident, Slash, Plus, Star, LParen, RParen, Semi, Colon, Equals, Newline, End };
  struct Token {
    Tok kind;
    std::string text;
    std::size_t line, column;
  };
  // Where a sub-expression may be used: plain symbols, pairs, or either.
  enum class Context { Plain, Pair, Any };
  enum class Flavor { Neutral, Plain, Pair };

  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    throw ModelError(t.line, t.column, what);
  }

  void tokenize(std::string_view text) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size();) {
      const char c = text[i];
      auto push = [&](Tok k, std::string s) { tokens_.push_back({k, std::move(s), line, col}); };
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else if (c == '\n') {
        push(Tok::Newline, "\\n");
        ++i, ++line, col = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i, ++col;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
          ++j;
        push(Tok::Ident, std::string(text.substr(i, j - i)));
        col += j - i;
        i = j;
      } else {
        Tok k;
        switch (c) {
          case '/': k = Tok::Slash; break;
          case '+': k = Tok::Plus; break;
          case '*': k = Tok::Star; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          case ';': k = Tok::Semi; break;
          case ':': k = Tok::Colon; break;
          case '=': k = Tok::Equals; break;
          default: throw ModelError(line, col, std::string("unexpected character '") + c + "'");
        }
        push(k, std::string(1, c));
        ++i, ++col;
      }
    }
    tokens_.push_back({Tok::End, "end of input", line, col});
  }

  const Token& peek() {
    if (multiline_)
      while (tokens_[pos_].kind == Tok::Newline) ++pos_;
    return tokens_[pos_];
  }
  Token next() {
    Token t = peek();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), what + ", found '" + peek().text + "'");
    return next();
  }
  void skip_newlines() {
    while (tokens_[pos_].kind == Tok::Newline) ++pos_;
  }
  void end_statement() {
    if (peek().kind == Tok::Semi) next();
    if (peek().kind != Tok::Newline && peek().kind != Tok::End)
      fail(peek(), "unexpected '" + peek().text + "' after statement");
  }

  static bool is_symbol(const ModelDoc& doc, const std::string& s) {
    for (const auto& a : doc.alphabet)
      if (a == s) return true;
    return false;
  }

  // "name:" opens the next statement, so it never continues an expression.
  bool at_atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) return true;
    if (t.kind != Tok::Ident) return false;
    return tokens_[pos_ + 1].kind != Tok::Colon;
  }

  Regex parse_union(const ModelDoc& doc, Context ctx, Flavor& flavor) {
    std::vector<Regex> parts{parse_concat(doc, ctx, flavor)};
    while (peek().kind == Tok::Plus) {
      next();
      parts.push_back(parse_concat(doc, ctx, flavor));
    }
    return Regex::alt(std::move(parts));
  }

  Regex parse_concat(const ModelDoc& doc, Context ctx, Flavor& flavor) {
    if (!at_atom()) fail(peek(), "expected an expression, found '" + peek().text + "'");
    std::vector<Regex> parts;
    while (at_atom()) parts.push_back(parse_star(doc, ctx, flavor));
    return Regex::concat(std::move(parts));
  }

  Regex parse_star(const ModelDoc& doc, Context ctx, Flavor& flavor) {
    Regex r = parse_atom(doc, ctx, flavor);
    while (peek().kind == Tok::Star) {
      next();
      r = Regex::star(std::move(r));
    }
    return r;
  }

  void note(const Token& at, Context ctx, Flavor& flavor, Flavor used) {
    if (used == Flavor::Neutral) return;
    if (ctx == Context::Plain && used == Flavor::Pair)
      fail(at, "symbol pair used in a configuration language");
    if (ctx == Context::Pair && used == Flavor::Plain)
      fail(at, "bare symbol in a transition relation is not length-preserving; use pairs a/b");
    if (flavor != Flavor::Neutral && flavor != used)
      fail(at, "expression mixes plain symbols and symbol pairs");
    flavor = used;
  }

  Regex parse_atom(const ModelDoc& doc, Context ctx, Flavor& flavor) {
    if (peek().kind == Tok::LParen) {
      const Token open = next();
      const bool saved = multiline_;
      multiline_ = true;
      Regex r = parse_union(doc, ctx, flavor);
      if (peek().kind != Tok::RParen) fail(open, "unclosed '('");
      next();
      multiline_ = saved;
      return r;
    }
    const Token t = expect(Tok::Ident, "expected a symbol");
    if (peek().kind == Tok::Slash) {
      next();
      const Token out = expect(Tok::Ident, "expected the output symbol of the pair");
      if (!is_symbol(doc, t.text)) fail(t, "unknown symbol '" + t.text + "'");
      if (!is_symbol(doc, out.text)) fail(out, "unknown symbol '" + out.text + "'");
      note(t, ctx, flavor, Flavor::Pair);
      return Regex::pair(t.text, out.text);
    }
    if (t.text == "eps") return Regex::epsilon();
    if (t.text == "empty") return Regex::empty();
    if (auto it = flavors_.find(t.text); it != flavors_.end()) {
      note(t, ctx, flavor, it->second);
      return Regex::ref(t.text);
    }
    if (is_symbol(doc, t.text)) {
      note(t, ctx, flavor, Flavor::Plain);
      return Regex::symbol(t.text);
    }
    fail(t, "undefined name or unknown symbol '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool multiline_ = false;
  std::map<std::string, Flavor> flavors_;
};

}  // namespace detail

inline ModelDoc parse_model_doc(std::string_view text) {
  return detail::ModelParser(text).parse();
}

inline Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return detail::ModelParser(text).parse_expression(alphabet.names());
}

inline Regex parse_pair_regex(std::string_view text, const Alphabet& alphabet) {
  return detail::ModelParser(text).parse_expression(alphabet.names(), true);
}

inline std::string print_model(const ModelDoc& doc) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& s : doc.alphabet) out << ' ' << s;
  out << '\n';
  for (const auto& [name, r] : doc.lets) out << "let " << name << " = " << r.to_string() << ";\n";
  out << "init: " << doc.init.to_string() << '\n';
  for (const auto& t : doc.trans) out << "trans: " << t.to_string() << '\n';
  out << "bad: " << doc.bad.to_string() << '\n';
  return out.str();
}

inline RmcProblem build_problem(const ModelDoc& doc) {
  Alphabet alphabet(doc.alphabet);
  RegexBindings bindings;
  for (const auto& [name, r] : doc.lets) bindings.emplace(name, r);
  RmcProblem p{alphabet, compile_regex(doc.init, alphabet, bindings),
               compile_pair_regex(Regex::alt(doc.trans), alphabet, bindings),
               compile_regex(doc.bad, alphabet, bindings)};
  p.validate();
  return p;
}

inline RmcProblem parse_model(std::string_view text) { return build_problem(parse_model_doc(text)); }

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline void dot_header(std::ostringstream& out, std::string_view name, std::size_t states,
                       State initial, const std::function<bool(State)>& is_final) {
  out << "digraph " << name << " {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (State q = 0; q < states; ++q)
    out << "  " << q << " [shape=" << (is_final(q) ? "doublecircle" : "circle") << "];\n";
  out << "  __start -> " << initial << ";\n";
}

}  // namespace detail

// GraphViz text. Nodes are the state ids; edges are emitted sorted by source,
// symbol and target, so equal automata give byte-identical output.
inline std::string export_dot(const Nfa& m, std::string_view name = "automaton") {
  std::ostringstream out;
  detail::dot_header(out, name, m.num_states(), m.initial(),
                     [&](State q) { return m.is_final(q); });
  for (State q = 0; q < m.num_states(); ++q)
    for (Symbol a = 0; a < m.alphabet().size(); ++a)
      for (State t : m.successors(q, a))
        out << "  " << q << " -> " << t << " [label=" << detail::dot_quote(m.alphabet().name(a))
            << "];\n";
  out << "}\n";
  return out.str();
}

inline std::string export_dot(const Dfa& d, std::string_view name = "automaton") {
  return export_dot(d.to_nfa(), name);
}

inline std::string export_dot(const Transducer& t, std::string_view name = "transducer") {
  std::ostringstream out;
  detail::dot_header(out, name, t.num_states(), t.initial(),
                     [&](State q) { return t.is_final(q); });
  auto sym = [&](Symbol s) { return s == kLambda ? std::string("eps") : t.alphabet().name(s); };
  for (State q = 0; q < t.num_states(); ++q)
    for (const auto& e : t.edges(q))
      out << "  " << q << " -> " << e.to << " [label="
          << detail::dot_quote(sym(e.in) + "/" + sym(e.out)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace rmcl
