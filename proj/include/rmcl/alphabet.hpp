#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rmcl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("automata are defined over different alphabets") {}
};

using Symbol = std::uint16_t;
using State = std::uint32_t;
inline constexpr State kNoState = static_cast<State>(-1);

// A configuration: a sequence of symbol indices. The empty vector is lambda.
using Word = std::vector<Symbol>;

// Ordered set of symbol names. Copies share the underlying storage, so
// automata can carry their alphabet by value.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) {
    if (names.empty()) throw Error("alphabet must not be empty");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw Error("alphabet symbol names must be non-empty");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw Error("duplicate alphabet symbol '" + names[i] + "'");
    }
    if (names.size() > 0xFFFF) throw Error("alphabet too large");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_ ? names_->size() : 0; }
  bool empty() const { return size() == 0; }

  const std::string& name(Symbol s) const { return names_->at(s); }
  const std::vector<std::string>& names() const {
    static const std::vector<std::string> none;
    return names_ ? *names_ : none;
  }

  std::optional<Symbol> find(std::string_view name) const {
    if (!names_) return std::nullopt;
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) return std::nullopt;
    return static_cast<Symbol>(it - names_->begin());
  }

  Symbol at(std::string_view name) const {
    if (auto s = find(name)) return *s;
    throw Error("unknown symbol '" + std::string(name) + "'");
  }

  bool contains(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < size(); });
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    if (a.names_ == b.names_) return true;
    return a.names() == b.names();
  }

  // Symbols are written back to back when every name is a single character
  // ("TNN"), otherwise separated by blanks ("req ack ack"). Lambda is "eps".
  std::string format(const Word& w) const {
    if (w.empty()) return "eps";
    const bool compact = std::all_of(names().begin(), names().end(),
                                     [](const std::string& n) { return n.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i) out += ' ';
      out += name(w[i]);
    }
    return out;
  }

  // Inverse of format(). Accepts both the compact and blank-separated forms.
  Word parse_word(std::string_view text) const {
    Word w;
    std::string trimmed(text);
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed.empty() || trimmed == "eps") return w;
    if (trimmed.find(' ') != std::string::npos) {
      std::istringstream in(trimmed);
      std::string tok;
      while (in >> tok) w.push_back(at(tok));
      return w;
    }
    if (auto s = find(trimmed)) return {*s};
    for (char c : trimmed) w.push_back(at(std::string(1, c)));
    return w;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw AlphabetMismatch();
}

}  // namespace rmcl
