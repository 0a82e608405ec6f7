#pragma once

#include "grouph1/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grouph1 {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct GeneratorSymbol {
  std::string name;

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

struct Letter {
  Index generator = 0;  // index into GroupPresentation::generators
  int exponent = 1;     // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Relation {
  Word lhs;
  Word rhs;
  std::string label;  // optional tag, e.g. "A5"

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct GroupPresentation {
  std::string name;
  std::vector<GeneratorSymbol> generators;
  std::vector<Relation> relations;

  Index generator_count() const { return static_cast<Index>(generators.size()); }
  std::optional<Index> generator_index(std::string_view generator_name) const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Parses the line-oriented presentation DSL:
//   # comment to end of line
//   group <name>                      (optional, at most once)
//   gen <name> <name> ...             (cumulative)
//   rel [<label>:] <word> = <word>    (empty right side = identity)
// A word is a whitespace-separated sequence of atoms; an atom is NAME,
// NAME^INT, or ( word )^INT with INT a nonzero signed decimal. Powers and
// parenthesized subwords are expanded into flat letter sequences.
GroupPresentation parse_presentation(const std::string& text);

std::string format_presentation(const GroupPresentation& p);
std::string format_word(const GroupPresentation& p, const Word& w);

// Removes adjacent cancelling pairs until none remain.
Word free_reduce(Word w);

// Reversed sequence with negated exponents.
Word word_inverse(const Word& w);

// Structural issues as data: duplicate or malformed generator names, letters
// out of range or with exponents other than +-1, relations with two empty
// sides, labels that cannot survive a DSL round trip.
std::vector<std::string> validate(const GroupPresentation& p);

}  // namespace grouph1
