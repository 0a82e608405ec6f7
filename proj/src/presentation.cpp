#include "grouph1/presentation.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace grouph1 {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_valid_name(std::string_view s) {
  if (s.empty() || !is_name_start(s[0])) return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

bool is_valid_label(std::string_view s) {
  for (char c : s) {
    if (is_name_char(c)) continue;
    if (c == '[' || c == ']' || c == ',' || c == '-') continue;
    return false;
  }
  return true;
}

// Character-level scanner over one logical line of the DSL.
class LineScanner {
 public:
  LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c, const std::string& what) {
    if (peek() != c) fail(what);
    ++pos_;
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, column(), what);
  }

  std::string read_name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_name_start(text_[pos_]))
      fail("expected a generator name");
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long read_exponent() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    long value = 0;
    try {
      value = std::stol(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("exponent out of range");
    }
    if (value == 0) fail("zero exponent");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

void append_power(Word& out, const Word& base, long exponent) {
  const Word& unit = exponent > 0 ? base : word_inverse(base);
  const long count = exponent > 0 ? exponent : -exponent;
  for (long k = 0; k < count; ++k) out.insert(out.end(), unit.begin(), unit.end());
}

// word := atom*, terminated by '=' , ')' or end of line.
Word parse_word(LineScanner& sc, const std::map<std::string, Index, std::less<>>& gens) {
  Word out;
  while (!sc.at_end()) {
    const char c = sc.peek();
    if (c == '=' || c == ')') break;
    if (c == '(') {
      sc.expect('(', "expected '('");
      Word inner = parse_word(sc, gens);
      sc.expect(')', "expected ')'");
      sc.expect('^', "expected '^' after ')'");
      append_power(out, inner, sc.read_exponent());
      continue;
    }
    const int col = sc.column();
    const std::string name = sc.read_name();
    const auto it = gens.find(name);
    if (it == gens.end())
      throw ParseError(sc.line(), col, "undeclared generator `" + name + "`");
    long exponent = 1;
    if (sc.peek() == '^') {
      sc.expect('^', "expected '^'");
      exponent = sc.read_exponent();
    }
    append_power(out, Word{Letter{it->second, 1}}, exponent);
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::optional<Index> GroupPresentation::generator_index(
    std::string_view generator_name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == generator_name) return static_cast<Index>(i);
  return std::nullopt;
}

GroupPresentation parse_presentation(const std::string& text) {
  GroupPresentation p;
  std::map<std::string, Index, std::less<>> gens;
  bool saw_group = false;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    LineScanner sc(line, line_no);
    const std::string keyword = sc.read_name();
    if (keyword == "group") {
      if (saw_group) sc.fail("duplicate group line");
      saw_group = true;
      p.name = trim(line.substr(static_cast<std::size_t>(sc.column()) - 1));
      if (p.name.empty()) sc.fail("expected a group name");
      continue;
    }
    if (keyword == "gen") {
      if (sc.at_end()) sc.fail("expected at least one generator name");
      while (!sc.at_end()) {
        const int col = sc.column();
        const std::string name = sc.read_name();
        if (gens.count(name))
          throw ParseError(line_no, col, "duplicate generator `" + name + "`");
        gens.emplace(name, p.generator_count());
        p.generators.push_back(GeneratorSymbol{name});
      }
      continue;
    }
    if (keyword == "rel") {
      Relation rel;
      // A leading NAME-like token followed by ':' is a label.
      const auto colon = line.find(':');
      const auto equals = line.find('=');
      std::string body = line.substr(3);
      if (colon != std::string::npos && (equals == std::string::npos || colon < equals)) {
        rel.label = trim(line.substr(3, colon - 3));
        if (!is_valid_label(rel.label))
          throw ParseError(line_no, 4, "malformed relation label");
        body = line.substr(colon + 1);
      }
      LineScanner body_sc(body, line_no);
      rel.lhs = parse_word(body_sc, gens);
      body_sc.expect('=', "expected '=' between the two sides of a relation");
      rel.rhs = parse_word(body_sc, gens);
      if (!body_sc.at_end()) body_sc.fail("trailing input after relation");
      p.relations.push_back(std::move(rel));
      continue;
    }
    throw ParseError(line_no, 1, "unknown directive `" + keyword + "`");
  }
  return p;
}

namespace {

void format_run(std::ostream& os, const GroupPresentation& p, const Letter& l,
                long count) {
  os << p.generators[static_cast<std::size_t>(l.generator)].name;
  const long exponent = l.exponent > 0 ? count : -count;
  if (exponent != 1) os << '^' << exponent;
}

void format_flat(std::ostream& os, const GroupPresentation& p, const Word& w) {
  bool first = true;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << ' ';
    format_run(os, p, w[i], static_cast<long>(j - i));
    first = false;
    i = j;
  }
}

}  // namespace

std::string format_word(const GroupPresentation& p, const Word& w) {
  std::ostringstream os;
  if (w.empty()) return "";
  // Roll a globally periodic word back into (prefix)^k for readability; the
  // parser re-expands it to the identical letter sequence.
  const std::size_t n = w.size();
  for (std::size_t period = 2; period * 2 <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i)
      periodic = (w[i] == w[i % period]);
    if (!periodic) continue;
    bool single_run = true;
    for (std::size_t i = 1; i < period && single_run; ++i)
      single_run = (w[i] == w[0]);
    if (single_run) continue;
    os << '(';
    format_flat(os, p, Word(w.begin(), w.begin() + static_cast<long>(period)));
    os << ")^" << (n / period);
    return os.str();
  }
  format_flat(os, p, w);
  return os.str();
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  if (!p.name.empty()) os << "group " << p.name << '\n';
  if (!p.generators.empty()) {
    os << "gen";
    for (const auto& g : p.generators) os << ' ' << g.name;
    os << '\n';
  }
  for (const auto& r : p.relations) {
    os << "rel ";
    if (!r.label.empty()) os << r.label << ": ";
    os << format_word(p, r.lhs) << " = " << format_word(p, r.rhs) << '\n';
  }
  return os.str();
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->generator, -it->exponent});
  return out;
}

std::vector<std::string> validate(const GroupPresentation& p) {
  std::vector<std::string> issues;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const std::string& name = p.generators[i].name;
    if (!is_valid_name(name))
      issues.push_back("generator " + std::to_string(i) + ": malformed name `" +
                       name + "`");
    if (!seen.insert(name).second)
      issues.push_back("duplicate generator name `" + name + "`");
  }
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const Relation& r = p.relations[i];
    const std::string where = "relation " + std::to_string(i);
    if (!is_valid_label(r.label))
      issues.push_back(where + ": label `" + r.label + "` cannot round-trip");
    if (r.lhs.empty() && r.rhs.empty())
      issues.push_back(where + ": both sides are empty");
    for (const Word* side : {&r.lhs, &r.rhs})
      for (const Letter& l : *side) {
        if (l.generator < 0 || l.generator >= p.generator_count()) {
          issues.push_back(where + ": letter references generator index " +
                           std::to_string(l.generator) + " out of range");
          break;
        }
        if (l.exponent != 1 && l.exponent != -1) {
          issues.push_back(where + ": letter has exponent " +
                           std::to_string(l.exponent));
          break;
        }
      }
  }
  return issues;
}

}  // namespace grouph1
