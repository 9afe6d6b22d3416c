#include "finann/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "finann/error.hpp"

namespace finann {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    Presentation p;
    expect('<');
    skip_ws();
    if (peek() != '|') {
      for (;;) {
        const auto at = pos_;
        std::string name = parse_name();
        if (p.index_of(name)) fail(at, "duplicate generator '" + name + "'");
        p.generators.push_back(std::move(name));
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('|');
    gens_ = &p;
    skip_ws();
    if (peek() != '>') {
      if (p.generators.empty())
        throw Error(ErrorCode::EmptyGeneratorList, "relators given for an empty generator list at offset " +
                                                       std::to_string(pos_));
      for (;;) {
        p.relators.push_back(free_reduce(relator()));
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
    return p;
  }

  Word standalone_word(const Presentation& p) {
    gens_ = &p;
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
    return free_reduce(w);
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(at));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      const std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      fail(pos_, std::string("expected '") + c + "', got " + got);
    }
    ++pos_;
  }

  std::string parse_name() {
    skip_ws();
    if (!is_name_start(peek())) fail(pos_, "expected a generator name");
    const auto start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t parse_int() {
    skip_ws();
    const auto start = pos_;
    if (peek() == '-') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(start, "expected an integer");
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail(start, "integer out of range");
    return value;
  }

  std::optional<std::int64_t> optional_exponent() {
    skip_ws();
    if (peek() != '^') return std::nullopt;
    ++pos_;
    return parse_int();
  }

  Word relator() {
    Word lhs = word();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Word rhs = word();
      return concat(lhs, inverse(rhs));
    }
    return lhs;
  }

  bool term_start() {
    skip_ws();
    const char c = peek();
    return is_name_start(c) || c == '[' || c == '(';
  }

  Word word() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return {};
    }
    if (!term_start()) fail(pos_, "expected a word");
    Word w;
    while (term_start()) w = concat(w, term());
    return w;
  }

  Word term() {
    skip_ws();
    const char c = peek();
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return concat(concat(u, v), concat(inverse(u), inverse(v)));
    }
    if (c == '(') {
      ++pos_;
      Word inner = word();
      expect(')');
      const auto e = optional_exponent();
      return e ? power(inner, *e) : inner;
    }
    const auto at = pos_;
    const std::string name = parse_name();
    const auto idx = gens_->index_of(name);
    if (!idx)
      throw Error(ErrorCode::UnknownGenerator, "'" + name + "' at offset " + std::to_string(at));
    const auto e = optional_exponent();
    return Word::letter(*idx, e.value_or(1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Presentation* gens_ = nullptr;
};

std::string unique_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.contains(base)) return base;
  for (int k = 2;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!taken.contains(cand)) return cand;
  }
}

}  // namespace

std::optional<std::uint32_t> Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

bool Presentation::is_trivial_presentation() const noexcept {
  return generators.empty();
}

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(const Presentation& p, std::string_view text) { return Parser(text).standalone_word(p); }

std::string render_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.syllables.size(); ++i) {
    const auto& s = w.syllables[i];
    os << (i ? " " : "") << p.generators.at(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

std::string render(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << p.generators[i];
  os << (p.generators.empty() ? "| " : " | ");
  for (std::size_t i = 0; i < p.relators.size(); ++i) os << (i ? ", " : "") << render_word(p, p.relators[i]);
  os << (p.relators.empty() ? ">" : " >");
  return os.str();
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& s : p.relators[i].syllables) m(i, s.gen) += s.exp;
  return m;
}

Presentation free_product(const Presentation& p, const Presentation& q) {
  Presentation out = p;
  std::set<std::string> taken(p.generators.begin(), p.generators.end());
  taken.insert(q.generators.begin(), q.generators.end());
  std::set<std::string> used(p.generators.begin(), p.generators.end());
  const auto offset = static_cast<std::uint32_t>(p.generators.size());
  for (const auto& name : q.generators) {
    std::string fresh = used.contains(name) ? unique_name(name, taken) : name;
    taken.insert(fresh);
    used.insert(fresh);
    out.generators.push_back(std::move(fresh));
  }
  for (const auto& r : q.relators) {
    Word shifted = r;
    for (auto& s : shifted.syllables) s.gen += offset;
    out.relators.push_back(std::move(shifted));
  }
  return out;
}

Presentation direct_product_presentation(const Presentation& p, const Presentation& q) {
  Presentation out = free_product(p, q);
  const auto offset = static_cast<std::uint32_t>(p.generators.size());
  for (std::uint32_t g = 0; g < p.generators.size(); ++g)
    for (std::uint32_t h = 0; h < q.generators.size(); ++h) {
      Word c;
      c.syllables = {{g, 1}, {offset + h, 1}, {g, -1}, {offset + h, -1}};
      out.relators.push_back(std::move(c));
    }
  return out;
}

SimplifyResult simplify_trivial_relators(const Presentation& p) {
  SimplifyResult res;
  Presentation cur = p;
  for (;;) {
    std::vector<Word> kept;
    std::optional<std::uint32_t> kill;
    for (const auto& r : cur.relators) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      if (!kill && c.syllables.size() == 1 && (c.syllables[0].exp == 1 || c.syllables[0].exp == -1))
        kill = c.syllables[0].gen;
      kept.push_back(std::move(c));
    }
    cur.relators = std::move(kept);
    if (!kill) break;
    const std::uint32_t g = *kill;
    res.removed.push_back(cur.generators[g]);
    cur.generators.erase(cur.generators.begin() + g);
    for (auto& r : cur.relators) {
      Word next;
      for (const auto& s : r.syllables) {
        if (s.gen == g) continue;
        next.syllables.push_back({s.gen > g ? s.gen - 1 : s.gen, s.exp});
      }
      r = free_reduce(next);
    }
  }
  res.collapsed = cur.generators.empty();
  res.presentation = std::move(cur);
  return res;
}

}  // namespace finann
