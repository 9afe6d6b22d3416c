#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finann/int_matrix.hpp"
#include "finann/word.hpp"

namespace finann {

/// <generators | relators>. Relators are stored freely reduced.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::optional<std::uint32_t> index_of(std::string_view name) const;
  std::size_t generator_count() const noexcept { return generators.size(); }
  bool is_trivial_presentation() const noexcept;

  bool operator==(const Presentation&) const = default;
};

/// Parses
///   presentation := '<' genlist '|' relist '>'
///   genlist := name (',' name)* | empty      relist := relator (',' relator)* | empty
///   relator := word | word '=' word           word := term+ | '1'
///   term := name ('^' int)? | '[' word ',' word ']' | '(' word ')' ('^' int)?
/// with insignificant whitespace. [u,v] expands to u v u^-1 v^-1 and u = v
/// becomes u v^-1.
Presentation parse_presentation(std::string_view text);

/// Parses a single word over the generators of `p` (same `word` grammar).
Word parse_word(const Presentation& p, std::string_view text);

/// Canonical text form: `< a, b | a^2, a b a^-1 b^-1 >`; the empty word is `1`.
std::string render(const Presentation& p);
std::string render_word(const Presentation& p, const Word& w);

/// Row i, column j: exponent sum of generator j in relator i.
IntMatrix exponent_matrix(const Presentation& p);

/// Disjoint union of generators (names from `q` that collide get a `_2`,
/// `_3`, ... suffix) and concatenated relators.
Presentation free_product(const Presentation& p, const Presentation& q);

/// Free product plus every commutator [g, h] with g from `p`, h from `q`.
Presentation direct_product_presentation(const Presentation& p, const Presentation& q);

struct SimplifyResult {
  Presentation presentation;
  bool collapsed = false;  ///< no generators remain: the group is trivial
  std::vector<std::string> removed;  ///< generators killed, in order
};

/// Repeatedly cyclically reduces every relator, drops empty ones, and deletes
/// any generator g that appears as a relator g or g^-1, substituting the empty
/// word for it everywhere.
SimplifyResult simplify_trivial_relators(const Presentation& p);

}  // namespace finann
