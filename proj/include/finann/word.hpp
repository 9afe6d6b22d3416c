#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace finann {

/// g^exp with a nonzero exponent.
struct Syllable {
  std::uint32_t gen = 0;
  std::int64_t exp = 0;
  bool operator==(const Syllable&) const = default;
};

/// A word in the generators and their inverses, stored as syllables.
struct Word {
  std::vector<Syllable> syllables;

  static Word letter(std::uint32_t gen, std::int64_t exp = 1);

  bool empty() const noexcept { return syllables.empty(); }
  /// Number of letters, i.e. the sum of |exp|.
  std::uint64_t length() const noexcept;
  /// True when no syllable has exponent 0 and neighbours use distinct generators.
  bool is_freely_reduced() const noexcept;

  bool operator==(const Word&) const = default;
};

Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
/// w^k for any integer k (k = 0 gives the empty word).
Word power(const Word& w, std::int64_t k);

/// Merges adjacent syllables of the same generator and drops zero
/// exponents until none remain.
Word free_reduce(const Word& w);

/// Free reduction followed by cancellation between the two ends.
Word cyclic_reduce(const Word& w);

/// Exponent sum of `gen` in `w`.
std::int64_t exponent_sum(const Word& w, std::uint32_t gen);

}  // namespace finann
