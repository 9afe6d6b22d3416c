#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace finann {

using Elem = std::uint32_t;

/// Membership mask over the elements 0..order-1 of a finite group.
///
/// The mask is ordered as the unsigned integer whose bit i is set when element
/// i is a member ("canonical mask order"); `to_hex` prints that integer.
class ElementSet {
 public:
  enum class Kind { Set, Subgroup, Normal };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe, Kind kind = Kind::Set);
  static ElementSet of(std::size_t universe, std::span<const Elem> members, Kind kind = Kind::Set);
  static ElementSet full(std::size_t universe, Kind kind = Kind::Set);

  std::size_t universe() const noexcept { return universe_; }
  Kind kind() const noexcept { return kind_; }
  ElementSet& set_kind(Kind k) noexcept {
    kind_ = k;
    return *this;
  }
  bool is_subgroup() const noexcept { return kind_ != Kind::Set; }
  bool is_normal() const noexcept { return kind_ == Kind::Normal; }

  bool contains(Elem x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Elem x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_full() const noexcept { return size() == universe_; }
  bool is_subset_of(const ElementSet& other) const noexcept;

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;

  std::vector<Elem> members() const;
  std::string to_hex() const;

  /// Same members; the kind flag does not take part in comparisons.
  bool operator==(const ElementSet& other) const noexcept {
    return universe_ == other.universe_ && words_ == other.words_;
  }
  /// Canonical mask order (numeric value of the mask).
  std::strong_ordering operator<=>(const ElementSet& other) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  Kind kind_ = Kind::Set;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

}  // namespace finann
