#include "finann/element_set.hpp"

#include <bit>

namespace finann {

ElementSet::ElementSet(std::size_t universe, Kind kind)
    : universe_(universe), kind_(kind), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::of(std::size_t universe, std::span<const Elem> members, Kind kind) {
  ElementSet s(universe, kind);
  for (Elem x : members) s.insert(x);
  return s;
}

ElementSet ElementSet::full(std::size_t universe, Kind kind) {
  ElementSet s(universe, kind);
  for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string ElementSet::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  bool leading = true;
  for (std::size_t w = words_.size(); w-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const auto d = static_cast<unsigned>((words_[w] >> (nib * 4)) & 0xF);
      if (leading && d == 0) continue;
      leading = false;
      out.push_back(digits[d]);
    }
  }
  if (out.empty()) out = "0";
  return "0x" + out;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const noexcept {
  if (universe_ != other.universe_) return universe_ <=> other.universe_;
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != other.words_[w]) return words_[w] <=> other.words_[w];
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = s.universe() * 0x9e3779b97f4a7c15ULL;
  for (auto w : s.words()) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace finann
