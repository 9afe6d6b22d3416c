#include "finann/word.hpp"

#include <cstdlib>

#include "finann/error.hpp"

namespace finann {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
  return r;
}

constexpr std::size_t kMaxSyllables = 1U << 20;

}  // namespace

Word Word::letter(std::uint32_t gen, std::int64_t exp) {
  Word w;
  if (exp != 0) w.syllables.push_back({gen, exp});
  return w;
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& s : syllables) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return n;
}

bool Word::is_freely_reduced() const noexcept {
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (syllables[i].exp == 0) return false;
    if (i > 0 && syllables[i - 1].gen == syllables[i].gen) return false;
  }
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.syllables.insert(w.syllables.end(), b.syllables.begin(), b.syllables.end());
  return w;
}

Word inverse(const Word& w) {
  Word out;
  out.syllables.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back({it->gen, checked_mul(it->exp, -1)});
  return out;
}

Word power(const Word& w, std::int64_t k) {
  if (k == 0 || w.empty()) return {};
  const Word base = k < 0 ? inverse(w) : w;
  const std::int64_t times = k < 0 ? checked_mul(k, -1) : k;
  const Word reduced = free_reduce(base);
  if (reduced.syllables.size() == 1) {
    const auto& s = reduced.syllables.front();
    return Word::letter(s.gen, checked_mul(s.exp, times));
  }
  if (reduced.syllables.size() * static_cast<std::uint64_t>(times) > kMaxSyllables)
    throw Error(ErrorCode::InvalidArgument, "word power too long");
  Word out;
  for (std::int64_t i = 0; i < times; ++i)
    out.syllables.insert(out.syllables.end(), reduced.syllables.begin(), reduced.syllables.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& s : w.syllables) {
    if (s.exp == 0) continue;
    if (!out.syllables.empty() && out.syllables.back().gen == s.gen) {
      auto& top = out.syllables.back();
      top.exp = checked_add(top.exp, s.exp);
      if (top.exp == 0) out.syllables.pop_back();
    } else {
      out.syllables.push_back(s);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  auto& s = r.syllables;
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    const std::int64_t e = checked_add(s.front().exp, s.back().exp);
    s.pop_back();
    if (e == 0) {
      s.erase(s.begin());
    } else {
      s.front().exp = e;
    }
  }
  return r;
}

std::int64_t exponent_sum(const Word& w, std::uint32_t gen) {
  std::int64_t total = 0;
  for (const auto& s : w.syllables)
    if (s.gen == gen) total = checked_add(total, s.exp);
  return total;
}

}  // namespace finann
