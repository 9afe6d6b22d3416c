#include "finann/witness.hpp"

#include <algorithm>
#include <numeric>

#include "finann/catalog.hpp"
#include "finann/classify.hpp"
#include "finann/error.hpp"
#include "finann/group_structure.hpp"

namespace finann {

namespace {

constexpr std::size_t kCacheLimit = 2'000'000;  // total cached assignments per search

void check_bound(std::size_t bound) {
  if (bound > kMaxWitnessBound)
    throw Error(ErrorCode::InvalidArgument, "order bound " + std::to_string(bound) +
                                                " exceeds the target catalog limit " +
                                                std::to_string(kMaxWitnessBound));
}

std::uint64_t abs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

// Independent evaluation: plain repeated multiplication, exponents reduced
// modulo |H| only.
Elem evaluate_naive(const FiniteGroup& h, const Assignment& images, const Word& w) {
  Elem acc = h.identity();
  for (const auto& s : w.syllables) {
    Elem letter = images.at(s.gen);
    if (s.exp < 0) {
      for (Elem x = 0; x < h.order(); ++x)
        if (h.mul(letter, x) == h.identity()) {
          letter = x;
          break;
        }
    }
    const std::uint64_t reps = abs64(s.exp) % h.order();
    for (std::uint64_t k = 0; k < reps; ++k) acc = h.mul(acc, letter);
  }
  return acc;
}

std::size_t generated_size_naive(const FiniteGroup& h, const Assignment& images) {
  std::vector<char> seen(h.order(), 0);
  std::vector<Elem> frontier{h.identity()};
  seen[h.identity()] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (const Elem g : images) {
      const Elem y = h.mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

}  // namespace

Elem evaluate(const FiniteGroup& h, const Assignment& images, const Word& w) {
  Elem acc = h.identity();
  for (const auto& s : w.syllables) acc = h.mul(acc, h.pow(images[s.gen], s.exp));
  return acc;
}

void for_each_surjection(const Presentation& p, const FiniteGroup& h,
                         const std::function<bool(const Assignment&)>& visit, std::uint64_t budget) {
  const std::size_t k = p.generators.size();
  if (k == 0) {
    if (h.is_trivial()) visit({});
    return;
  }

  // Generator orders allowed by relators of the form g^m.
  std::vector<std::uint64_t> order_divides(k, 0);
  std::vector<std::vector<const Word*>> check_at(k);
  std::vector<Word> reduced;
  reduced.reserve(p.relators.size());
  for (const auto& r : p.relators) reduced.push_back(cyclic_reduce(r));
  for (const auto& r : reduced) {
    if (r.empty()) continue;
    if (r.syllables.size() == 1) {
      auto& d = order_divides[r.syllables[0].gen];
      d = std::gcd(d, abs64(r.syllables[0].exp));
      continue;
    }
    std::uint32_t last = 0;
    for (const auto& s : r.syllables) last = std::max(last, s.gen);
    check_at[last].push_back(&r);
  }

  std::vector<std::vector<Elem>> candidates(k);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (Elem x = 0; x < h.order(); ++x)
      if (order_divides[i] == 0 || order_divides[i] % h.element_order(x) == 0) candidates[i].push_back(x);
    if (candidates[i].empty()) return;
    if (space > budget / candidates[i].size() + 1) space = budget + 1;
    else space *= candidates[i].size();
  }
  if (space > budget)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "assignment space onto " + h.name() + " exceeds the search budget " + std::to_string(budget));

  Assignment images(k, h.identity());
  bool stop = false;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      if (subgroup_closure(h, std::span<const Elem>(images)).is_full()) stop = !visit(images);
      return;
    }
    for (const Elem x : candidates[i]) {
      images[i] = x;
      bool ok = true;
      for (const Word* r : check_at[i])
        if (evaluate(h, images, *r) != h.identity()) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
      if (stop) return;
    }
  };
  dfs(dfs, 0);
}

std::vector<Assignment> enumerate_surjections(const Presentation& p, const FiniteGroup& h, std::uint64_t budget) {
  std::vector<Assignment> out;
  for_each_surjection(
      p, h,
      [&](const Assignment& a) {
        out.push_back(a);
        return true;
      },
      budget);
  return out;
}

std::optional<std::string> verify_witness(const Witness& w, std::vector<std::string>* transcript) {
  const FiniteGroup& h = w.target;
  const Presentation& p = w.source;
  auto note = [&](std::string line) {
    if (transcript) transcript->push_back(std::move(line));
  };
  if (h.order() < 2) return "target is trivial";
  if (w.images.size() != p.generators.size()) return "image count does not match generator count";
  for (std::size_t i = 0; i < w.images.size(); ++i) {
    if (w.images[i] >= h.order()) return "image of " + p.generators[i] + " is not an element of the target";
    note(p.generators[i] + " -> " + std::to_string(w.images[i]));
  }
  for (const auto& r : p.relators) {
    const Elem v = evaluate_naive(h, w.images, r);
    note("relator " + render_word(p, r) + " -> " + std::to_string(v));
    if (v != h.identity()) return "relator " + render_word(p, r) + " does not map to the identity";
  }
  const std::size_t gen = generated_size_naive(h, w.images);
  note("images generate " + std::to_string(gen) + " of " + std::to_string(h.order()) + " elements");
  if (gen != h.order()) return "images do not generate " + h.name();
  const Elem v = evaluate_naive(h, w.images, w.word);
  note("word " + render_word(p, w.word) + " -> " + std::to_string(v));
  if (v != h.identity()) return "word does not map to the identity";
  return std::nullopt;
}

AnnihilatorSearch::AnnihilatorSearch(Presentation p, std::size_t bound, std::uint64_t budget)
    : p_(std::move(p)), bound_(bound), budget_(budget) {
  check_bound(bound);
  targets_ = witness_targets(bound);
}

const std::vector<Assignment>* AnnihilatorSearch::cached(std::size_t target) {
  auto it = cache_.find(target);
  if (it == cache_.end()) {
    std::optional<std::vector<Assignment>> list;
    std::vector<Assignment> all;
    bool overflow = false;
    for_each_surjection(
        p_, targets_[target],
        [&](const Assignment& a) {
          if (cached_total_ + all.size() >= kCacheLimit) {
            overflow = true;
            return false;
          }
          all.push_back(a);
          return true;
        },
        budget_);
    if (!overflow) {
      cached_total_ += all.size();
      list = std::move(all);
    }
    it = cache_.emplace(target, std::move(list)).first;
  }
  return it->second ? &*it->second : nullptr;
}

std::optional<Witness> AnnihilatorSearch::find(const Word& w) {
  for (std::size_t t = 0; t < targets_.size(); ++t) {
    const FiniteGroup& h = targets_[t];
    std::optional<Assignment> hit;
    if (const auto* list = cached(t)) {
      for (const auto& a : *list)
        if (evaluate(h, a, w) == h.identity()) {
          hit = a;
          break;
        }
    } else {
      for_each_surjection(
          p_, h,
          [&](const Assignment& a) {
            if (evaluate(h, a, w) != h.identity()) return true;
            hit = a;
            return false;
          },
          budget_);
    }
    if (!hit) continue;
    Witness out{p_, w, h, *hit, {}, false};
    const auto failure = verify_witness(out, &out.check);
    if (failure) throw Error(ErrorCode::InvalidArgument, "internal witness check failed: " + *failure);
    out.verified = true;
    return out;
  }
  return std::nullopt;
}

std::optional<Witness> find_annihilator(const Presentation& p, const Word& w, std::size_t bound,
                                        std::uint64_t budget) {
  check_bound(bound);
  for (const auto& h : witness_targets(bound)) {
    std::optional<Assignment> hit;
    for_each_surjection(
        p, h,
        [&](const Assignment& a) {
          if (evaluate(h, a, w) != h.identity()) return true;
          hit = a;
          return false;
        },
        budget);
    if (!hit) continue;
    Witness out{p, w, h, *hit, {}, false};
    const auto failure = verify_witness(out, &out.check);
    if (failure) throw Error(ErrorCode::InvalidArgument, "internal witness check failed: " + *failure);
    out.verified = true;
    return out;
  }
  return std::nullopt;
}

std::optional<Witness> nontrivial_quotient_exists(const Presentation& p, std::size_t bound, std::uint64_t budget) {
  return find_annihilator(p, Word{}, bound, budget);
}

std::vector<Word> shortlex_words(std::size_t generator_count, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  if (generator_count == 0) return out;
  // Letters 2g and 2g+1 stand for g and g^-1.
  std::vector<std::vector<std::uint32_t>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : layer)
      for (std::uint32_t l = 0; l < 2 * generator_count; ++l) {
        if (!prefix.empty() && (prefix.back() ^ 1U) == l) continue;
        auto w = prefix;
        w.push_back(l);
        next.push_back(std::move(w));
      }
    for (const auto& letters : next) {
      Word w;
      for (const auto l : letters) w = concat(w, Word::letter(l / 2, (l & 1U) ? -1 : 1));
      w = free_reduce(w);
      out.push_back(std::move(w));
    }
    layer = std::move(next);
  }
  return out;
}

std::string_view to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Witnessed: return "witnessed";
    case ScanStatus::Unwitnessed: return "unwitnessed";
    case ScanStatus::BoundTooSmall: return "bound too small";
  }
  return "unwitnessed";
}

std::size_t ScanReport::witnessed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const ScanEntry& e) {
    return e.status == ScanStatus::Witnessed;
  }));
}

std::size_t ScanReport::unwitnessed() const { return entries.size() - witnessed(); }

ScanReport fa_scan(const Presentation& p, std::size_t max_length, std::size_t bound, std::uint64_t budget) {
  ScanReport report;
  report.source = p;
  report.max_length = max_length;
  report.bound = bound;
  report.classified_fa = classify_fa(p).status == Status::FA;
  AnnihilatorSearch search(p, bound, budget);
  for (auto& w : shortlex_words(p.generators.size(), max_length)) {
    ScanEntry e;
    e.witness = search.find(w);
    e.word = std::move(w);
    if (e.witness) e.status = ScanStatus::Witnessed;
    else e.status = report.classified_fa ? ScanStatus::BoundTooSmall : ScanStatus::Unwitnessed;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace finann
