#include "finann/covering.hpp"

#include <algorithm>

#include "finann/abelian.hpp"
#include "finann/error.hpp"
#include "finann/group_structure.hpp"

namespace finann {

namespace {

// Bit j of membership[x] is set when maximal subgroup j contains x.
using Membership = std::vector<std::uint64_t>;

std::vector<Membership> membership_table(std::size_t order, const std::vector<ElementSet>& subgroups) {
  const std::size_t words = (subgroups.size() + 63) / 64;
  std::vector<Membership> table(order, Membership(words, 0));
  for (std::size_t j = 0; j < subgroups.size(); ++j)
    for (Elem x : subgroups[j].members()) table[x][j / 64] |= std::uint64_t{1} << (j % 64);
  return table;
}

bool any_bit(const Membership& m) {
  return std::any_of(m.begin(), m.end(), [](std::uint64_t w) { return w != 0; });
}

Membership intersect(const Membership& a, const Membership& b) {
  Membership out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

}  // namespace

std::optional<std::vector<ElementSet>> greedy_subcover(std::size_t order, std::vector<ElementSet> subgroups) {
  std::sort(subgroups.begin(), subgroups.end(), [](const ElementSet& a, const ElementSet& b) {
    const auto sa = a.size(), sb = b.size();
    return sa != sb ? sa > sb : a < b;
  });
  ElementSet covered(order);
  std::vector<ElementSet> chosen;
  for (auto& s : subgroups) {
    if (covered.is_full()) break;
    if (s.is_subset_of(covered)) continue;
    covered |= s;
    chosen.push_back(std::move(s));
  }
  if (!covered.is_full()) return std::nullopt;
  return chosen;
}

CoverReport is_fa_finite(const FiniteGroup& g, std::size_t cap) {
  CoverReport report;
  report.group = g.name();
  report.n = 1;
  if (g.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded, "is_fa_finite: |" + g.name() + "| exceeds cap " + std::to_string(cap));
  if (g.is_trivial()) {
    // The trivial group is not F-A by convention.
    report.uncovered = {0};
    return report;
  }
  report.cover = maximal_normal_subgroups(g, cap);
  ElementSet covered(g.order());
  for (const auto& m : report.cover) covered |= m;
  if (covered.is_full()) {
    report.verdict = true;
    report.subcover = greedy_subcover(g.order(), report.cover).value();
  } else {
    for (Elem x = 0; x < g.order(); ++x)
      if (!covered.contains(x)) {
        report.uncovered = {x};
        break;
      }
  }
  return report;
}

CoverReport is_nfa_finite(const FiniteGroup& g, std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n == 1) return is_fa_finite(g, cap);
  CoverReport report;
  report.group = g.name();
  report.n = n;
  if (g.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded, "is_nfa_finite: |" + g.name() + "| exceeds cap " + std::to_string(cap));
  if (g.is_trivial()) {
    report.uncovered = {0};
    return report;
  }
  report.cover = maximal_normal_subgroups(g, cap);
  const auto member = membership_table(g.order(), report.cover);
  const std::size_t total = g.order();
  const std::size_t k = std::min(n, total);
  std::vector<Elem> subset;

  // Lexicographic scan of k-subsets; stops at the first prefix whose entries
  // share no maximal normal subgroup and pads it with the next smallest ids.
  auto scan = [&](auto&& self, std::size_t start, const Membership& common) -> bool {
    if (subset.size() == k) return true;
    const std::size_t need = k - subset.size();
    for (std::size_t i = start; i + need <= total; ++i) {
      subset.push_back(static_cast<Elem>(i));
      Membership next = intersect(common, member[i]);
      if (!any_bit(next)) {
        for (std::size_t j = 1; j < need; ++j) subset.push_back(static_cast<Elem>(i + j));
        return false;
      }
      if (!self(self, i + 1, next)) return false;
      subset.pop_back();
    }
    return true;
  };
  Membership all(member.front().size(), ~std::uint64_t{0});
  if (scan(scan, 0, all)) {
    report.verdict = true;
  } else {
    report.uncovered = subset;
  }
  return report;
}

std::optional<ElementSet> fa_witness_finite(const FiniteGroup& g, Elem element, std::size_t cap) {
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "the trivial group has no proper normal subgroups");
  if (element >= g.order()) throw Error(ErrorCode::InvalidArgument, "element id out of range");
  std::optional<ElementSet> best;
  for (auto& m : maximal_normal_subgroups(g, cap)) {
    if (!m.contains(element)) continue;
    if (!best || m < *best) best = std::move(m);
  }
  return best;
}

bool is_simple_annihilated_finite(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "is_simple_annihilated_finite: |" + g.name() + "| exceeds cap " + std::to_string(cap));
  if (g.is_trivial()) return false;
  // In a finite group every proper normal subgroup lies in a maximal one, so
  // g is covered exactly when its normal closure is proper.
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem seed[] = {x};
    if (normal_closure(g, seed).is_full()) return false;
  }
  return true;
}

bool TheoremChecks::all_pass() const { return failures().empty(); }

std::vector<std::string> TheoremChecks::failures() const {
  std::vector<std::string> out;
  if (!fa_matches_noncyclic) out.emplace_back("fa-vs-noncyclic-abelianisation");
  if (!fa_matches_prime_rank) out.emplace_back("fa-vs-elementary-rank-2");
  for (const auto& [n, ok] : nfa_matches)
    if (!ok) out.push_back("nfa-vs-abelian-weight(n=" + std::to_string(n) + ")");
  if (!nfa_monotone) out.emplace_back("nfa-monotonicity");
  if (!subcover_valid) out.emplace_back("finite-subcover");
  if (!weight_consistent) out.emplace_back("weight-vs-abelianisation");
  if (!perfect_weight_one) out.emplace_back("perfect-weight-one");
  return out;
}

TheoremChecks verify_finite_theorems(const FiniteGroup& g, const VerifyOptions& options) {
  TheoremChecks t;
  t.group = g.name();
  t.order = g.order();
  const auto ab = abelianisation_invariants(g);
  t.abelianisation = ab.to_string();
  t.ab_weight = abelian_weight(ab);
  t.perfect = ab.is_trivial();

  const auto fa = is_fa_finite(g, options.caps.normal);
  t.fa = fa.verdict;
  t.fa_matches_noncyclic = t.fa == (ab.factors.size() >= 2);

  bool some_rank_two = false;
  for (std::uint64_t p = 2; p <= g.order(); ++p) {
    if (!is_prime(BigInt(p))) continue;
    if (elementary_p_rank(ab, BigInt(p)) >= 2) some_rank_two = true;
  }
  t.fa_matches_prime_rank = t.fa == some_rank_two;

  if (t.fa) {
    ElementSet covered(g.order());
    for (const auto& s : fa.subcover) covered |= s;
    t.subcover_valid = covered.is_full() && !fa.subcover.empty();
  }

  std::vector<bool> nfa(options.nfa_max + 1, false);
  for (std::size_t n = 1; n <= options.nfa_max; ++n) {
    nfa[n] = is_nfa_finite(g, n, options.caps.normal).verdict;
    t.nfa_matches.emplace_back(n, nfa[n] == (t.ab_weight >= n + 1));
    if (nfa[n])
      for (std::size_t k = 1; k < n; ++k)
        if (!nfa[k]) t.nfa_monotone = false;
  }

  if (options.check_weight) {
    const auto w = weight_bruteforce(g, options.caps.weight).weight;
    t.weight = w;
    t.weight_consistent = t.ab_weight >= 2 ? w == t.ab_weight : w <= 1;
    if (t.perfect && !g.is_trivial()) t.perfect_weight_one = w == 1;
  }
  return t;
}

}  // namespace finann
