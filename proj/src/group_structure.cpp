#include "finann/group_structure.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "finann/error.hpp"
#include "group_assembler.hpp"

namespace finann {

namespace {

void require_cap(const FiniteGroup& g, std::size_t cap, const char* what) {
  if (g.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded, std::string(what) + ": |" + g.name() + "| = " +
                                                 std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
}

bool divides_prime_power(std::uint64_t d, std::uint64_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  return q % d == 0;
}

}  // namespace

ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  ElementSet out(g.order(), ElementSet::Kind::Subgroup);
  std::vector<Elem> queue{0};
  out.insert(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem s : seeds) {
      const Elem y = g.mul(queue[head], s);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seeds) {
  const auto m = seeds.members();
  return subgroup_closure(g, m);
}

ElementSet normal_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  ElementSet conj(g.order());
  for (Elem s : seeds)
    for (Elem x = 0; x < g.order(); ++x) conj.insert(g.conjugate(s, x));
  return subgroup_closure(g, conj).set_kind(ElementSet::Kind::Normal);
}

ElementSet normal_closure(const FiniteGroup& g, const ElementSet& seeds) {
  const auto m = seeds.members();
  return normal_closure(g, m);
}

ElementSet join_normal(const FiniteGroup& g, const ElementSet& n, const ElementSet& m) {
  if (m.is_subset_of(n)) return ElementSet(n).set_kind(ElementSet::Kind::Normal);
  if (n.is_subset_of(m)) return ElementSet(m).set_kind(ElementSet::Kind::Normal);
  ElementSet out(g.order(), ElementSet::Kind::Normal);
  const auto nm = n.members();
  const auto mm = m.members();
  for (Elem a : nm)
    for (Elem b : mm) out.insert(g.mul(a, b));
  return out;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  const std::size_t n = g.order();
  cc.class_of.assign(n, n);
  for (Elem x = 0; x < n; ++x) {
    if (cc.class_of[x] != n) continue;
    const std::size_t idx = cc.classes.size();
    std::vector<Elem> members;
    for (Elem by = 0; by < n; ++by) {
      const Elem y = g.conjugate(x, by);
      if (cc.class_of[y] == n) {
        cc.class_of[y] = idx;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    cc.classes.push_back(std::move(members));
  }
  return cc;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  const auto m = s.members();
  for (Elem a : m) {
    if (!s.contains(g.inv(a))) return false;
    for (Elem b : m)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (Elem a : s.members())
    for (Elem by = 0; by < g.order(); ++by)
      if (!s.contains(g.conjugate(a, by))) return false;
  return true;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, std::size_t cap) {
  require_cap(g, cap, "normal_subgroups");
  const auto cc = conjugacy_classes(g);
  std::vector<Elem> reps;
  std::vector<ElementSet> class_closures;
  for (std::size_t i = 1; i < cc.classes.size(); ++i) {
    reps.push_back(cc.classes[i].front());
    class_closures.push_back(normal_closure(g, cc.classes[i]));
  }

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found;
  ElementSet trivial(g.order(), ElementSet::Kind::Normal);
  trivial.insert(0);
  seen.insert(trivial);
  found.push_back(trivial);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t c = 0; c < class_closures.size(); ++c) {
      if (found[head].contains(reps[c])) continue;
      ElementSet joined = join_normal(g, found[head], class_closures[c]);
      if (seen.insert(joined).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    const auto sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a < b;
  });
  return found;
}

std::vector<ElementSet> maximal_among(const std::vector<ElementSet>& normals) {
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const auto& n = normals[i];
    if (n.is_full()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < normals.size() && maximal; ++j) {
      const auto& m = normals[j];
      if (j == i || m.is_full()) continue;
      if (n.is_subset_of(m) && !(n == m)) maximal = false;
    }
    if (maximal) out.push_back(n);
  }
  return out;
}

std::vector<ElementSet> maximal_normal_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.is_trivial()) return {};
  return maximal_among(normal_subgroups(g, cap));
}

FiniteGroup quotient(const FiniteGroup& g, const ElementSet& n) {
  if (n.universe() != g.order() || !is_normal_subgroup(g, n))
    throw Error(ErrorCode::NotNormal, "quotient of " + g.name() + " by a subset that is not a normal subgroup");
  const std::size_t order = g.order();
  const auto members = n.members();
  std::vector<Elem> coset_of(order, static_cast<Elem>(order));
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset_of[x] != order) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : members) coset_of[g.mul(x, m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  return GroupAssembler::make(g.name() + "/N" + std::to_string(members.size()), q, std::move(table));
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  ElementSet commutators(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) commutators.insert(g.commutator(x, y));
  return normal_closure(g, commutators);
}

bool is_perfect(const FiniteGroup& g) { return derived_subgroup(g).is_full(); }

bool is_simple(const FiniteGroup& g, std::size_t cap) {
  return !g.is_trivial() && normal_subgroups(g, cap).size() == 2;
}

AbelianInvariants abelian_invariants_finite(const FiniteGroup& a) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, a.name() + " is not abelian");
  std::uint64_t n = a.order();
  // Primary decomposition: for each prime p, the number of elements of order
  // dividing p^k is p^(sum_i min(a_i, k)) where p^a_i are the cyclic factors.
  std::vector<std::vector<unsigned>> prime_exponents;  // descending a_i per prime
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned total = 0;
    while (rest % p == 0) {
      rest /= p;
      ++total;
    }
    std::vector<unsigned> at_least;  // at_least[k-1] = #{i : a_i >= k}
    unsigned prev_log = 0;
    for (unsigned k = 1; prev_log < total; ++k) {
      std::uint64_t count = 0;
      for (Elem x = 0; x < a.order(); ++x)
        if (divides_prime_power(a.element_order(x), p, k)) ++count;
      unsigned log = 0;
      while (count > 1) {
        count /= p;
        ++log;
      }
      at_least.push_back(log - prev_log);
      prev_log = log;
    }
    std::vector<unsigned> exps(at_least.empty() ? 0 : at_least.front(), 0);
    for (unsigned k = 0; k < at_least.size(); ++k)
      for (unsigned j = 0; j < at_least[k]; ++j) ++exps[j];
    primes.push_back(p);
    prime_exponents.push_back(std::move(exps));
  }
  std::size_t count = 0;
  for (const auto& e : prime_exponents) count = std::max(count, e.size());
  // Largest factor collects the largest prime power of every prime, and so on.
  std::vector<BigInt> factors(count, BigInt(1));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < prime_exponents[i].size(); ++j)
      for (unsigned e = 0; e < prime_exponents[i][j]; ++e) factors[count - 1 - j] *= primes[i];
  return AbelianInvariants::make(0, std::move(factors));
}

AbelianInvariants abelianisation_invariants(const FiniteGroup& g) {
  return abelian_invariants_finite(quotient(g, derived_subgroup(g)));
}

WeightResult weight_bruteforce(const FiniteGroup& g, std::size_t cap) {
  require_cap(g, cap, "weight_bruteforce");
  if (g.is_trivial()) return {};
  const auto cc = conjugacy_classes(g);
  std::vector<Elem> reps;
  std::vector<ElementSet> closures;
  for (std::size_t i = 1; i < cc.classes.size(); ++i) {
    reps.push_back(cc.classes[i].front());
    closures.push_back(normal_closure(g, cc.classes[i]));
  }
  const std::size_t m = reps.size();
  std::vector<std::size_t> chosen;
  ElementSet trivial(g.order(), ElementSet::Kind::Normal);
  trivial.insert(0);

  // Depth-first over increasing index tuples of length k; returns at the
  // first tuple (lexicographic) whose joined closure is G.
  auto search = [&](auto&& self, std::size_t k, std::size_t start, const ElementSet& current) -> bool {
    if (chosen.size() == k) return current.is_full();
    for (std::size_t i = start; i + (k - chosen.size()) <= m; ++i) {
      chosen.push_back(i);
      if (self(self, k, i + 1, join_normal(g, current, closures[i]))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= m; ++k) {
    chosen.clear();
    if (search(search, k, 0, trivial)) {
      WeightResult r{k, {}};
      for (auto i : chosen) r.generators.push_back(reps[i]);
      return r;
    }
  }
  // Unreachable for a valid group: all class representatives generate G.
  throw Error(ErrorCode::InvalidArgument, "weight search failed for " + g.name());
}

}  // namespace finann
