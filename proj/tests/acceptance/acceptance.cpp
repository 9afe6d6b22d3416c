// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "finann/catalog.hpp"
#include "finann/classify.hpp"
#include "finann/covering.hpp"
#include "finann/group_structure.hpp"
#include "finann/smith.hpp"
#include "finann/witness.hpp"
#include "support/oracles.hpp"

using namespace finann;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Check = std::function<Outcome()>;

const std::vector<FiniteGroup>& catalog() {
  static const auto groups = build_catalog(CatalogSpec::default_spec());
  return groups;
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? ", " : "") + items[i];
  if (items.size() > limit) out += ", ...";
  return out;
}

Outcome finish(std::size_t checked, const std::vector<std::string>& bad, const std::string& what) {
  std::ostringstream os;
  os << checked << " " << what << ", " << bad.size() << " mismatches";
  if (!bad.empty()) os << " [" << join(bad) << "]";
  return {bad.empty(), os.str()};
}

bool covers(std::size_t order, const std::vector<ElementSet>& subs) {
  std::vector<char> hit(order, 0);
  for (const auto& s : subs)
    for (auto x : s.members()) hit[x] = 1;
  for (auto h : hit)
    if (!h) return false;
  return true;
}

// 1. F-A exactly when G^ab has at least two invariant factors.
Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> bad;
  bool has_s5 = false, has_sl25 = false;
  for (const auto& g : catalog()) {
    has_s5 |= g.name() == "S5";
    has_sl25 |= g.name() == "SL(2,5)";
    const bool fa = is_fa_finite(g).verdict;
    const bool expected = abelianisation_invariants(g).factors.size() >= 2;
    if (fa != expected) bad.push_back(g.name());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (catalog().size() < 50) bad.push_back("catalog has fewer than 50 groups");
  if (!has_s5 || !has_sl25) bad.push_back("catalog lacks S5 or SL(2,5)");
  if (secs >= 120) bad.push_back("runtime " + std::to_string(secs) + " s");
  auto out = finish(catalog().size(), bad, "groups");
  out.detail += ", " + std::to_string(secs).substr(0, 5) + " s";
  return out;
}

// 2. F-A exactly when some elementary p-rank of G^ab is at least 2; every
// greedy subcover covers.
Outcome criterion2() {
  std::vector<std::string> bad;
  std::size_t subcovers = 0;
  for (const auto& g : catalog()) {
    const auto r = is_fa_finite(g);
    const auto inv = abelianisation_invariants(g);
    bool some_rank_two = false;
    for (BigInt p = 2; p <= g.order(); ++p)
      if (is_prime(p) && elementary_p_rank(inv, p) >= 2) some_rank_two = true;
    if (r.verdict != some_rank_two) bad.push_back(g.name() + " (rank)");
    if (r.verdict) {
      ++subcovers;
      if (r.subcover.empty() || !covers(g.order(), r.subcover)) bad.push_back(g.name() + " (subcover)");
    }
  }
  auto out = finish(catalog().size(), bad, "groups");
  out.detail += ", " + std::to_string(subcovers) + " subcovers verified";
  return out;
}

// 3. n-F-A exactly when w(G^ab) >= n+1, and monotone in n.
Outcome criterion3() {
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (const auto& g : catalog()) {
    if (g.order() > 32) continue;
    const auto w = abelian_weight(abelianisation_invariants(g));
    bool previous = true;
    for (std::size_t n = 1; n <= 3; ++n) {
      const bool v = is_nfa_finite(g, n).verdict;
      ++checked;
      if (v != (w >= n + 1)) bad.push_back(g.name() + " n=" + std::to_string(n));
      if (v && !previous) bad.push_back(g.name() + " monotone n=" + std::to_string(n));
      previous = v;
    }
  }
  return finish(checked, bad, "(group, n) cases");
}

// 4. Weight of G against weight of G^ab; perfect SL(2,5) has weight 1.
Outcome criterion4() {
  std::vector<std::string> bad;
  std::size_t checked = 0;
  bool saw_sl25 = false;
  for (const auto& g : catalog()) {
    const bool sl25 = g.name() == "SL(2,5)";
    if (g.order() > 24 && !sl25) continue;
    ++checked;
    const auto wab = abelian_weight(abelianisation_invariants(g));
    const auto w = weight_bruteforce(g).weight;
    if (wab >= 2 ? w != wab : w > 1) bad.push_back(g.name());
    if (sl25) {
      saw_sl25 = true;
      if (!is_perfect(g) || w != 1) bad.push_back("SL(2,5) perfect/weight");
    }
  }
  if (!saw_sl25) bad.push_back("SL(2,5) missing");
  return finish(checked, bad, "groups");
}

// 5. Direct products with an F-A factor are F-A; G is F-A when some G/N is.
Outcome criterion5() {
  const std::vector<std::pair<std::string, std::string>> products{
      {"CxC 2 2", "C 1"},  {"CxC 2 2", "C 2"},  {"CxC 2 2", "C 3"},  {"CxC 2 2", "S 3"},  {"CxC 2 2", "C 5"},
      {"CxC 2 2", "A 4"},  {"CxC 2 2", "D 5"},  {"CxC 2 2", "C 15"}, {"CxC 2 2", "Q8"},   {"CxC 2 2", "D 7"},
      {"E 2 3", "C 3"},    {"E 2 3", "S 3"},    {"E 2 3", "C 7"},    {"Q8", "C 3"},       {"Q8", "S 3"},
      {"D 4", "C 5"},      {"D 4", "Q8"},       {"CxC 3 3", "C 2"},  {"CxC 3 3", "S 3"},  {"CxC 2 4", "C 7"}};
  const std::vector<std::string> extensions{
      "CxC 2 4", "CxC 2 6", "CxC 2 8", "CxC 4 4", "CxC 3 6", "CxC 3 9", "E 2 3", "E 2 4", "E 3 3", "D 4",
      "D 6",     "D 8",     "D 10",    "D 12",    "D 14",    "D 16",    "Q8",    "prod(Q8, C 2)", "prod(D 4, C 2)",
      "CxC 4 8"};
  std::vector<std::string> bad;
  for (const auto& [a_spec, g_spec] : products) {
    const auto a = group_from_spec(a_spec);
    const auto g = group_from_spec(g_spec);
    if (a.order() * g.order() > 64 || !is_fa_finite(a).verdict) {
      bad.push_back("bad fixture " + a_spec + " x " + g_spec);
      continue;
    }
    if (!is_fa_finite(direct_product(a, g)).verdict) bad.push_back(a_spec + " x " + g_spec);
  }
  for (const auto& spec : extensions) {
    const auto g = group_from_spec(spec);
    // First nontrivial proper normal N (in canonical order) with G/N F-A.
    std::optional<ElementSet> n;
    for (const auto& cand : normal_subgroups(g))
      if (cand.size() > 1 && !cand.is_full() && is_fa_finite(quotient(g, cand)).verdict) {
        n = cand;
        break;
      }
    if (!n) {
      bad.push_back("no F-A quotient for " + spec);
      continue;
    }
    if (!is_fa_finite(g).verdict) bad.push_back(spec);
  }
  return finish(products.size() + extensions.size(), bad, "pairs");
}

// 6. Presentation pipeline fixtures.
Outcome criterion6() {
  std::vector<std::string> bad;
  const auto k = parse_presentation("< x, y, z | x^2, y^3, z^5 >");
  const auto kv = classify_fa(k);
  if (abelian_invariants(k).to_string() != "(r=0, [30])") bad.push_back("k235 invariants");
  if (kv.status != Status::Unknown || kv.easily_fa) bad.push_back("k235 verdict");
  const auto h =
      parse_presentation("< a, b, c, d | a b a^-1 = b^2, b c b^-1 = c^2, c d c^-1 = d^2, d a d^-1 = a^2 >");
  if (!abelian_invariants(h).is_trivial()) bad.push_back("higman invariants");
  if (nontrivial_quotient_exists(h, 30)) bad.push_back("higman quotient");
  const auto hnn = parse_presentation("< a, b, t | [a,b], t^-1 a^2 t = a^3, t^-1 b^2 t = b^3 >");
  if (abelian_invariants(hnn).to_string() != "(r=1, [])") bad.push_back("hnn invariants");
  const auto c = classify_fa(parse_presentation("< x, y | x^2, y^3 >"));
  if (c.status != Status::NotFA || c.rule != "coprime-torsion-pair") bad.push_back("coprime rule");
  return finish(4, bad, "fixtures");
}

// 7. Words over <x,y,z | x^2, y^3, z^5> with a killable exponent sum get the
// expected small cyclic witness.
Outcome criterion7() {
  const auto p = parse_presentation("< x, y, z | x^2, y^3, z^5 >");
  const auto report = fa_scan(p, 6, 5);
  std::vector<std::string> bad;
  std::size_t qualifying = 0;
  for (const auto& e : report.entries) {
    const auto sx = exponent_sum(e.word, 0), sy = exponent_sum(e.word, 1), sz = exponent_sum(e.word, 2);
    std::string expected;
    if (sx % 2 == 0) expected = "C2";
    else if (sy % 3 == 0) expected = "C3";
    else if (sz % 5 == 0) expected = "C5";
    if (expected.empty()) continue;
    ++qualifying;
    const std::string w = render_word(p, e.word);
    if (!e.witness) {
      bad.push_back(w + " unwitnessed");
      continue;
    }
    if (e.witness->target.name() != expected) bad.push_back(w + " -> " + e.witness->target.name());
    const auto& t = e.witness->target;
    if (oracle::evaluate(t, e.witness->images, e.word) != 0) bad.push_back(w + " not killed");
    for (const auto& r : p.relators)
      if (oracle::evaluate(t, e.witness->images, r) != 0) bad.push_back(w + " relator");
    if (oracle::generated_order(t, e.witness->images) != t.order()) bad.push_back(w + " not onto");
  }
  auto out = finish(qualifying, bad, "qualifying words");
  out.detail += " of " + std::to_string(report.entries.size()) + " scanned";
  return out;
}

// 8. Smith normal form against the naive reduction oracle.
Outcome criterion8() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<long long> entry(-3, 3);
  std::vector<std::string> bad;
  const std::size_t cases = 10000;
  for (std::size_t i = 0; i < cases; ++i) {
    const auto rows = dim(rng), cols = dim(rng);
    oracle::Mat m(rows, std::vector<long long>(cols));
    std::vector<long long> flat;
    for (auto& row : m)
      for (auto& x : row) {
        x = entry(rng);
        flat.push_back(x);
      }
    const IntMatrix a(rows, cols, flat);
    const auto r = smith_normal_form(a);
    std::vector<long long> diag;
    for (const auto& d : r.d.diagonal()) diag.push_back(d.convert_to<long long>());
    if (!(r.u * a * r.v == r.d) || !r.d.is_diagonal()) bad.push_back("UAV != D at case " + std::to_string(i));
    if (diag != oracle::snf_diagonal(m)) bad.push_back("diagonal at case " + std::to_string(i));
  }
  return finish(cases, bad, "matrices");
}

// 9. Presentation engine and finite engine agree on fixtures.
Outcome criterion9() {
  struct Fixture {
    std::string presentation;
    FiniteGroup group;
  };
  const std::vector<Fixture> fixtures{
      {"< a, b | a^2, b^2, [a,b] >", cyclic_product(2, 2)},
      {"< a | a^6 >", cyclic_group(6)},
      {"< a, b | a^3, b^2, (a b)^2 >", symmetric_group(3)},
      {"< a, b | a^4, a^2 b^-2, b a b^-1 a >", quaternion_group()},
  };
  std::vector<std::string> bad;
  std::size_t words = 0;
  for (const auto& f : fixtures) {
    const auto p = parse_presentation(f.presentation);
    const auto& g = f.group;
    if (abelian_invariants(p) != abelianisation_invariants(g)) bad.push_back(g.name() + " invariants");
    const auto maps = enumerate_surjections(p, g);
    if (maps.empty()) {
      bad.push_back(g.name() + " no surjection");
      continue;
    }
    const auto& iso = maps.front();
    AnnihilatorSearch search(p, g.order());
    for (const auto& w : shortlex_words(p.generators.size(), 5)) {
      ++words;
      const Elem x = evaluate(g, iso, w);
      const bool presented = search.find(w).has_value();
      const bool finite = fa_witness_finite(g, x).has_value();
      if (presented != finite) bad.push_back(g.name() + ":" + render_word(p, w));
    }
  }
  return finish(words, bad, "words");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"finite F-A equals non-cyclic abelianisation", criterion1},
      {"F-A equals elementary rank 2; subcovers cover", criterion2},
      {"n-F-A equals abelianisation weight >= n+1", criterion3},
      {"weight of G against weight of G^ab", criterion4},
      {"closure under products and extensions", criterion5},
      {"presentation pipeline fixtures", criterion6},
      {"witness completeness on <x,y,z | x^2, y^3, z^5>", criterion7},
      {"Smith normal form oracle equivalence", criterion8},
      {"cross-engine agreement", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
