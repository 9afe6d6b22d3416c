#include <gtest/gtest.h>

#include "finann/catalog.hpp"
#include "finann/error.hpp"
#include "finann/witness.hpp"
#include "support/oracles.hpp"

using namespace finann;

namespace {

Presentation P(std::string_view text) { return parse_presentation(text); }

const char* kK235 = "< x,y,z | x^2, y^3, z^5 >";
const char* kHigman = "< a,b,c,d | a b a^-1 = b^2, b c b^-1 = c^2, c d c^-1 = d^2, d a d^-1 = a^2 >";

}  // namespace

TEST(Surjections, CyclicTwo) {
  const auto s = enumerate_surjections(P("<x|x^2>"), cyclic_group(2));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], Assignment{1});
}

TEST(Surjections, TorsionTripleOntoC3) {
  const auto h = cyclic_group(3);
  const auto s = enumerate_surjections(P(kK235), h);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& a : s) {
    EXPECT_EQ(a[0], 0u);
    EXPECT_EQ(a[2], 0u);
    EXPECT_EQ(h.element_order(a[1]), 3u);
  }
  EXPECT_LT(s[0], s[1]);
}

TEST(Surjections, HigmanHasNoneUpToThirty) {
  const auto p = P(kHigman);
  for (const auto& h : witness_targets(30)) EXPECT_TRUE(enumerate_surjections(p, h).empty()) << h.name();
}

TEST(Surjections, MatchBruteForceOracle) {
  const std::vector<std::string> presentations{"<a,b|>", "<a,b|a^2,b^3,(a b)^2>", "<x,y|x^2,y^3>",
                                               "<a,b|[a,b]>", kK235, "<a,b|a^4, a^2 b^-2, b a b^-1 a>"};
  const std::vector<FiniteGroup> targets{cyclic_group(2), cyclic_group(4), cyclic_product(2, 2), symmetric_group(3),
                                         quaternion_group(), cyclic_group(6), alternating_group(4)};
  for (const auto& text : presentations) {
    const auto p = P(text);
    for (const auto& h : targets) {
      if (p.generators.size() == 3 && h.order() > 8) continue;
      EXPECT_EQ(enumerate_surjections(p, h), oracle::surjections(p, h)) << text << " onto " << h.name();
    }
  }
}

TEST(Surjections, BudgetIsEnforced) {
  try {
    enumerate_surjections(P("<a,b,c,d|>"), symmetric_group(4), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchBudgetExceeded);
  }
}

TEST(FindAnnihilator, TorsionTriple) {
  const auto p = P(kK235);
  const auto x = find_annihilator(p, parse_word(p, "x"), 5);
  ASSERT_TRUE(x);
  EXPECT_EQ(x->target.name(), "C3");
  EXPECT_EQ(x->images[0], 0u);
  EXPECT_EQ(x->images[2], 0u);
  EXPECT_TRUE(x->verified);
  const auto y = find_annihilator(p, parse_word(p, "y"), 5);
  ASSERT_TRUE(y);
  EXPECT_EQ(y->target.name(), "C2");
  EXPECT_EQ(y->images, (Assignment{1, 0, 0}));
  const auto z = find_annihilator(p, parse_word(p, "z"), 5);
  ASSERT_TRUE(z);
  EXPECT_EQ(z->target.name(), "C2");
}

TEST(FindAnnihilator, CyclicTwoHasNone) {
  const auto p = P("<a|a^2>");
  EXPECT_FALSE(find_annihilator(p, parse_word(p, "a"), 60));
  const auto e = find_annihilator(p, Word{}, 60);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->target.name(), "C2");
}

TEST(FindAnnihilator, FreeGroup) {
  const auto p = P("<a,b|>");
  const auto w = find_annihilator(p, parse_word(p, "a"), 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->target.name(), "C2");
  EXPECT_EQ(w->images, (Assignment{0, 1}));
}

TEST(FindAnnihilator, BoundAboveCatalogLimit) {
  EXPECT_THROW(find_annihilator(P("<a|>"), Word{}, kMaxWitnessBound + 1), Error);
}

TEST(NontrivialQuotient, Examples) {
  EXPECT_FALSE(nontrivial_quotient_exists(P(kHigman), 30));
  const auto z2 = nontrivial_quotient_exists(P("<a,b|[a,b]>"), 2);
  ASSERT_TRUE(z2);
  EXPECT_EQ(z2->target.name(), "C2");
  EXPECT_FALSE(nontrivial_quotient_exists(P("<|>"), 60));
  EXPECT_FALSE(nontrivial_quotient_exists(P("<a|a>"), 60));
}

TEST(VerifyWitness, DetectsTampering) {
  const auto p = P(kK235);
  auto w = *find_annihilator(p, parse_word(p, "x"), 5);
  EXPECT_FALSE(verify_witness(w));
  auto bad = w;
  bad.images[1] = 0;
  EXPECT_TRUE(verify_witness(bad));  // no longer onto
  bad = w;
  bad.word = parse_word(p, "y");
  EXPECT_TRUE(verify_witness(bad));  // word survives
  bad = w;
  bad.images[0] = 1;
  EXPECT_TRUE(verify_witness(bad));  // relator x^2 fails in C3
  bad = w;
  bad.target = FiniteGroup::trivial();
  bad.images = {0, 0, 0};
  EXPECT_TRUE(verify_witness(bad));
  std::vector<std::string> transcript;
  verify_witness(w, &transcript);
  EXPECT_EQ(transcript.back(), "word x -> 0");
}

TEST(ShortlexWords, OrderAndCount) {
  const auto words = shortlex_words(2, 2);
  // 1 + 4 + 4*3
  ASSERT_EQ(words.size(), 17u);
  const auto p = P("<a,b|>");
  EXPECT_EQ(render_word(p, words[0]), "1");
  EXPECT_EQ(render_word(p, words[1]), "a");
  EXPECT_EQ(render_word(p, words[2]), "a^-1");
  EXPECT_EQ(render_word(p, words[3]), "b");
  EXPECT_EQ(render_word(p, words[5]), "a^2");
  for (const auto& w : words) EXPECT_TRUE(w.is_freely_reduced());
  EXPECT_EQ(shortlex_words(0, 3).size(), 1u);
}

TEST(FaScan, TorsionTripleLengthOne) {
  const auto r = fa_scan(P(kK235), 1, 5);
  ASSERT_EQ(r.entries.size(), 7u);
  EXPECT_EQ(r.unwitnessed(), 0u);
  EXPECT_FALSE(r.classified_fa);
}

TEST(FaScan, CyclicTwo) {
  const auto r = fa_scan(P("<a|a^2>"), 1, 60);
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].status, ScanStatus::Witnessed);
  EXPECT_EQ(r.entries[1].status, ScanStatus::Unwitnessed);
  EXPECT_EQ(r.entries[2].status, ScanStatus::Unwitnessed);
}

TEST(FaScan, FaPresentationMissesAreBoundTooSmall) {
  const auto r = fa_scan(P("<a,b|a^9,b^9,[a,b]>"), 1, 2);
  EXPECT_TRUE(r.classified_fa);
  EXPECT_EQ(r.witnessed(), 0u);  // C9 x C9 has no quotient of order 2
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    EXPECT_EQ(r.entries[i].status, ScanStatus::BoundTooSmall);
    EXPECT_EQ(to_string(r.entries[i].status), "bound too small");
  }
}

TEST(FaScan, CachedSearchMatchesDirectSearch) {
  const auto p = P("<a,b|a^2,b^3,(a b)^2>");
  AnnihilatorSearch search(p, 12);
  for (const auto& w : shortlex_words(2, 4)) {
    const auto a = search.find(w);
    const auto b = find_annihilator(p, w, 12);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->target.name(), b->target.name());
      EXPECT_EQ(a->images, b->images);
    }
  }
}
