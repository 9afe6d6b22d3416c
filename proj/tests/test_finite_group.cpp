#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "finann/catalog.hpp"
#include "finann/error.hpp"
#include "finann/group_structure.hpp"
#include "support/oracles.hpp"

using namespace finann;

namespace {

Elem first_of_order(const FiniteGroup& g, std::uint32_t k) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  ADD_FAILURE() << "no element of order " << k << " in " << g.name();
  return 0;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

std::vector<std::vector<std::int64_t>> xor_table() {
  std::vector<std::vector<std::int64_t>> t(4, std::vector<std::int64_t>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

}  // namespace

TEST(ElementSet, MembershipAndOrdering) {
  auto a = ElementSet::of(70, std::vector<Elem>{0, 3, 65});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(65));
  EXPECT_FALSE(a.contains(64));
  a.erase(3);
  EXPECT_EQ(a.members(), (std::vector<Elem>{0, 65}));
  const auto small = ElementSet::of(4, std::vector<Elem>{0, 1});
  const auto big = ElementSet::of(4, std::vector<Elem>{0, 2});
  EXPECT_LT(small, big);
  EXPECT_EQ(small.to_hex(), "0x3");
  EXPECT_EQ(big.to_hex(), "0x5");
  EXPECT_TRUE(ElementSet::full(4).is_full());
  EXPECT_TRUE(small.is_subset_of(ElementSet::full(4)));
}

TEST(BuildFromPermutations, SingleTransposition) {
  const auto g = build_from_permutations(2, {{1, 0}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_FALSE(g.validate());
}

TEST(BuildFromPermutations, SymmetricFive) {
  const auto g = build_from_permutations(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
  EXPECT_EQ(g.order(), 120u);
  EXPECT_FALSE(g.validate());
}

TEST(BuildFromPermutations, EmptyGeneratorsGiveTrivialGroup) {
  const auto g = build_from_permutations(3, {});
  EXPECT_EQ(g.order(), 1u);
}

TEST(BuildFromPermutations, BfsNumbering) {
  // e, then generators in list order.
  const auto g = build_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(g.element_order(1), 2u);
  EXPECT_EQ(g.element_order(2), 3u);
}

TEST(BuildFromPermutations, Errors) {
  EXPECT_EQ(code_of([] { build_from_permutations(3, {{0, 0, 1}}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { build_from_permutations(3, {{0, 1}}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { build_from_permutations(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}, "S6", 100); }),
            ErrorCode::ClosureExceedsCap);
}

TEST(BuildFromCayleyTable, TrivialAndKlein) {
  EXPECT_EQ(build_from_cayley_table({{0}}).order(), 1u);
  const auto k = build_from_cayley_table(xor_table());
  EXPECT_EQ(k.order(), 4u);
  EXPECT_TRUE(k.is_abelian());
  EXPECT_EQ(abelian_invariants_finite(k).to_string(), "(r=0, [2,2])");
}

TEST(BuildFromCayleyTable, RejectsNonGroups) {
  EXPECT_EQ(code_of([] { build_from_cayley_table({{0, 1}, {1, 1}}); }), ErrorCode::NotAGroup);
  EXPECT_EQ(code_of([] { build_from_cayley_table({{0, 1}, {1}}); }), ErrorCode::NotAGroup);
  EXPECT_EQ(code_of([] { build_from_cayley_table({{0, 2}, {1, 0}}); }), ErrorCode::NotAGroup);
  // Latin square with identity 0 that is not associative.
  EXPECT_EQ(code_of([] {
              build_from_cayley_table({{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}});
            }),
            ErrorCode::NotAGroup);
  try {
    build_from_cayley_table({{0, 1}, {1, 1}});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos) << e.what();
  }
}

TEST(BuildFromMatrices, SpecialLinear) {
  const std::vector<ModMatrix> gens{{2, {1, 1, 0, 1}}, {2, {0, -1, 1, 0}}};
  EXPECT_EQ(build_from_matrix_generators(5, 2, gens).order(), 120u);
  EXPECT_EQ(build_from_matrix_generators(3, 2, gens).order(), 24u);
  EXPECT_EQ(build_from_matrix_generators(2, 1, {{1, {1}}}).order(), 1u);
  EXPECT_EQ(code_of([] { build_from_matrix_generators(3, 2, {{2, {1, 1, 1, 1}}}); }), ErrorCode::SingularGenerator);
  EXPECT_EQ(code_of([&] { build_from_matrix_generators(7, 2, gens, "SL(2,7)", 128); }),
            ErrorCode::ClosureExceedsCap);
}

TEST(DirectProduct, Examples) {
  const auto k = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(k.order(), 4u);
  EXPECT_EQ(abelian_invariants_finite(k).to_string(), "(r=0, [2,2])");
  const auto c15 = direct_product(cyclic_group(3), cyclic_group(5));
  EXPECT_EQ(abelian_invariants_finite(c15).to_string(), "(r=0, [15])");
  const auto s3 = symmetric_group(3);
  const auto same = direct_product(s3, FiniteGroup::trivial());
  EXPECT_EQ(same.order(), 6u);
  EXPECT_EQ(same, s3);  // (g, e) numbered g*1 + 0
  EXPECT_EQ(code_of([] { direct_product(cyclic_group(32), cyclic_group(33), 1000); }), ErrorCode::ClosureExceedsCap);
}

TEST(Closures, SubgroupClosure) {
  const auto s3 = symmetric_group(3);
  EXPECT_EQ(subgroup_closure(s3, std::vector<Elem>{}).size(), 1u);
  EXPECT_EQ(subgroup_closure(s3, std::vector<Elem>{first_of_order(s3, 3)}).size(), 3u);
  std::vector<Elem> all(6);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(subgroup_closure(s3, all).is_full());
}

TEST(Closures, NormalClosure) {
  const auto s3 = symmetric_group(3);
  EXPECT_TRUE(normal_closure(s3, std::vector<Elem>{first_of_order(s3, 2)}).is_full());
  const auto k = cyclic_product(2, 2);
  EXPECT_EQ(normal_closure(k, std::vector<Elem>{1}).size(), 2u);
  const auto a5 = alternating_group(5);
  for (Elem g = 1; g < a5.order(); ++g) EXPECT_TRUE(normal_closure(a5, std::vector<Elem>{g}).is_full());
}

TEST(ConjugacyClasses, Sizes) {
  auto sizes = [](const FiniteGroup& g) {
    std::vector<std::size_t> out;
    for (const auto& c : conjugacy_classes(g).classes) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(sizes(cyclic_group(6)), std::vector<std::size_t>(6, 1));
  EXPECT_EQ(sizes(symmetric_group(3)), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(sizes(quaternion_group()), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  const auto cc = conjugacy_classes(symmetric_group(3));
  EXPECT_EQ(cc.classes[0], std::vector<Elem>{0});
}

TEST(NormalSubgroups, Examples) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(normal_subgroups(cyclic_group(p)).size(), 2u);
  EXPECT_EQ(normal_subgroups(cyclic_product(2, 2)).size(), 5u);
  const auto s5 = normal_subgroups(symmetric_group(5));
  ASSERT_EQ(s5.size(), 3u);
  EXPECT_EQ(s5[0].size(), 1u);
  EXPECT_EQ(s5[1].size(), 60u);
  EXPECT_EQ(s5[2].size(), 120u);
  EXPECT_EQ(code_of([] { normal_subgroups(symmetric_group(5), 100); }), ErrorCode::OrderCapExceeded);
}

TEST(NormalSubgroups, AgreeWithClassUnionOracle) {
  for (const auto& g : {symmetric_group(4), dihedral_group(8), quaternion_group(), alternating_group(4),
                        special_linear_2(3), cyclic_product(2, 4), elementary_abelian(2, 3)}) {
    std::vector<std::vector<Elem>> mine;
    for (const auto& s : normal_subgroups(g)) mine.push_back(s.members());
    std::sort(mine.begin(), mine.end());
    EXPECT_EQ(mine, oracle::normal_subgroups(g)) << g.name();
  }
}

TEST(MaximalNormalSubgroups, Examples) {
  std::vector<std::size_t> c6;
  for (const auto& s : maximal_normal_subgroups(cyclic_group(6))) c6.push_back(s.size());
  std::sort(c6.begin(), c6.end());
  EXPECT_EQ(c6, (std::vector<std::size_t>{2, 3}));
  const auto k = maximal_normal_subgroups(cyclic_product(2, 2));
  ASSERT_EQ(k.size(), 3u);
  for (const auto& s : k) EXPECT_EQ(s.size(), 2u);
  const auto a5 = maximal_normal_subgroups(alternating_group(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].size(), 1u);
  EXPECT_TRUE(maximal_normal_subgroups(FiniteGroup::trivial()).empty());
}

TEST(Quotient, Examples) {
  const auto s4 = symmetric_group(4);
  const auto by_e = quotient(s4, ElementSet::of(24, std::vector<Elem>{0}));
  EXPECT_EQ(by_e.order(), 24u);
  EXPECT_EQ(by_e, s4);
  EXPECT_EQ(quotient(s4, ElementSet::full(24)).order(), 1u);
  const auto s5 = symmetric_group(5);
  const auto q = quotient(s5, normal_subgroups(s5)[1]);
  EXPECT_EQ(q.order(), 2u);
  EXPECT_FALSE(q.validate());
  const auto s3 = symmetric_group(3);
  const auto not_normal = subgroup_closure(s3, std::vector<Elem>{first_of_order(s3, 2)});
  EXPECT_EQ(code_of([&] { quotient(s3, not_normal); }), ErrorCode::NotNormal);
}

TEST(DerivedSubgroup, Examples) {
  EXPECT_EQ(derived_subgroup(cyclic_product(2, 4)).size(), 1u);
  EXPECT_EQ(derived_subgroup(symmetric_group(3)).size(), 3u);
  EXPECT_TRUE(derived_subgroup(special_linear_2(5)).is_full());
  EXPECT_TRUE(is_perfect(special_linear_2(5)));
  EXPECT_FALSE(is_perfect(symmetric_group(4)));
}

TEST(AbelianInvariantsFinite, Examples) {
  EXPECT_EQ(abelian_invariants_finite(cyclic_group(15)).to_string(), "(r=0, [15])");
  EXPECT_EQ(abelian_invariants_finite(cyclic_product(2, 2)).to_string(), "(r=0, [2,2])");
  EXPECT_EQ(abelian_invariants_finite(cyclic_product(2, 4)).to_string(), "(r=0, [2,4])");
  EXPECT_EQ(abelian_invariants_finite(cyclic_product(4, 6)).to_string(), "(r=0, [2,12])");
  EXPECT_EQ(abelian_invariants_finite(FiniteGroup::trivial()).to_string(), "(r=0, [])");
  EXPECT_EQ(code_of([] { abelian_invariants_finite(symmetric_group(3)); }), ErrorCode::NotAbelian);
  EXPECT_EQ(abelianisation_invariants(dihedral_group(4)).to_string(), "(r=0, [2,2])");
  EXPECT_EQ(abelianisation_invariants(special_linear_2(3)).to_string(), "(r=0, [3])");
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight_bruteforce(FiniteGroup::trivial()).weight, 0u);
  EXPECT_EQ(weight_bruteforce(alternating_group(5)).weight, 1u);
  const auto k = weight_bruteforce(cyclic_product(2, 2));
  EXPECT_EQ(k.weight, 2u);
  EXPECT_EQ(k.generators, (std::vector<Elem>{1, 2}));
  EXPECT_EQ(weight_bruteforce(symmetric_group(5)).weight, 1u);
  EXPECT_EQ(weight_bruteforce(elementary_abelian(2, 4)).weight, 4u);
  EXPECT_EQ(code_of([] { weight_bruteforce(symmetric_group(5), 100); }), ErrorCode::OrderCapExceeded);
}

TEST(FiniteGroup, PowAndCommutator) {
  const auto c12 = cyclic_group(12);
  const Elem g = first_of_order(c12, 12);
  EXPECT_EQ(c12.pow(g, 12), 0u);
  EXPECT_EQ(c12.pow(g, -1), c12.inv(g));
  EXPECT_EQ(c12.pow(g, 25), g);
  const auto s3 = symmetric_group(3);
  EXPECT_NE(s3.commutator(1, 2), 0u);
  EXPECT_EQ(c12.commutator(g, c12.pow(g, 5)), 0u);
}
