#include <gtest/gtest.h>

#include <functional>

#include "hecke01/soergel.hpp"
#include "oracles.hpp"

using namespace hecke01;

namespace {

Element el(std::initializer_list<int> one_based) {
  Word w;
  for (int g : one_based) w.push_back(static_cast<Generator>(g - 1));
  return Element(w);
}

CoxeterSystem dihedral(int m, int w0, int w1) { return CoxeterSystem({{1, m}, {m, 1}}, {w0, w1}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(Sprime, EqualWeightsGiveS) {
  CoxeterGroup group(dihedral(3, 1, 1));
  SubgroupData data = build_subgroup(group, 100, 100);
  EXPECT_EQ(data.sprime, (std::vector<Element>{el({1}), el({2})}));
  EXPECT_EQ(data.parabolic.size(), 1u);
  EXPECT_EQ(data.matrix, (std::vector<std::vector<int>>{{1, 3}, {3, 1}}));
  ReflectionSubgroup sub(group, data);
  EXPECT_EQ(enumerate_subgroup(sub, 10, 100).elements.size(), 6u);
}

TEST(Sprime, B2) {
  CoxeterGroup group(dihedral(4, 0, 1));
  SubgroupData data = build_subgroup(group, 100, 100);
  ASSERT_EQ(data.sprime, (std::vector<Element>{el({2}), el({1, 2, 1})}));
  EXPECT_TRUE(data.palindromes[0].prefix.empty());
  EXPECT_EQ(data.palindromes[1].prefix, Word{0});
  EXPECT_EQ(data.palindromes[1].middle, 1);
  EXPECT_EQ(data.palindromes[1].word(), (Word{0, 1, 0}));
  for (const Element& r : data.sprime) EXPECT_EQ(n_e(group.system(), r, 1), 1u);
  EXPECT_EQ(data.matrix, (std::vector<std::vector<int>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(sprime_characterization_mismatch(data), "");
}

TEST(Sprime, G2AndInfinite) {
  CoxeterGroup g2(dihedral(6, 0, 1));
  EXPECT_EQ(build_subgroup(g2, 100, 100).matrix, (std::vector<std::vector<int>>{{1, 3}, {3, 1}}));
  CoxeterGroup inf(dihedral(0, 0, 1));
  SubgroupData data = build_subgroup(inf, 100, 60);
  EXPECT_EQ(data.sprime, (std::vector<Element>{el({2}), el({1, 2, 1})}));
  EXPECT_EQ(data.matrix[0][1], kInfinity);
  EXPECT_TRUE(data.reflections_truncated);
}

// (ts)^2 has order m/2 in I2(m): checked on the oracle's alternating words.
TEST(Sprime, InducedOrderMatchesOracle) {
  for (int m : {4, 6}) {
    oracle::DihedralHecke d(m, 0, 1);
    oracle::Dih x = d.product({1, 0, 1, 0});
    oracle::Dih p = x;
    int k = 1;
    while (p.len != 0) {
      for (int s : x.word()) p = d.times(p, s);
      ++k;
    }
    CoxeterGroup group(dihedral(m, 0, 1));
    EXPECT_EQ(build_subgroup(group, 100, 100).matrix[0][1], k) << "m=" << m;
  }
}

TEST(Sprime, TamperedDataIsReported) {
  CoxeterGroup group(dihedral(4, 0, 1));
  SubgroupData data = build_subgroup(group, 100, 100);
  data.dyer_filter.push_back(el({2, 1, 2}));
  EXPECT_NE(sprime_characterization_mismatch(data), "");
  data = build_subgroup(group, 100, 100);
  data.dyer_filter.pop_back();
  EXPECT_NE(sprime_characterization_mismatch(data), "");
}

TEST(Sprime, InfiniteParabolicIsCapExceeded) {
  CoxeterGroup group(CoxeterSystem({{1, 0, 2}, {0, 1, 4}, {2, 4, 1}}, {0, 0, 1}));
  EXPECT_EQ(code_of([&] { build_subgroup(group, 50, 50); }), ErrorCode::CapExceeded);
}

TEST(Subgroup, Enumeration) {
  CoxeterGroup b2(dihedral(4, 0, 1));
  SubgroupData data = build_subgroup(b2, 100, 100);
  ReflectionSubgroup sub(b2, data);
  EXPECT_EQ(enumerate_subgroup(sub, 0, 100).elements.size(), 1u);
  auto all = enumerate_subgroup(sub, 10, 100);
  ASSERT_EQ(all.elements.size(), 4u);
  std::set<Element> ambient;
  for (const auto& x : all.elements) ambient.insert(x.ambient);
  EXPECT_EQ(ambient, (std::set<Element>{Element{}, el({2}), el({1, 2, 1}), el({1, 2, 1, 2})}));

  CoxeterGroup g2(dihedral(6, 0, 1));
  SubgroupData gdata = build_subgroup(g2, 100, 100);
  ReflectionSubgroup gsub(g2, gdata);
  EXPECT_EQ(enumerate_subgroup(gsub, 10, 100).elements.size(), 6u);
}

TEST(Subgroup, MembershipAndLength) {
  CoxeterGroup b2(dihedral(4, 0, 1));
  SubgroupData data = build_subgroup(b2, 100, 100);
  ReflectionSubgroup sub(b2, data);
  EXPECT_EQ(code_of([&] { sub.from_ambient(el({1})); }), ErrorCode::NotInSubgroup);
  EXPECT_EQ(code_of([&] { sub.from_ambient(el({1, 2})); }), ErrorCode::NotInSubgroup);
  EXPECT_EQ(sub.from_ambient(el({1, 2, 1, 2})).length(), 2u);
  EXPECT_EQ(sub.n1(el({1, 2, 1, 2})), 2u);
}

TEST(Subgroup, ConjugationPermutesSprime) {
  CoxeterGroup b2(dihedral(4, 0, 1));
  SubgroupData data = build_subgroup(b2, 100, 100);
  EXPECT_EQ(conjugate_sprime(b2, data, Element{}), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(conjugate_sprime(b2, data, el({1})), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(code_of([&] { conjugate_sprime(b2, data, el({2})); }), ErrorCode::NotInParabolic);

  CoxeterGroup a2(dihedral(3, 1, 1));
  SubgroupData adata = build_subgroup(a2, 100, 100);
  EXPECT_EQ(conjugate_sprime(a2, adata, Element{}), (std::vector<std::size_t>{0, 1}));
}

TEST(Rho, Embedding) {
  CoxeterGroup b2(dihedral(4, 0, 1));
  GroupAlgebra alg(b2);
  SubgroupData data = build_subgroup(b2, 100, 100);
  ReflectionSubgroup sub(b2, data);
  SubgroupAlgebra sub_alg(sub);
  EXPECT_EQ(rho_embed(sub, HeckeElt::standard(Element{})), HeckeElt::standard(Element{}));
  EXPECT_EQ(rho_embed(sub, HeckeElt::standard(Element(Word{1}))), HeckeElt::standard(el({1, 2, 1})));
  // t . sts = tsts
  Element tr(Word{0, 1});
  EXPECT_EQ(rho_embed(sub, sub_alg.canonical(tr)), alg.canonical(el({1, 2, 1, 2})));
  EXPECT_EQ(code_of([&] { rho_embed(sub, HeckeElt::standard(Element(Word{1, 0}))); }), ErrorCode::NotInSubgroup);
}
