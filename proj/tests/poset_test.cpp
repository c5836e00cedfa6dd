#include "posetcut/poset.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "posetcut/generators.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace posetcut {
namespace {

using Relations = std::vector<Relation>;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalAssertion;
}

TEST(PosetFromRelations, TwoChain) {
  const Relations pairs{{0, 1}};
  const Poset p = poset_from_relations(2, pairs);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.relation_count(), 1u);
  EXPECT_TRUE(p.less(0, 1));
  EXPECT_FALSE(p.less(1, 0));
}

TEST(PosetFromRelations, MissingClosurePairNamesWitness) {
  const Relations pairs{{0, 1}, {1, 2}};
  try {
    poset_from_relations(3, pairs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TransitivityViolation);
    ASSERT_GE(e.witness().size(), 2u);
    EXPECT_EQ(e.witness()[0], 0u);
    EXPECT_EQ(e.witness()[1], 2u);
  }
}

TEST(PosetFromRelations, ClosedThreeChain) {
  const Relations pairs{{0, 1}, {1, 2}, {0, 2}};
  const Poset p = poset_from_relations(3, pairs);
  EXPECT_EQ(p.relation_count(), 3u);
  EXPECT_EQ(p, chain(3));
}

TEST(PosetFromRelations, DuplicatesCollapse) {
  const Relations pairs{{0, 1}, {0, 1}, {0, 1}};
  EXPECT_EQ(poset_from_relations(2, pairs).relation_count(), 1u);
}

TEST(PosetFromRelations, AxiomErrors) {
  const Relations reflexive{{1, 1}};
  const Relations antisym{{0, 1}, {1, 0}};
  const Relations out_of_range{{0, 3}};
  EXPECT_EQ(code_of([&] { poset_from_relations(2, reflexive); }),
            ErrorCode::ReflexivePair);
  EXPECT_EQ(code_of([&] { poset_from_relations(2, antisym); }),
            ErrorCode::AntisymmetryViolation);
  EXPECT_EQ(code_of([&] { poset_from_relations(3, out_of_range); }),
            ErrorCode::IdOutOfRange);
}

TEST(PosetFromRelations, EmptyAndSingleton) {
  EXPECT_EQ(poset_from_relations(0, {}).size(), 0u);
  EXPECT_EQ(poset_from_relations(1, {}).relation_count(), 0u);
}

TEST(PosetFromCovers, PathClosesToChain) {
  const Relations pairs{{0, 1}, {1, 2}, {2, 3}};
  const Poset p = poset_from_covers(4, pairs);
  EXPECT_EQ(p.relation_count(), 6u);
  EXPECT_EQ(p, chain(4));
}

TEST(PosetFromCovers, ThreeCycle) {
  const Relations pairs{{0, 1}, {1, 2}, {2, 0}};
  try {
    poset_from_covers(3, pairs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CycleDetected);
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(PosetFromCovers, SelfLoopIsACycle) {
  const Relations pairs{{2, 2}};
  EXPECT_EQ(code_of([&] { poset_from_covers(3, pairs); }),
            ErrorCode::CycleDetected);
}

TEST(PosetFromCovers, VPoset) {
  const Relations pairs{{0, 1}, {0, 2}};
  const Poset p = poset_from_covers(3, pairs);
  EXPECT_EQ(p.relation_count(), 2u);
  EXPECT_EQ(p.relations(), pairs);
}

TEST(PosetFromCovers, RedundantPairsAccepted) {
  const Relations pairs{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_EQ(poset_from_covers(3, pairs), chain(3));
}

TEST(TransitiveReduction, Chain) {
  EXPECT_EQ(transitive_reduction(chain(4)),
            (Relations{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(TransitiveReduction, AntichainIsEmpty) {
  EXPECT_TRUE(transitive_reduction(antichain(5)).empty());
}

TEST(TransitiveReduction, BooleanCubeHasTwelveCovers) {
  const Poset cube = boolean_lattice(3);
  ASSERT_EQ(cube.relation_count(), 19u);
  const auto covers = transitive_reduction(cube);
  EXPECT_EQ(covers, oracle::covers(cube));
  EXPECT_EQ(covers.size(), 12u);
}

TEST(RemoveRelation, TwoChainBecomesAntichain) {
  EXPECT_EQ(remove_relation(chain(2), 0, 1), antichain(2));
}

TEST(RemoveRelation, NonCoverRejected) {
  try {
    remove_relation(chain(3), 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACover);
    EXPECT_EQ(e.witness(), (std::vector<Element>{0, 2, 1}));
  }
}

TEST(RemoveRelation, TopCoverOfThreeChain) {
  const Poset q = remove_relation(chain(3), 1, 2);
  EXPECT_EQ(q.relations(), (Relations{{0, 1}, {0, 2}}));
  EXPECT_EQ(q.relation_count(), 2u);
  EXPECT_TRUE(oracle::satisfies_axioms(q));
}

TEST(RemoveRelation, NotARelation) {
  EXPECT_EQ(code_of([] { remove_relation(chain(3), 2, 0); }),
            ErrorCode::NotARelation);
  EXPECT_EQ(code_of([] { remove_relation(antichain(2), 0, 1); }),
            ErrorCode::NotARelation);
  EXPECT_EQ(code_of([] { remove_relation(chain(2), 0, 5); }),
            ErrorCode::IdOutOfRange);
}

TEST(ECount, Examples) {
  const Poset p = chain(4);
  const std::vector<Element> all{0, 1, 2, 3};
  const std::vector<Element> low{0, 1};
  const std::vector<Element> high{2, 3};
  EXPECT_EQ(e_count(p, all, all), 6u);
  EXPECT_EQ(e_count(p, low, high), 4u);
  EXPECT_EQ(e_count(p, {}, all), 0u);
  EXPECT_EQ(e_count(p, high, low), 0u);
}

TEST(ECount, DuplicatesCountedOnce) {
  const std::vector<Element> xs{0, 0, 0};
  const std::vector<Element> ys{3, 3};
  EXPECT_EQ(e_count(chain(4), xs, ys), 1u);
}

TEST(ECount, OutOfRange) {
  const std::vector<Element> bad{7};
  EXPECT_EQ(code_of([&] { e_count(chain(4), bad, bad); }),
            ErrorCode::IdOutOfRange);
}

TEST(Degrees, Examples) {
  EXPECT_EQ(up_degree(chain(4), 0), 3u);
  EXPECT_EQ(down_degree(chain(4), 0), 0u);
  EXPECT_EQ(up_degree(antichain(3), 1), 0u);
  EXPECT_EQ(down_degree(antichain(3), 1), 0u);
  EXPECT_EQ(up_degree(chain(3), 1), 1u);
  EXPECT_EQ(down_degree(chain(3), 1), 1u);
  EXPECT_EQ(code_of([] { up_degree(chain(3), 3); }), ErrorCode::IdOutOfRange);
}

TEST(LongestChain, Examples) {
  EXPECT_EQ(longest_chain(chain(4)).elements,
            (std::vector<Element>{3, 2, 1, 0}));
  EXPECT_EQ(longest_chain(antichain(3)).elements, (std::vector<Element>{0}));
  const Poset cube = boolean_lattice(3);
  const Chain c = longest_chain(cube);
  EXPECT_EQ(c.length(), oracle::longest_chain_length(cube));
  EXPECT_EQ(c.length(), 4u);
  // Smallest-ID tie-break from the top: 7, then 3, then 1, then 0.
  EXPECT_EQ(c.elements, (std::vector<Element>{7, 3, 1, 0}));
}

TEST(LongestChain, EmptyPoset) {
  EXPECT_EQ(code_of([] { longest_chain(Poset{}); }), ErrorCode::EmptyPoset);
}

TEST(Closedness, Examples) {
  const std::vector<Element> low{0, 1};
  EXPECT_TRUE(is_downward_closed(chain(4), low));
  EXPECT_FALSE(is_upward_closed(chain(4), low));

  const std::vector<Element> all{0, 1, 2, 3};
  for (const auto& s : {std::vector<Element>{}, all}) {
    EXPECT_TRUE(is_downward_closed(chain(4), s));
    EXPECT_TRUE(is_upward_closed(chain(4), s));
  }

  const Relations v{{0, 1}, {0, 2}};
  const Poset vee = poset_from_relations(3, v);
  const std::vector<Element> one{1};
  EXPECT_TRUE(is_upward_closed(vee, one));
  EXPECT_FALSE(is_downward_closed(vee, one));
}

TEST(LinearExtension, RespectsOrder) {
  for (const Poset& p : testing::corpus(3, 60)) {
    const auto order = linear_extension(p);
    std::vector<std::size_t> pos(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const Relation& r : p.relations()) EXPECT_LT(pos[r.lower], pos[r.upper]);
  }
}

// Properties over every labeled poset on <= 4 elements plus random samples.
class PosetProperties : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { corpus_ = new auto(testing::corpus()); }
  static void TearDownTestSuite() { delete corpus_; }
  static std::vector<Poset>* corpus_;
};
std::vector<Poset>* PosetProperties::corpus_ = nullptr;

TEST_F(PosetProperties, StoredRelationMatchesDefinition) {
  for (const Poset& p : *corpus_) {
    ASSERT_TRUE(oracle::satisfies_axioms(p));
    EXPECT_EQ(p.relation_count(), oracle::relation_count(p));
    EXPECT_EQ(poset_from_relations(p.size(), p.relations()), p);
  }
}

TEST_F(PosetProperties, ClosureOfReductionReproducesOrder) {
  for (const Poset& p : *corpus_) {
    const auto covers = transitive_reduction(p);
    EXPECT_EQ(covers, oracle::covers(p));
    EXPECT_EQ(poset_from_covers(p.size(), covers), p);
  }
}

TEST_F(PosetProperties, RemovalSucceedsExactlyOnCovers) {
  for (const Poset& p : *corpus_) {
    const auto covers = transitive_reduction(p);
    for (const Relation& r : p.relations()) {
      const bool cover =
          std::binary_search(covers.begin(), covers.end(), r);
      EXPECT_EQ(is_cover(p, r.lower, r.upper), cover);
      try {
        const Poset q = remove_relation(p, r.lower, r.upper);
        EXPECT_TRUE(cover);
        EXPECT_TRUE(oracle::satisfies_axioms(q));
        EXPECT_EQ(q.relation_count() + 1, p.relation_count());
      } catch (const Error& e) {
        EXPECT_FALSE(cover);
        EXPECT_EQ(e.code(), ErrorCode::NotACover);
      }
    }
  }
}

TEST_F(PosetProperties, DegreeSumsEqualRelationCount) {
  for (const Poset& p : *corpus_) {
    std::uint64_t up = 0, down = 0;
    for (Element v = 0; v < p.size(); ++v) {
      EXPECT_EQ(up_degree(p, v), oracle::count_above(p, v));
      EXPECT_EQ(down_degree(p, v), oracle::count_below(p, v));
      up += up_degree(p, v);
      down += down_degree(p, v);
    }
    EXPECT_EQ(up, p.relation_count());
    EXPECT_EQ(down, p.relation_count());
  }
}

TEST_F(PosetProperties, ECountIsAdditiveOverDisjointUnions) {
  std::uint64_t salt = 0;
  for (const Poset& p : *corpus_) {
    std::vector<Element> x1, x2, ys;
    for (Element v = 0; v < p.size(); ++v) {
      const std::uint64_t h = (v + 1) * 0x9E3779B97F4A7C15ULL + salt;
      if (h % 3 == 0) x1.push_back(v);
      if (h % 3 == 1) x2.push_back(v);
      if ((h >> 7) % 2 == 0) ys.push_back(v);
    }
    ++salt;
    std::vector<Element> both = x1;
    both.insert(both.end(), x2.begin(), x2.end());
    EXPECT_EQ(e_count(p, both, ys), e_count(p, x1, ys) + e_count(p, x2, ys));
    std::uint64_t direct = 0;
    for (Element x : both)
      for (Element y : ys) direct += p.less(x, y);
    EXPECT_EQ(e_count(p, both, ys), direct);
  }
}

TEST_F(PosetProperties, LongestChainIsLongestAndMadeOfCovers) {
  for (const Poset& p : *corpus_) {
    if (p.size() == 0) continue;
    const Chain c = longest_chain(p);
    EXPECT_EQ(c.length(), oracle::longest_chain_length(p));
    for (std::size_t j = 0; j + 1 < c.length(); ++j) {
      EXPECT_TRUE(oracle::is_cover(p, c.elements[j + 1], c.elements[j]));
    }
  }
}

}  // namespace
}  // namespace posetcut
