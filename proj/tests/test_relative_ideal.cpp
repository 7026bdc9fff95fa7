#include <random>

#include <gtest/gtest.h>

#include "canondeg/error.hpp"
#include "canondeg/relative_ideal.hpp"
#include "canondeg/search.hpp"
#include "oracles.hpp"

using namespace canondeg;

namespace {

NumericalSemigroup sg(std::vector<int> gens) { return NumericalSemigroup::from_generators(gens); }

std::vector<int> complement_below(const RelativeIdeal& e, int lo, int hi) {
  std::vector<int> out;
  for (int z = lo; z < hi; ++z)
    if (!e.contains(z)) out.push_back(z);
  return out;
}

// Range wide enough for every ideal built from generators in [-8, c + 8].
struct Range {
  int lo, hi;
};
Range range_for(const NumericalSemigroup& h) { return {-40 - 2 * h.conductor(), 60 + 4 * h.conductor()}; }

void expect_same(const RelativeIdeal& e, const oracle::Ideal& o, Range r, const std::string& what) {
  for (int z = r.lo; z < r.hi; ++z) ASSERT_EQ(e.contains(z), o.has(z)) << what << " z=" << z << " ideal " << e.to_string();
}

RelativeIdeal random_ideal(const NumericalSemigroup& h, std::mt19937& rng, std::vector<int>& gens_out) {
  const int count = 1 + static_cast<int>(rng() % 3);
  gens_out.clear();
  for (int i = 0; i < count; ++i) gens_out.push_back(static_cast<int>(rng() % (h.conductor() + 17)) - 8);
  return RelativeIdeal::generated_by(h, gens_out);
}

std::vector<NumericalSemigroup> sample_semigroups(int max_genus) {
  std::vector<NumericalSemigroup> out;
  for (int g = 1; g <= max_genus; ++g) {
    for (auto& h : semigroups_of_genus(g)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

TEST(RelativeIdeal, Principal) {
  const auto h = sg({3, 4, 5});
  EXPECT_EQ(RelativeIdeal::principal(h, 0), RelativeIdeal::generated_by(h, std::vector<int>{0, 3}));
  const auto p = RelativeIdeal::principal(sg({5, 7, 9}), 5);
  EXPECT_EQ(p.members_below_tail(), (std::vector<int>{5, 10, 12, 14, 15, 17}));
  EXPECT_EQ(p.min() + static_cast<int>(p.window().size()), 19);
  const auto neg = RelativeIdeal::principal(h, -2);
  EXPECT_EQ(neg.min(), -2);
  EXPECT_FALSE(neg.contains(-1));
  EXPECT_TRUE(neg.contains(1));
}

TEST(RelativeIdeal, CanonicalExamples) {
  EXPECT_EQ(complement_below(RelativeIdeal::canonical(sg({3, 4, 5})), 0, 40), (std::vector<int>{2}));
  EXPECT_EQ(complement_below(RelativeIdeal::canonical(sg({5, 7, 9})), 0, 60), (std::vector<int>{1, 3, 4, 6, 8, 13}));
  const auto h34 = sg({3, 4});
  EXPECT_EQ(RelativeIdeal::canonical(h34), RelativeIdeal::principal(h34, 0));
  EXPECT_THROW(RelativeIdeal::canonical(sg({1})), SemigroupError);
}

TEST(RelativeIdeal, SumAndProduct) {
  const auto h = sg({5, 7, 9});
  const auto unit = RelativeIdeal::principal(h, 0);
  const auto k = RelativeIdeal::canonical(h);
  EXPECT_EQ(product(unit, k), k);
  EXPECT_EQ(sum(unit, RelativeIdeal::principal(h, 5)), unit);

  const auto h378 = sg({3, 7, 8});
  const auto k378 = RelativeIdeal::canonical(h378);
  EXPECT_EQ(complement_below(k378, 0, 40), (std::vector<int>{2, 5}));
  const auto kk = product(k378, k378);
  EXPECT_EQ(kk.min(), 0);
  EXPECT_TRUE(complement_below(kk, 0, 40).empty());
}

TEST(RelativeIdeal, ColonDualTrace) {
  const auto h = sg({3, 4, 5});
  const auto unit = RelativeIdeal::principal(h, 0);
  const auto k = RelativeIdeal::canonical(h);
  const auto m = RelativeIdeal::maximal_ideal(h);
  EXPECT_EQ(colon(unit, k), m);
  EXPECT_EQ(dual(k), m);
  EXPECT_EQ(colon(unit, unit), unit);
  EXPECT_TRUE(colon(k, k).contains(0));

  const auto h579 = sg({5, 7, 9});
  const auto k579 = RelativeIdeal::canonical(h579);
  EXPECT_EQ(trace(k579), RelativeIdeal::maximal_ideal(h579));
  EXPECT_EQ(length_quotient(bidual(k579), k579), 1);
  EXPECT_EQ(bidual(RelativeIdeal::principal(h579, 4)), RelativeIdeal::principal(h579, 4));
  EXPECT_EQ(trace(RelativeIdeal::principal(h579, -3)), RelativeIdeal::principal(h579, 0));

  const auto h34 = sg({3, 4});
  EXPECT_EQ(trace(RelativeIdeal::canonical(h34)), RelativeIdeal::principal(h34, 0));
}

TEST(RelativeIdeal, Lengths) {
  const auto h = sg({5, 7, 9});
  const auto unit = RelativeIdeal::principal(h, 0);
  const auto k = RelativeIdeal::canonical(h);
  EXPECT_EQ(length_quotient(k, unit), 2);
  EXPECT_EQ(length_quotient(k, k), 0);
  EXPECT_EQ(length_quotient(unit, RelativeIdeal::principal(h, 5)), 5);
  try {
    length_quotient(unit, k);
    ADD_FAILURE();
  } catch (const SemigroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContained);
  }
}

TEST(RelativeIdeal, MinimalGenerators) {
  EXPECT_EQ(RelativeIdeal::canonical(sg({5, 7, 9})).minimal_generators(), (std::vector<int>{0, 2}));
  EXPECT_EQ(RelativeIdeal::principal(sg({5, 7, 9}), 3).minimal_generators(), (std::vector<int>{3}));
  EXPECT_EQ(RelativeIdeal::canonical(sg({13, 14, 15, 16, 17, 18, 21, 23})).minimal_generators().size(), 5u);
}

TEST(RelativeIdeal, BaseMismatch) {
  const auto a = RelativeIdeal::principal(sg({3, 4, 5}), 0);
  const auto b = RelativeIdeal::principal(sg({5, 7, 9}), 0);
  for (auto op : {+[](const RelativeIdeal& x, const RelativeIdeal& y) { return sum(x, y); },
                  +[](const RelativeIdeal& x, const RelativeIdeal& y) { return product(x, y); },
                  +[](const RelativeIdeal& x, const RelativeIdeal& y) { return colon(x, y); }}) {
    try {
      op(a, b);
      ADD_FAILURE();
    } catch (const SemigroupError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BaseMismatch);
    }
  }
  // equal bases built separately are compatible
  EXPECT_NO_THROW(product(a, RelativeIdeal::principal(sg({5, 4, 3}), 1)));
}

// Every operation against the set-based oracle evaluated on a wide range;
// any truncation in the window representation would show up as a mismatch.
TEST(RelativeIdealProperty, OperationsMatchOracle) {
  std::mt19937 rng(2024);
  const auto semigroups = sample_semigroups(9);
  std::vector<int> ge, gf;
  for (int trial = 0; trial < 400; ++trial) {
    const auto& h = semigroups[rng() % semigroups.size()];
    const auto oh = oracle::semigroup(h.generators());
    const Range r = range_for(h);
    const auto e = random_ideal(h, rng, ge);
    const auto f = random_ideal(h, rng, gf);
    const auto oe = oracle::generated(oh, ge, r.lo, r.hi);
    const auto of = oracle::generated(oh, gf, r.lo, r.hi);
    const std::string tag = h.to_string();

    expect_same(e, oe, r, tag + " generated");
    expect_same(sum(e, f), oracle::from_predicate(r.lo, r.hi, [&](int z) { return oe.has(z) || of.has(z); }), r,
                tag + " sum");
    expect_same(product(e, f), oracle::product(oe, of), {r.lo, r.hi / 2}, tag + " product");
    expect_same(colon(e, f), oracle::colon(oe, of, r.lo, r.hi / 2), {r.lo, r.hi / 2}, tag + " colon");

    std::vector<int> expect_gens;
    for (int z = r.lo; z < r.hi / 2; ++z) {
      if (!oe.has(z)) continue;
      bool reducible = false;
      for (int g : h.generators()) reducible = reducible || oe.has(z - g);
      if (!reducible) expect_gens.push_back(z);
    }
    ASSERT_EQ(e.minimal_generators(), expect_gens) << tag;
  }
}

TEST(RelativeIdealProperty, DualityIdentities) {
  std::mt19937 rng(99);
  const auto semigroups = sample_semigroups(12);
  std::vector<int> gens;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto& h = semigroups[rng() % semigroups.size()];
    const auto e = random_ideal(h, rng, gens);
    const auto d = dual(e);
    const auto dd = dual(d);
    ASSERT_TRUE(e.is_subset_of(dd)) << h.to_string() << " " << e.to_string();
    ASSERT_EQ(dual(dd), d);
    ASSERT_EQ(bidual(dd), dd);
    ASSERT_EQ(dual(bidual(e)), d);

    // (a) : ((a) : E) is the bidual for any shift a
    const int a = static_cast<int>(rng() % 21) - 10;
    const auto pa = RelativeIdeal::principal(h, a);
    ASSERT_EQ(colon(pa, colon(pa, e)), dd) << h.to_string() << " a=" << a;

    const int v = static_cast<int>(rng() % 21) - 10;
    ASSERT_EQ(trace(e.shifted(v)), trace(e));
    ASSERT_TRUE(trace(e).is_subset_of(RelativeIdeal::principal(h, 0)));
  }
}

TEST(RelativeIdealProperty, CanonicalGeneratorsCountIsType) {
  for (int g = 1; g <= 15; ++g) {
    for (const auto& h : semigroups_of_genus(g)) {
      const auto k = RelativeIdeal::canonical(h);
      ASSERT_EQ(static_cast<int>(k.minimal_generators().size()), h.profile().type) << h.to_string();
      ASSERT_TRUE(RelativeIdeal::principal(h, 0).is_subset_of(k));
      ASSERT_EQ(k.min(), 0);
    }
  }
}
