#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "skelcat/pretorsion.hpp"

using namespace skelcat;

namespace {

// all identification specs from subsets of the non-identity isos
std::vector<IdentificationSpec> iso_subset_specs(const FinCat& cat) {
  std::vector<ArrId> isos;
  for (ArrId f = 0; f < static_cast<ArrId>(cat.num_arrows()); ++f) {
    if (!cat.is_identity(f) && cat.is_iso(f)) isos.push_back(f);
  }
  std::vector<IdentificationSpec> specs;
  for (std::size_t mask = 0; mask < (1u << isos.size()); ++mask) {
    IdentificationSpec spec{cat, {}};
    for (std::size_t i = 0; i < isos.size(); ++i) {
      if (mask & (1u << i)) {
        spec.pairs.emplace_back(cat.arrow(isos[i]).dom,
                                cat.arrow(isos[i]).cod);
      }
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace

TEST_CASE("empty identification leaves singleton classes") {
  FinCat cat = tst::two_iso();
  QuotientCat q = coequalize({cat, {}});
  CHECK(q.num_classes() == 2);
  for (ArrId f = 0; f < static_cast<ArrId>(cat.num_arrows()); ++f) {
    QArrow a = q.q_map(f);
    CHECK(q.is_valid(a));
  }
}

TEST_CASE("discrete base with one pair has only the identity arrow") {
  FinCat cat = tst::discrete2();
  QuotientCat q = coequalize({cat, {{0, 1}}});
  CHECK(q.num_classes() == 1);
  Budget budget;
  auto arrows = q.enumerate_all(3, budget);
  REQUIRE(arrows.size() == 1);
  CHECK(arrows[0] == q.identity(0));
}

TEST_CASE("identifying the iso pair endpoints gives the integers") {
  FinCat cat = tst::two_iso();
  ArrId f = cat.arrow_index("f");
  ArrId g = cat.arrow_index("g");
  QuotientCat q = coequalize({cat, {{0, 1}}});
  CHECK(q.num_classes() == 1);
  CHECK(q.class_name(0) == "[X]");
  Budget budget;
  auto arrows = q.enumerate(0, 0, 2, budget);
  std::set<WordSeq> words;
  for (const QArrow& a : arrows) words.insert(a.word);
  CHECK(words == std::set<WordSeq>{{}, {f}, {g}, {f, f}, {g, g}});

  CHECK(q.q_map(cat.identity(0)) == q.identity(0));
  CHECK(q.q_map(f) == QArrow{0, {f}, 0});
  // functoriality instance: both sides are the identity
  CHECK(q.q_compose(q.q_map(f), q.q_map(g)) == q.q_map(cat.compose(f, g)));
  // 2 + (-3) = -1
  CHECK(q.q_compose(QArrow{0, {f, f}, 0}, QArrow{0, {g, g, g}, 0}) ==
        QArrow{0, {g}, 0});
  CHECK(q.q_compose(QArrow{0, {f}, 0}, QArrow{0, {g}, 0}) == q.identity(0));
  CHECK(q.q_compose(q.identity(0), QArrow{0, {f, f}, 0}) ==
        QArrow{0, {f, f}, 0});
}

TEST_CASE("q_is_iso on examples") {
  FinCat i = tst::two_iso();
  QuotientCat qi = coequalize({i, {{0, 1}}});
  CHECK(qi.q_is_iso(qi.identity(0)));
  CHECK(qi.q_is_iso(QArrow{0, {i.arrow_index("f"), i.arrow_index("f")}, 0}));

  FinCat two = tst::arrow_cat();
  QuotientCat q2 = coequalize({two, {}});
  CHECK_FALSE(q2.q_is_iso(q2.q_map(two.arrow_index("u"))));
  Budget budget;
  auto ab = q2.enumerate(q2.class_of(0), q2.class_of(1), 3, budget);
  REQUIRE(ab.size() == 1);
  CHECK(ab[0].word == WordSeq{two.arrow_index("u")});
}

TEST_CASE("faithfulness and iso reflection over all iso-subset specs") {
  for (const FinCat& cat : tst::corpus()) {
    for (const IdentificationSpec& spec : iso_subset_specs(cat)) {
      QuotientCat q = coequalize(spec);
      const auto n = static_cast<ArrId>(cat.num_arrows());
      for (ArrId x = 0; x < n; ++x) {
        // faithful: parallel arrows stay distinct, identities reflect
        for (ArrId y = 0; y < n; ++y) {
          if (x == y) continue;
          if (cat.arrow(x).dom != cat.arrow(y).dom) continue;
          if (cat.arrow(x).cod != cat.arrow(y).cod) continue;
          CHECK(q.q_map(x) != q.q_map(y));
        }
        if (q.q_map(x).word.empty()) CHECK(cat.is_identity(x));
        // reflects isomorphisms
        QArrow qx = q.q_map(x);
        if (q.q_is_iso(qx)) CHECK(cat.is_iso(x));
      }
    }
  }
}

TEST_CASE("functoriality of q_map over the corpus reflections") {
  for (const FinCat& cat : tst::corpus()) {
    ZExactSequence seq = torsionfree_reflection(cat);
    const QuotientCat& q = seq.quotient;
    const auto n = static_cast<ArrId>(cat.num_arrows());
    for (ArrId x = 0; x < n; ++x) {
      for (ArrId y = 0; y < n; ++y) {
        if (!cat.composable(x, y)) continue;
        CHECK(q.q_map(cat.compose(x, y)) ==
              q.q_compose(q.q_map(x), q.q_map(y)));
      }
    }
  }
}

TEST_CASE("iso lemma both ways on enumerated arrows") {
  for (const FinCat& cat : tst::corpus()) {
    ZExactSequence seq = torsionfree_reflection(cat);
    const QuotientCat& q = seq.quotient;
    Budget budget(50'000'000);
    for (const QArrow& a : q.enumerate_all(3, budget)) {
      bool has_inverse = false;
      for (const QArrow& b :
           q.enumerate(a.tgt, a.src, 3 + static_cast<int>(a.word.size()),
                       budget)) {
        if (q.q_compose(a, b) == q.identity(a.src) &&
            q.q_compose(b, a) == q.identity(a.tgt)) {
          has_inverse = true;
        }
      }
      CHECK(q.q_is_iso(a) == has_inverse);
    }
  }
}

TEST_CASE("enumeration yields unique normalized triples in stable order") {
  for (const FinCat& cat : tst::corpus()) {
    ZExactSequence seq = torsionfree_reflection(cat);
    Budget budget(50'000'000);
    auto arrows = seq.quotient.enumerate_all(3, budget);
    std::set<QArrow> unique(arrows.begin(), arrows.end());
    CHECK(unique.size() == arrows.size());
    for (const QArrow& a : arrows) CHECK(seq.quotient.is_valid(a));
  }
}

TEST_CASE("q_compose rejects mismatched classes") {
  FinCat cat = tst::discrete2();
  QuotientCat q = coequalize({cat, {}});
  CHECK_THROWS_AS(q.q_compose(q.identity(0), q.identity(1)),
                  std::invalid_argument);
}
