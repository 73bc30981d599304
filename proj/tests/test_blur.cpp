#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "relwb/blur.hpp"
#include "relwb/constructions.hpp"
#include "relwb/ra.hpp"

using namespace relwb;

namespace {

// every diversity triple consistent, identity triples exactly the forced ones
RaAtomStructure flexible_ra(int diversity) {
  RaAtomStructure S(1 + diversity);
  S.identity.set(0);
  S.names[0] = "Id";
  for (int a = 1; a <= diversity; ++a) S.names[a] = "d" + std::to_string(a);
  for (int a = 0; a < S.k; ++a)
    for (int b = 0; b < S.k; ++b)
      for (int c = 0; c < S.k; ++c) {
        int zeros = (a == 0) + (b == 0) + (c == 0);
        bool ok = zeros == 0 || zeros == 3 ||
                  (zeros == 1 && ((a == 0 && b == c) || (b == 0 && a == c) ||
                                  (c == 0 && a == b)));
        if (ok) S.consistent.set(a, b, c);
      }
  return S;
}

bool hasAxiom(const CheckReport& r, const std::string& id) {
  for (const auto& c : r.counterexamples)
    if (c.axiomId == id) return true;
  return false;
}

} // namespace

TEST_CASE("flexible structure with wide subsets is a complex blur") {
  RaAtomStructure S = flexible_ra(20);  // |I| = 2(m-1)l for m=3, l=5
  REQUIRE(check_ra_atomstructure(S).passed);
  BlurInstance B = blur_all_subsets(S, 5, 3);
  CHECK(B.J.size() == 15504);  // 20 choose 5
  CheckReport rep = blur_check(B);
  CHECK(rep.passed);
  CHECK(rep.stats.at("J") == 15504);
  CHECK(rep.stats.at("I") == 20);

  // flexibility even carries singleton blurs: nothing is ever forbidden,
  // so the safety witness T can always be found
  CHECK(blur_check(blur_all_subsets(S, 1, 3)).passed);
}

TEST_CASE("an empty member fails condition 1") {
  RaAtomStructure S = flexible_ra(4);
  BlurInstance B = blur_all_subsets(S, 2, 3);
  B.J.push_back(AtomSet(S.k));
  CheckReport rep = blur_check(B);
  CHECK_FALSE(rep.passed);
  REQUIRE(!rep.counterexamples.empty());
  CHECK(rep.counterexamples.front().axiomId == "blur-1-nonempty");
}

TEST_CASE("a family missing atoms fails condition 2") {
  RaAtomStructure S = flexible_ra(4);
  BlurInstance B = blur_all_subsets(S, 2, 3);
  B.J.resize(1);  // {d1,d2} alone does not cover I
  CheckReport rep = blur_check(B);
  CHECK_FALSE(rep.passed);
  REQUIRE(!rep.counterexamples.empty());
  CHECK(rep.counterexamples.front().axiomId == "blur-2-cover");
}

TEST_CASE("two colour families with singleton blurs fail composition and safety") {
  // bin(3,1,10): 20 diversity atoms in two families, all same-family
  // triangles forbidden.  Singleton W's cannot cover I (condition 3), and
  // one same-family pair per family excludes every colour a T could take
  // (condition 4) -- exactly the V_i=W_i singleton derivation.
  RaAtomStructure S = bin(3, 1, 10);
  BlurInstance B = blur_all_subsets(S, 1, 3);
  CHECK(B.J.size() == 20);
  CheckReport rep = blur_check(B);
  CHECK_FALSE(rep.passed);
  REQUIRE(!rep.counterexamples.empty());
  CHECK(rep.counterexamples.front().axiomId == "blur-3-composition");
  CHECK(hasAxiom(rep, "blur-4-safe"));
}

TEST_CASE("transversal pairs pass coverage and composition but fail safety first") {
  RaAtomStructure S = bin(3, 1, 10);
  BlurInstance B;
  B.S = S;
  B.I = ~S.identity & AtomSet::full(S.k);
  B.m = 3;
  // one atom from each family: composition through the opposite family
  // always works, so conditions 1-3 hold
  for (int a = 1; a <= 10; ++a)
    for (int b = 11; b <= 20; ++b) {
      AtomSet W(S.k);
      W.set(a);
      W.set(b);
      B.J.push_back(W);
    }
  CheckReport rep = blur_check(B);
  CHECK_FALSE(rep.passed);
  REQUIRE(!rep.counterexamples.empty());
  CHECK(rep.counterexamples.front().axiomId == "blur-4-safe");
  CHECK(hasAxiom(rep, "blur-5-intersect"));
  CHECK_FALSE(hasAxiom(rep, "blur-1-nonempty"));
  CHECK_FALSE(hasAxiom(rep, "blur-2-cover"));
  CHECK_FALSE(hasAxiom(rep, "blur-3-composition"));
}

TEST_CASE("budget and usage errors") {
  RaAtomStructure S = bin(3, 1, 10);
  // all 5-subsets over a structure with forbidden triangles: the safety pair
  // scan alone would run 15504^2 x 25 set unions
  CHECK_THROWS_AS(blur_check(blur_all_subsets(S, 5, 3)), BudgetError);
  CHECK_THROWS_AS(blur_all_subsets(S, 5, 3, /*maxSets=*/100), BudgetError);
  CHECK_THROWS_AS(blur_all_subsets(S, 0, 3), UsageError);
  CHECK_THROWS_AS(blur_all_subsets(S, 1, 1), UsageError);
  CHECK_THROWS_AS(blur_all_subsets(S, 21, 3), UsageError);

  BlurInstance B = blur_all_subsets(S, 1, 3);
  B.I.reset(1);  // no longer the diversity set
  CHECK_THROWS_AS(blur_check(B), UsageError);

  B = blur_all_subsets(S, 1, 3);
  AtomSet withId(S.k);
  withId.set(0);
  withId.set(1);
  B.J.push_back(withId);  // contains the identity atom
  CHECK_THROWS_AS(blur_check(B), UsageError);
}

TEST_CASE("safety dedupe is serial-parallel deterministic") {
  RaAtomStructure S = bin(3, 1, 4);
  BlurInstance B = blur_all_subsets(S, 2, 3);
  CheckReport a = blur_check(B, kDefaultBlurOps, 1);
  CheckReport b = blur_check(B, kDefaultBlurOps, 0);
  CHECK(a.passed == b.passed);
  REQUIRE(a.counterexamples.size() == b.counterexamples.size());
  for (size_t i = 0; i < a.counterexamples.size(); ++i) {
    CHECK(a.counterexamples[i].axiomId == b.counterexamples[i].axiomId);
    CHECK(a.counterexamples[i].witness == b.counterexamples[i].witness);
  }
  CHECK(a.stats.at("distinct_bad_sets") == b.stats.at("distinct_bad_sets"));
}
