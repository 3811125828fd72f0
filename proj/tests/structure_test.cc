// Copyright 2026 The Pathcause Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pathcause/structure.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "test_util.h"

namespace pathcause {
namespace {

ConstraintInstance Conn(double s) {
  return MakeInstance(ConstraintKind::kConnectivity, {}, s);
}
ConstraintInstance Loop(double s) {
  return MakeInstance(ConstraintKind::kLoopFree, {}, s);
}
ConstraintInstance Short(double s) {
  return MakeInstance(ConstraintKind::kShortest, {}, s);
}
ConstraintInstance Ends(double s) {
  return MakeInstance(ConstraintKind::kEndpoints,
                      {{"start", NodeId("A")}, {"dest", NodeId("D")}}, s);
}
ConstraintInstance Fixed(const std::string& n, double s, bool ex = false) {
  return MakeInstance(ConstraintKind::kFixedNode, {{"node", NodeId(n)}}, s,
                      ex);
}

std::vector<std::string> Kinds(const Arrangement& a) {
  std::vector<std::string> out;
  for (const auto& c : a) out.push_back(c.KindLabel());
  return out;
}

// Independent mass: prior terms re-derived from kind names, positional
// likelihood from scratch.
double IndependentLogMass(const Arrangement& chain, double wf, double ws) {
  auto is_opt = [](const ConstraintInstance& c) {
    return c.KindLabel() == "Shortest";
  };
  auto is_local = [](const ConstraintInstance& c) {
    return c.KindLabel() == "FixedNode" || c.KindLabel() == "AvoidNode" ||
           c.KindLabel() == "Connectivity";
  };
  bool f = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (is_opt(chain[i]) && !is_opt(chain[j])) f = false;
    }
  }
  int mixed = 0, good = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (is_local(chain[i]) != is_local(chain[i + 1])) {
      ++mixed;
      good += is_local(chain[i]);
    }
  }
  double g = mixed ? static_cast<double>(good) / mixed : 0.0;
  double ll = 0.0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    ll += std::log(chain[i].score) / static_cast<double>(i + 1);
  }
  return wf * (f ? 1 : 0) + ws * g + ll;
}

void ExpectMatchesIndependent(const std::vector<ConstraintInstance>& bag,
                              const ArrangementPrior& prior) {
  auto post = PosteriorOverArrangements(bag, prior);
  std::vector<double> masses;
  for (const auto& e : post) {
    masses.push_back(IndependentLogMass(e.chain, prior.feasibility_first_weight,
                                        prior.scope_order_weight));
  }
  double mx = *std::max_element(masses.begin(), masses.end());
  double z = 0.0;
  for (double m : masses) z += std::exp(m - mx);
  for (std::size_t i = 0; i < post.size(); ++i) {
    EXPECT_NEAR(post[i].probability, std::exp(masses[i] - mx) / z, 1e-12);
  }
}

TEST(PosteriorTest, SingleInstance) {
  auto post = PosteriorOverArrangements({Conn(0.9)}, {});
  ASSERT_EQ(post.size(), 1u);
  EXPECT_DOUBLE_EQ(post[0].probability, 1.0);
}

TEST(PosteriorTest, CaseStudyBag) {
  std::vector<ConstraintInstance> bag = {Short(0.85), Loop(0.90), Conn(0.91)};
  auto post = PosteriorOverArrangements(bag, {});
  EXPECT_EQ(post.size(), 6u);
  ExpectMatchesIndependent(bag, {});
  CausalKnowledgeStructure s = MapStructure(post);
  EXPECT_EQ(Kinds(s.chain), (std::vector<std::string>{"Connectivity",
                                                       "LoopFree", "Shortest"}));
  EXPECT_EQ(s.ChainString(), "Connectivity -> LoopFree -> Shortest");
  EXPECT_TRUE(s.prior.feasibility_first);
  EXPECT_DOUBLE_EQ(s.prior.scope_order, 1.0);
}

TEST(PosteriorTest, MatchesIndependentMassOnRandomBags) {
  Rng rng(31);
  std::vector<std::function<ConstraintInstance(double)>> makers = {
      Conn, Loop, Short, Ends,
      [](double s) { return Fixed("B", s); },
      [](double s) { return Fixed("C", s, true); }};
  for (int k = 0; k < 40; ++k) {
    std::vector<ConstraintInstance> bag;
    std::vector<std::size_t> idx = {0, 1, 2, 3, 4, 5};
    for (std::size_t i = idx.size(); i > 1; --i) {
      std::swap(idx[i - 1], idx[rng.Below(i)]);
    }
    std::size_t size = rng.Between(1, 6);
    for (std::size_t i = 0; i < size; ++i) {
      bag.push_back(makers[idx[i]](0.05 + 0.9 * (rng.Below(1000) / 1000.0)));
    }
    ArrangementPrior prior{0.5 + rng.Below(100) / 10.0,
                           0.5 + rng.Below(100) / 10.0};
    ExpectMatchesIndependent(bag, prior);
  }
}

// Identical score and category: two chains, equal mass.
TEST(PosteriorTest, TwoInstanceTie) {
  std::vector<ConstraintInstance> bag = {Loop(0.8), Ends(0.8)};
  auto post = PosteriorOverArrangements(bag, {});
  ASSERT_EQ(post.size(), 2u);
  EXPECT_DOUBLE_EQ(post[0].probability, 0.5);
  EXPECT_DOUBLE_EQ(post[1].probability, 0.5);
  EXPECT_EQ(Kinds(MapStructure(post).chain),
            (std::vector<std::string>{"Endpoints", "LoopFree"}));

  auto fixed = MapStructure(
      PosteriorOverArrangements({Fixed("C", 0.7), Fixed("B", 0.7)}, {}));
  EXPECT_EQ(fixed.chain[0].bindings.at("node"), NodeId("B"));
}

TEST(PosteriorTest, NormalizesUpToEight) {
  std::vector<ConstraintInstance> pool = {
      Conn(0.9),       Loop(0.8),       Short(0.95),      Ends(0.7),
      Fixed("B", 0.6), Fixed("C", 0.65), Fixed("D", 0.5, true),
      Fixed("E", 0.55)};
  for (std::size_t n = 1; n <= pool.size(); ++n) {
    std::vector<ConstraintInstance> bag(pool.begin(), pool.begin() + n);
    auto post = PosteriorOverArrangements(bag, {});
    double sum = 0.0;
    for (const auto& e : post) sum += e.probability;
    EXPECT_NEAR(sum, 1.0, 1e-9) << n;
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(post.size(), fact);
  }
  pool.push_back(Fixed("F", 0.5));
  try {
    PosteriorOverArrangements(pool, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyInstances);
  }
}

TEST(PosteriorTest, RejectsBadInput) {
  EXPECT_THROW(PosteriorOverArrangements({}, {}), Error);
  EXPECT_THROW(PosteriorOverArrangements({Conn(0.0)}, {}), Error);
  EXPECT_THROW(PosteriorOverArrangements({Conn(0.5)}, {0.0, 1.0}), Error);
}

TEST(PosteriorTest, ArgmaxInvariantUnderScoreScaling) {
  Rng rng(77);
  for (int k = 0; k < 50; ++k) {
    std::vector<ConstraintInstance> bag = {
        Conn(0.1 + rng.Below(900) / 1000.0), Loop(0.1 + rng.Below(900) / 1000.0),
        Short(0.1 + rng.Below(900) / 1000.0),
        Fixed("B", 0.1 + rng.Below(900) / 1000.0)};
    bag.resize(rng.Between(2, 4));
    double factor = 0.1 + rng.Below(50) / 10.0;
    std::vector<ConstraintInstance> scaled = bag;
    for (auto& c : scaled) c.score *= factor;
    auto a = MapStructure(PosteriorOverArrangements(bag, {}));
    auto b = MapStructure(PosteriorOverArrangements(scaled, {}));
    EXPECT_EQ(a.ChainString(), b.ChainString());
  }
}

// With default weights, any optimization-before-feasibility chain loses to
// the chain that moves its optimization instances to the end.
TEST(PriorTest, FeasibilityFirstDominates) {
  std::vector<ConstraintInstance> bag = {Conn(0.9), Loop(0.9), Short(0.9),
                                         Ends(0.9), Fixed("B", 0.9)};
  ArrangementPrior prior;
  for (const auto& e : PosteriorOverArrangements(bag, prior)) {
    if (e.prior.feasibility_first) continue;
    Arrangement fixed = e.chain;
    std::stable_partition(fixed.begin(), fixed.end(),
                          [](const ConstraintInstance& c) {
                            return c.tmpl.category() ==
                                   ConstraintCategory::kFeasibility;
                          });
    EXPECT_LT(e.prior.log_prior, EvaluatePrior(fixed, prior).log_prior);
  }
}

TEST(MapStructureTest, ArgmaxAndTies) {
  PosteriorEntry xy{{Conn(0.5), Loop(0.5)}, 0.7, 0.0, {}};
  PosteriorEntry yx{{Loop(0.5), Conn(0.5)}, 0.3, 0.0, {}};
  EXPECT_EQ(MapStructure({yx, xy}).ChainString(), "Connectivity -> LoopFree");
  yx.probability = 0.7;
  EXPECT_EQ(MapStructure({yx, xy}).ChainString(), "Connectivity -> LoopFree");
  EXPECT_THROW(MapStructure({}), Error);
}

TEST(MapStructureTest, HigherScoreSumBreaksTies) {
  PosteriorEntry a{{Loop(0.5)}, 0.5, 0.0, {}};
  PosteriorEntry b{{Conn(0.4)}, 0.5, 0.0, {}};
  EXPECT_EQ(MapStructure({b, a}).ChainString(), "LoopFree");
}

TEST(MapStructureTest, IndependentOfInputOrder) {
  std::vector<ConstraintInstance> bag = {Conn(0.8), Loop(0.8), Ends(0.8),
                                         Fixed("B", 0.8), Fixed("C", 0.8)};
  auto post = PosteriorOverArrangements(bag, {});
  std::string expected = MapStructure(post).ChainString();
  auto expected_chain = MapStructure(post).chain;
  Rng rng(12);
  for (int k = 0; k < 10; ++k) {
    for (std::size_t i = post.size(); i > 1; --i) {
      std::swap(post[i - 1], post[rng.Below(i)]);
    }
    auto got = MapStructure(post);
    ASSERT_EQ(got.chain.size(), expected_chain.size());
    for (std::size_t i = 0; i < got.chain.size(); ++i) {
      EXPECT_TRUE(got.chain[i].SameConstraint(expected_chain[i]));
    }
  }
}

TEST(StructureIoTest, RoundTrip) {
  auto s = MapStructure(PosteriorOverArrangements(
      {Conn(0.9), Ends(0.7), Fixed("B", 0.6), Fixed("C", 0.6, true),
       Short(0.95)},
      {3.0, 1.5}));
  s.prior_weights = {3.0, 1.5};
  auto back = ParseStructure(SerializeStructure(s, R"({"seed":1})"));
  ASSERT_EQ(back.chain.size(), s.chain.size());
  for (std::size_t i = 0; i < s.chain.size(); ++i) {
    EXPECT_TRUE(back.chain[i].SameConstraint(s.chain[i]));
    EXPECT_DOUBLE_EQ(back.chain[i].score, s.chain[i].score);
  }
  EXPECT_DOUBLE_EQ(back.posterior, s.posterior);
  EXPECT_EQ(back.prior_weights, s.prior_weights);
  EXPECT_THROW(ParseStructure("{}"), Error);
}

}  // namespace
}  // namespace pathcause
