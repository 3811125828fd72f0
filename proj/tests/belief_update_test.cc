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

#include "pathcause/belief_update.h"

#include <gtest/gtest.h>

#include "pathcause/oracle.h"
#include "test_util.h"

namespace pathcause {
namespace {

using testing::Model;

struct Fixture {
  Topology t = testing::LoadFixtureTopology("t2_transfer.json");
  EnumerationLimits limits{4};
  BeliefState state{{Model(ConstraintKind::kConnectivity, 10, 10, 2, 10),
                     Model(ConstraintKind::kLoopFree, 10, 10, 2, 10),
                     Model(ConstraintKind::kShortest, 10, 10, 0, 10),
                     Model(ConstraintKind::kFixedNode, 10, 10, 1, 10)},
                    {}};

  CausalKnowledgeStructure Chain(std::vector<ConstraintKind> kinds) {
    CausalKnowledgeStructure s;
    for (ConstraintKind k : kinds) {
      std::map<std::string, NodeId> b;
      if (k == ConstraintKind::kFixedNode) b["node"] = NodeId("B");
      s.chain.push_back(MakeInstance(k, b, 0.9));
    }
    return s;
  }
};

TEST(BeliefUpdateTest, PerfectTraceAddsSelectedCountsAndGrowsWeight) {
  Fixture f;
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  auto cks = f.Chain({ConstraintKind::kConnectivity, ConstraintKind::kLoopFree,
                      ConstraintKind::kShortest});
  ExecutionTrace trace = Execute(cks, f.t, intent, f.limits);
  PathSet target = OracleTargetSpace(f.t, intent, f.limits);
  BeliefState next = UpdateBeliefs(f.state, cks, trace, target);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(next.library[i].sel_sat, f.state.library[i].sel_sat + 1);
    EXPECT_EQ(next.library[i].sel_tot, f.state.library[i].sel_tot + 1);
    EXPECT_EQ(next.library[i].dis_tot, f.state.library[i].dis_tot);
  }
  EXPECT_EQ(next.library[3], f.state.library[3]);
  EXPECT_DOUBLE_EQ(next.prior.feasibility_first_weight, 4.0 * 1.05);
  EXPECT_DOUBLE_EQ(next.prior.scope_order_weight, 2.0);
}

TEST(BeliefUpdateTest, FalseEliminationAddsDiscardCountsAndDecays) {
  Fixture f;
  Intent intent = ParseIntent("FIND PATH FROM A TO D VIA B");
  auto cks = f.Chain({ConstraintKind::kConnectivity, ConstraintKind::kShortest,
                      ConstraintKind::kFixedNode});
  ExecutionTrace trace = Execute(cks, f.t, intent, f.limits);
  PathSet target = OracleTargetSpace(f.t, intent, f.limits);
  ASSERT_EQ(target.size(), 2u);
  BeliefState next = UpdateBeliefs(f.state, cks, trace, target);
  const LikelihoodModel& s = next.library[2];
  EXPECT_EQ(s.dis_sat, f.state.library[2].dis_sat + 2);
  EXPECT_EQ(s.dis_tot, f.state.library[2].dis_tot + 2);
  EXPECT_EQ(s.sel_tot, f.state.library[2].sel_tot);
  EXPECT_LT(s.score(), f.state.library[2].score());
  EXPECT_EQ(next.library[0].sel_sat, f.state.library[0].sel_sat + 2);
  EXPECT_DOUBLE_EQ(next.prior.feasibility_first_weight, 4.0 * 0.9);
}

TEST(BeliefUpdateTest, WeightSaturatesAtCap) {
  Fixture f;
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  auto cks = f.Chain({ConstraintKind::kConnectivity, ConstraintKind::kLoopFree,
                      ConstraintKind::kShortest});
  ExecutionTrace trace = Execute(cks, f.t, intent, f.limits);
  PathSet target = OracleTargetSpace(f.t, intent, f.limits);
  BeliefState s = f.state;
  for (int i = 0; i < 100; ++i) s = UpdateBeliefs(s, cks, trace, target);
  EXPECT_DOUBLE_EQ(s.prior.feasibility_first_weight, 10.0);
}

TEST(BeliefUpdateTest, Errors) {
  Fixture f;
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  auto cks = f.Chain({ConstraintKind::kConnectivity, ConstraintKind::kLoopFree});
  ExecutionTrace trace = Execute(cks, f.t, intent, f.limits);
  PathSet target = OracleTargetSpace(f.t, intent, f.limits);
  auto other = f.Chain({ConstraintKind::kLoopFree, ConstraintKind::kConnectivity});
  auto shorter = f.Chain({ConstraintKind::kConnectivity});
  for (const auto* s : {&other, &shorter}) {
    try {
      UpdateBeliefs(f.state, *s, trace, target);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kTraceMismatch);
    }
  }
  EXPECT_THROW(UpdateBeliefs(f.state, cks, trace, PathSet{}), Error);
}

}  // namespace
}  // namespace pathcause
