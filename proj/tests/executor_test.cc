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

#include "pathcause/executor.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "pathcause/explain.h"
#include "pathcause/flow_rules.h"
#include "pathcause/oracle.h"
#include "test_util.h"

namespace pathcause {
namespace {

CausalKnowledgeStructure Chain(std::vector<ConstraintInstance> chain) {
  CausalKnowledgeStructure s;
  s.chain = std::move(chain);
  s.posterior = 1.0;
  return s;
}

ConstraintInstance Conn() {
  return MakeInstance(ConstraintKind::kConnectivity, {}, 0.9);
}
ConstraintInstance Loop() {
  return MakeInstance(ConstraintKind::kLoopFree, {}, 0.9);
}
ConstraintInstance Short() {
  return MakeInstance(ConstraintKind::kShortest, {}, 0.9);
}
ConstraintInstance Ends(const Intent& i) {
  return MakeInstance(ConstraintKind::kEndpoints,
                      {{"start", i.start}, {"dest", i.dest}}, 0.9);
}
ConstraintInstance Fixed(const std::string& n, bool exclude = false) {
  return MakeInstance(ConstraintKind::kFixedNode, {{"node", NodeId(n)}}, 0.9,
                      exclude);
}

Topology T2() { return testing::LoadFixtureTopology("t2_transfer.json"); }
EnumerationLimits Full(const Topology& t) {
  return {static_cast<int>(t.nodes().size()) - 1};
}

Topology Triangle() {
  return BuildTopology("tri", {NodeId("A"), NodeId("B"), NodeId("C")},
                       {Link{NodeId("A"), NodeId("B")},
                        Link{NodeId("B"), NodeId("C")},
                        Link{NodeId("A"), NodeId("C")}});
}

TEST(ExecuteTest, CaseStudyChainReachesOracle) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  ExecutionTrace trace =
      Execute(Chain({Conn(), Loop(), Short()}), t, intent, Full(t));
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.final, OracleTargetSpace(t, intent, Full(t)));
  EXPECT_EQ(trace.final, PathSet({Path{"A", "E", "D"}}));
  EXPECT_EQ(trace.steps[0].before, trace.solution_space);
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    EXPECT_EQ(trace.steps[i].before, trace.steps[i - 1].survivors);
    EXPECT_LE(trace.steps[i].before.size(), trace.steps[i - 1].before.size());
  }
  EXPECT_TRUE(AuditTrace(trace, t).empty());
  EXPECT_EQ(trace.steps[2].shortest_reference, Rational(2));
}

TEST(ExecuteTest, ConnectivityOnlyKeepsConnectedCandidates) {
  Topology t = Triangle();
  ExecutionTrace trace = Execute(Chain({Conn()}), t,
                                 ParseIntent("FIND PATH FROM A TO C"), {2});
  PathSet expected;
  for (const Path& p : trace.solution_space) {
    if (PathPredicates(t, p).is_connected) expected.Insert(p);
  }
  EXPECT_EQ(trace.final, expected);
  EXPECT_EQ(trace.final, PathSet({Path{"A", "B", "C"}, Path{"A", "C"}}));
  for (const Elimination& e : trace.steps[0].eliminated) {
    EXPECT_NE(e.reason.find("absent from topology"), std::string::npos);
  }
}

TEST(ExecuteTest, UnboundEntity) {
  Topology t = T2();
  for (auto intent_text : {"FIND PATH FROM A TO D", "FIND PATH FROM A TO Z"}) {
    try {
      Execute(Chain({Conn(), Fixed("Z")}), t, ParseIntent(intent_text),
              Full(t));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnboundEntity);
    }
  }
}

TEST(ExecuteTest, ReasonsAreSoundOnRandomChains) {
  Rng rng(51);
  for (int k = 0; k < 40; ++k) {
    int n = static_cast<int>(rng.Between(3, 5));
    Topology t = testing::RandomTopology(rng, n, 50, k % 2 == 0);
    Intent intent = testing::PathIntent(t.nodes()[0], t.nodes()[n - 1]);
    std::vector<ConstraintInstance> pool = {Conn(), Loop(), Short(),
                                            Ends(intent), Fixed("N1"),
                                            Fixed("N1", true)};
    for (std::size_t i = pool.size(); i > 1; --i) {
      std::swap(pool[i - 1], pool[rng.Below(i)]);
    }
    pool.resize(rng.Between(1, 5));
    ExecutionTrace trace = Execute(Chain(pool), t, intent, Full(t));
    EXPECT_TRUE(AuditTrace(trace, t).empty());
    for (const FilterStep& s : trace.steps) {
      EXPECT_EQ(s.survivors.size() + s.eliminated.size(), s.before.size());
    }
  }
}

TEST(AuditTraceTest, FlagsTamperedEliminations) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  ExecutionTrace trace = Execute(Chain({Conn(), Loop()}), t, intent, Full(t));
  ExecutionTrace bad = trace;
  bad.steps[1].eliminated.push_back({*bad.steps[1].survivors.begin(), "x"});
  EXPECT_FALSE(AuditTrace(bad, t).empty());
}

// Feasibility steps commute; only the order of the optimization step can
// change the outcome.
TEST(ExecuteTest, FeasibilityStepsCommute) {
  Rng rng(61);
  for (int k = 0; k < 20; ++k) {
    Topology t = testing::RandomConnectedTopology(rng, 5, 40, 3);
    Intent intent = testing::PathIntent(t.nodes()[0], t.nodes()[4]);
    intent.via = {t.nodes()[2]};
    std::vector<ConstraintInstance> feas = {Conn(), Loop(), Ends(intent),
                                            Fixed(t.nodes()[2].str())};
    std::sort(feas.begin(), feas.end(), ConstraintIdentityLess);
    PathSet target = OracleTargetSpace(t, intent, Full(t));
    // A leaf via node admits no simple path; nothing to compare.
    if (target.empty()) continue;
    std::optional<PathSet> first;
    do {
      auto chain = feas;
      chain.push_back(Short());
      ExecutionTrace trace = Execute(Chain(chain), t, intent, Full(t));
      if (!first) first = trace.final;
      EXPECT_EQ(trace.final, *first);
      auto m = ComputeMetrics(trace, target);
      EXPECT_EQ(m.back().recall, Rational(1));
      EXPECT_EQ(m.back().precision, Rational(1));
    } while (std::next_permutation(feas.begin(), feas.end(),
                                   ConstraintIdentityLess));
  }
}

TEST(ExecuteTest, ShortestFirstCounterexample) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D VIA B");
  PathSet target = OracleTargetSpace(t, intent, Full(t));
  ExecutionTrace good = Execute(
      Chain({Conn(), Loop(), Ends(intent), Fixed("B"), Short()}), t, intent,
      Full(t));
  ExecutionTrace bad = Execute(
      Chain({Short(), Conn(), Loop(), Ends(intent), Fixed("B")}), t, intent,
      Full(t));
  EXPECT_EQ(good.final, target);
  EXPECT_NE(bad.final, good.final);
  EXPECT_TRUE(bad.final.empty());
  EXPECT_LT(ComputeMetrics(bad, target).front().recall, Rational(1));
}

TEST(MetricsTest, CaseStudyShape) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  ExecutionTrace trace =
      Execute(Chain({Conn(), Loop(), Short()}), t, intent, Full(t));
  auto m = ComputeMetrics(trace, OracleTargetSpace(t, intent, Full(t)));
  ASSERT_EQ(m.size(), 3u);
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_EQ(m[i].recall, Rational(1));
    if (i > 0) {
      EXPECT_LE(m[i - 1].precision, m[i].precision);
    }
  }
  EXPECT_EQ(m[0].precision, Rational(1, 9));
  EXPECT_EQ(m[1].precision, Rational(1, 4));
  EXPECT_EQ(m[2].precision, Rational(1));
  EXPECT_EQ(MetricsCsv(m),
            "step,constraint,subspace_size,P,R\n"
            "0,Connectivity,9,1/9,1\n"
            "1,LoopFree,4,0.25,1\n"
            "2,Shortest,1,1,1\n");
  std::string with_cfg = MetricsCsv(m, R"({"seed":7})");
  EXPECT_EQ(with_cfg.rfind("# run_config {\"seed\":7}\n", 0), 0u);
}

TEST(MetricsTest, ZeroStepTrace) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  ExecutionTrace trace = Execute(Chain({}), t, intent, Full(t));
  PathSet target = OracleTargetSpace(t, intent, Full(t));
  auto m = ComputeMetrics(trace, target);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].recall, Rational(1));
  EXPECT_EQ(m[0].precision,
            Rational(static_cast<std::int64_t>(target.size()),
                     static_cast<std::int64_t>(trace.solution_space.size())));
}

TEST(MetricsTest, DroppedTargetLowersRecallFromThatStep) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D VIA B");
  PathSet target = OracleTargetSpace(t, intent, Full(t));
  ExecutionTrace trace =
      Execute(Chain({Conn(), Short(), Fixed("B")}), t, intent, Full(t));
  auto m = ComputeMetrics(trace, target);
  // Hand scan: Connectivity keeps every connected A..D walk, so all targets
  // survive; Shortest keeps only A-E-D.
  EXPECT_EQ(m[0].recall, Rational(1));
  EXPECT_EQ(m[1].recall, Rational(0));
  EXPECT_EQ(m[2].recall, Rational(0));
  EXPECT_EQ(m[2].precision, Rational(0));
  EXPECT_THROW(ComputeMetrics(trace, PathSet{}), Error);
}

TEST(MetricsTest, LabelsWithCommasAreQuoted) {
  StepMetrics s{0, "Endpoints(dest=D,start=A)", 4, Rational(1, 4), Rational(1)};
  EXPECT_EQ(MetricsCsv({s}),
            "step,constraint,subspace_size,P,R\n"
            "0,\"Endpoints(dest=D,start=A)\",4,0.25,1\n");
}

TEST(ExplainTest, TextFollowsStepOrder) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  ExecutionTrace trace = Execute(Chain({Conn(), Loop(), Ends(intent), Short()}),
                                 t, intent, Full(t));
  std::string text = RenderText(Explain(trace, t));
  std::size_t c = text.find("connectivity");
  std::size_t l = text.find("loop-free");
  std::size_t d = text.find("dead-lock free");
  std::size_t s = text.find("shortest");
  ASSERT_NE(c, std::string::npos);
  ASSERT_NE(l, std::string::npos);
  ASSERT_NE(d, std::string::npos);
  ASSERT_NE(s, std::string::npos);
  EXPECT_LT(c, l);
  EXPECT_LT(l, s);
  EXPECT_NE(text.find("no candidate was eliminated"), std::string::npos);
  EXPECT_NE(text.find("A-E-D"), std::string::npos);
  EXPECT_NE(text.find("... and 142 more"), std::string::npos);
}

TEST(ExplainTest, LinkAccounting) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  ExecutionTrace trace =
      Execute(Chain({Conn(), Loop(), Short()}), t, intent, Full(t));
  Explanation e = Explain(trace, t);
  ASSERT_EQ(e.links.size(), t.links().size());
  for (const LinkExplanation& l : e.links) {
    bool on = (l.src == NodeId("D") && l.dst == NodeId("E")) ||
              (l.src == NodeId("E") && l.dst == NodeId("A"));
    EXPECT_EQ(l.on_selected_path, on) << l.src.str() << l.dst.str();
    if (!on) {
      EXPECT_EQ(l.dropped_at_step, 2u);
    }
  }
  ASSERT_EQ(e.selected.size(), 1u);
  EXPECT_EQ(e.steps.size(), 3u);
  EXPECT_EQ(e.steps[0].before, trace.solution_space.size());
}

TEST(ExplainTest, MachineRenderingRoundTrips) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D VIA B");
  ExecutionTrace trace = Execute(
      Chain({Conn(), Loop(), Ends(intent), Fixed("B"), Short()}), t, intent,
      Full(t));
  Explanation e = Explain(trace, t);
  Explanation back = ParseMachine(RenderMachine(e, R"({"seed":1})"));
  EXPECT_EQ(back, e);
  std::size_t all = 0;
  for (const auto& s : back.steps) all += s.eliminated.size();
  std::size_t expected = 0;
  for (const auto& s : trace.steps) expected += s.eliminated.size();
  EXPECT_EQ(all, expected);
  EXPECT_THROW(ParseMachine("[]"), Error);
}

TEST(FlowRulesTest, Examples) {
  Topology t = BuildTopology("f", {NodeId("A"), NodeId("B"), NodeId("D")},
                             {Link{NodeId("A"), NodeId("B")},
                              Link{NodeId("B"), NodeId("D")}});
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  auto rules = ExportFlowRules(Path{"A", "B", "D"}, t, intent);
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0],
            (FlowRule{NodeId("A"), NodeId("A"), NodeId("D"), NodeId("B")}));
  EXPECT_EQ(rules[1],
            (FlowRule{NodeId("B"), NodeId("A"), NodeId("D"), NodeId("D")}));
  EXPECT_EQ(ReplayFlowRules(rules, intent), (Path{"A", "B", "D"}));
  EXPECT_TRUE(ExportFlowRules(Path{"A"}, t, intent).empty());
  EXPECT_EQ(ParseFlowRules(SerializeFlowRules(rules, R"({"x":1})")), rules);
}

TEST(FlowRulesTest, InvalidPaths) {
  Topology t = T2();
  Intent intent = ParseIntent("FIND PATH FROM A TO D");
  for (const Path& p : {Path{"A", "C", "D"}, Path{"A", "B", "A", "E", "D"},
                        Path{"B", "C", "D"}, Path{"A", "B", "C"}}) {
    try {
      ExportFlowRules(p, t, intent);
      ADD_FAILURE() << p.ToString();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidPath);
    }
  }
}

TEST(FlowRulesTest, ReplayReconstructsOraclePaths) {
  Rng rng(100);
  std::size_t replayed = 0;
  for (int k = 0; k < 100; ++k) {
    int n = static_cast<int>(rng.Between(3, 6));
    Topology t = testing::RandomTopology(rng, n, 45, k % 2 == 0);
    Intent intent = testing::PathIntent(t.nodes()[0], t.nodes()[n - 1]);
    intent.objective = Objective::kAny;
    for (const Path& p : OracleTargetSpace(t, intent, Full(t))) {
      EXPECT_EQ(ReplayFlowRules(ExportFlowRules(p, t, intent), intent), p);
      ++replayed;
    }
  }
  EXPECT_GT(replayed, 100u);
}

}  // namespace
}  // namespace pathcause
