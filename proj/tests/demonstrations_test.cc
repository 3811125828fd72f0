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

#include "pathcause/demonstrations.h"

#include <gtest/gtest.h>

#include <sstream>

#include "pathcause/oracle.h"
#include "pathcause/topology_io.h"
#include "test_util.h"

namespace pathcause {
namespace {

ErrorCode LoadCode(const std::string& doc) {
  try {
    ParseDemonstrations(doc);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

const char* kTopo =
    R"({"label":"T","nodes":["A","B","C"],"links":[{"src":"A","dst":"B"},{"src":"B","dst":"C"}]})";

std::string Corpus(const std::string& records) {
  return std::string(R"({"topologies":[)") + kTopo + R"(],"records":[)" +
         records + "]}";
}

Topology Triangle() {
  return BuildTopology("tri", {NodeId("A"), NodeId("B"), NodeId("C")},
                       {Link{NodeId("A"), NodeId("B")},
                        Link{NodeId("B"), NodeId("C")},
                        Link{NodeId("A"), NodeId("C")}});
}

// Independent line-oriented scan: one record per line in the fixture.
TEST(FixtureCorpusTest, RecordCountByLineScan) {
  std::istringstream in(
      ReadTextFile(testing::FixturePath("corpus_two_topologies.json")));
  std::string line;
  int records = 0;
  int topologies = 0;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    if (line.compare(first, 12, "{\"topology\":") == 0) ++records;
    if (line.compare(first, 9, "{\"label\":") == 0) ++topologies;
  }
  EXPECT_EQ(records, 20);
  EXPECT_EQ(topologies, 2);
  DemonstrationSet ds = ParseDemonstrations(
      ReadTextFile(testing::FixturePath("corpus_two_topologies.json")));
  EXPECT_EQ(static_cast<int>(ds.records.size()), records);
  EXPECT_EQ(static_cast<int>(ds.topologies.size()), topologies);
}

TEST(LoadDemonstrationsTest, Errors) {
  EXPECT_EQ(LoadCode("not json"), ErrorCode::kParseError);
  EXPECT_EQ(LoadCode(R"({"records":[]})"), ErrorCode::kParseError);
  EXPECT_EQ(LoadCode(Corpus(
                R"({"topology":"T","selected":[["A","B"]],"discarded":[["A","B"]]})")),
            ErrorCode::kOverlappingSets);
  EXPECT_EQ(
      LoadCode(Corpus(R"({"topology":"T","selected":[],"discarded":[["A"]]})")),
      ErrorCode::kEmptySelected);
  EXPECT_EQ(LoadCode(Corpus(
                R"({"topology":"Q","selected":[["A","B"]],"discarded":[]})")),
            ErrorCode::kUnknownTopologyLabel);
  EXPECT_EQ(LoadCode(Corpus(
                R"({"topology":"T","selected":[["A","Z"]],"discarded":[]})")),
            ErrorCode::kUnknownEndpoint);
  EXPECT_EQ(
      LoadCode(Corpus(R"({"topology":"T","selected":[[]],"discarded":[]})")),
      ErrorCode::kParseError);
}

TEST(LoadDemonstrationsTest, OrderPreservedAndSeedOptional) {
  DemonstrationSet ds = ParseDemonstrations(Corpus(
      R"({"topology":"T","selected":[["B","C"]],"discarded":[]},)"
      R"({"topology":"T","selected":[["A","B"]],"discarded":[["A","C"]]})"));
  ASSERT_EQ(ds.records.size(), 2u);
  EXPECT_TRUE(ds.records[0].selected.Contains(Path{"B", "C"}));
  EXPECT_TRUE(ds.records[1].discarded.Contains(Path{"A", "C"}));
  EXPECT_FALSE(ds.seed.has_value());
}

TEST(GenerateTest, TriangleSelectedIsOracle) {
  Topology t = Triangle();
  DemonstrationSet ds = GenerateDemonstrations(t, PolicySpec{}, 1, 7);
  ASSERT_EQ(ds.records.size(), 1u);
  const PracticeRecord& r = ds.records[0];
  const Path& any = *r.selected.begin();
  Intent intent;
  intent.start = any.front();
  intent.dest = any.back();
  EXPECT_EQ(r.selected, OracleTargetSpace(t, intent, {2}));
  EXPECT_EQ(ds.seed, 7);
}

TEST(GenerateTest, Preconditions) {
  Topology t = Triangle();
  auto code = [&](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParseError;
  };
  EXPECT_EQ(code([&] { GenerateDemonstrations(t, PolicySpec{}, 0, 7); }),
            ErrorCode::kInvalidArgument);
  PolicySpec bad_via;
  bad_via.via = NodeId("Q");
  EXPECT_EQ(code([&] { GenerateDemonstrations(t, bad_via, 1, 7); }),
            ErrorCode::kUnknownEndpoint);
  Topology isolated =
      BuildTopology("iso", {NodeId("A"), NodeId("B"), NodeId("C")}, {});
  EXPECT_EQ(code([&] { GenerateDemonstrations(isolated, PolicySpec{}, 1, 7); }),
            ErrorCode::kNoValidPath);
}

TEST(GenerateTest, DeterministicAndRoundTrips) {
  Topology t1 = testing::LoadFixtureTopology("t1_training.json");
  DemonstrationSet a = GenerateDemonstrations(t1, PolicySpec{}, 20, 7);
  DemonstrationSet b = GenerateDemonstrations(t1, PolicySpec{}, 20, 7);
  EXPECT_EQ(SerializeDemonstrations(a), SerializeDemonstrations(b));
  EXPECT_EQ(ParseDemonstrations(SerializeDemonstrations(a)), a);
  DemonstrationSet c = GenerateDemonstrations(t1, PolicySpec{}, 20, 8);
  EXPECT_NE(SerializeDemonstrations(a), SerializeDemonstrations(c));
}

TEST(GenerateTest, FixtureCorpusRoundTrips) {
  DemonstrationSet ds = ParseDemonstrations(
      ReadTextFile(testing::FixturePath("corpus_two_topologies.json")));
  EXPECT_EQ(ParseDemonstrations(SerializeDemonstrations(ds, R"({"k":1})")),
            ds);
}

// Selected paths satisfy every policy predicate, discards break at least
// one, re-derived with PathPredicates. Failure-mode strata are present
// whenever the solution space offers them.
void CheckPolicyCorpus(const Topology& t, const PolicySpec& policy,
                       std::int64_t seed) {
  DemonstrationSet ds = GenerateDemonstrations(t, policy, 20, seed);
  const int hops = static_cast<int>(t.nodes().size()) - 1;
  for (const PracticeRecord& r : ds.records) {
    const Path& first = *r.selected.begin();
    Intent intent;
    intent.start = first.front();
    intent.dest = first.back();
    if (policy.via) intent.via.push_back(*policy.via);
    ASSERT_EQ(r.selected, OracleTargetSpace(t, intent, {hops}));
    Rational best = *PathPredicates(t, first).total_weight;
    for (const Path& p : r.selected) {
      PathFacts f = PathPredicates(t, p);
      EXPECT_TRUE(f.is_connected && f.is_simple);
      EXPECT_EQ(*f.total_weight, best);
      if (policy.via) EXPECT_TRUE(f.Visits(*policy.via));
    }
    EXPECT_EQ(r.discarded.size(), 10u);
    bool has_disconnected = false, has_loopy = false, has_heavier = false;
    for (const Path& p : r.discarded) {
      PathFacts f = PathPredicates(t, p);
      bool ok_ends = p.front() == intent.start && p.back() == intent.dest;
      bool ok_via = !policy.via || f.Visits(*policy.via);
      bool optimal = f.is_connected && *f.total_weight <= best;
      EXPECT_FALSE(f.is_connected && f.is_simple && ok_ends && ok_via &&
                   optimal)
          << p.ToString() << " satisfies the policy";
      if (ok_ends) {
        has_disconnected |= !f.is_connected;
        has_loopy |= f.is_connected && !f.is_simple;
        has_heavier |= f.is_connected && f.is_simple && ok_via && !optimal;
      }
    }
    bool heavier_available = false;
    bool loopy_available = false;
    for (const Path& p :
         EnumerateSolutionSpace(t, {intent.start, intent.dest}, {hops})) {
      PathFacts f = PathPredicates(t, p);
      bool ok_via = !policy.via || f.Visits(*policy.via);
      loopy_available |= f.is_connected && !f.is_simple;
      heavier_available |= f.is_connected && f.is_simple && ok_via &&
                           *f.total_weight > best;
    }
    EXPECT_TRUE(has_disconnected);
    EXPECT_EQ(has_loopy, loopy_available);
    EXPECT_EQ(has_heavier, heavier_available);
  }
}

TEST(GenerateTest, ShortestPolicyCorpusIsSound) {
  CheckPolicyCorpus(testing::LoadFixtureTopology("t1_training.json"),
                    PolicySpec{}, 7);
  CheckPolicyCorpus(testing::LoadFixtureTopology("t2_transfer.json"),
                    PolicySpec{}, 11);
}

TEST(GenerateTest, ViaPolicyCorpusIsSound) {
  PolicySpec via;
  via.via = NodeId("E");
  CheckPolicyCorpus(testing::LoadFixtureTopology("t1_training.json"), via, 7);
  for (const auto& r : GenerateDemonstrations(
                           testing::LoadFixtureTopology("t1_training.json"),
                           via, 20, 7)
                           .records) {
    EXPECT_NE(r.selected.begin()->front(), NodeId("E"));
    EXPECT_NE(r.selected.begin()->back(), NodeId("E"));
  }
}

TEST(ClassifyTest, Modes) {
  Topology t = Triangle();
  PathSet target = {Path{"A", "C"}};
  PolicySpec policy;
  DiscardModes m = ClassifyAgainstPolicy(t, policy, target, Path{"A", "B", "C"});
  EXPECT_TRUE(m.non_shortest);
  EXPECT_FALSE(m.disconnected || m.loopy || m.wrong_endpoints);
  m = ClassifyAgainstPolicy(t, policy, target, Path{"B", "A", "B"});
  EXPECT_TRUE(m.loopy && m.wrong_endpoints);
  EXPECT_FALSE(ClassifyAgainstPolicy(t, policy, target, Path{"A", "C"}).Any());
}

}  // namespace
}  // namespace pathcause
