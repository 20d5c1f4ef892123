#include "spatialvote/instance_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include "spatialvote/errors.hpp"

namespace spatialvote {
namespace {

TEST(InstanceIo, MinimalFile) {
  auto inst = parse_instance_json(R"({"d":1,"p":2,"voters":[["2"]],"candidates":[["0"]]})");
  EXPECT_EQ(inst.d, 1);
  EXPECT_EQ(inst.p, 2);
  ASSERT_EQ(inst.n(), 1u);
  EXPECT_EQ(inst.voters[0][0], Rat(2));
  EXPECT_EQ(inst.candidates[0][0], Rat(0));
}

TEST(InstanceIo, RationalTokens) {
  auto inst = parse_instance_json(
      R"({"d":2,"p":3,"voters":[[1,"3/7"],["-22/7",0]],"candidates":[[0,0]]})");
  EXPECT_EQ(inst.voters[0][1], Rat(3, 7));
  EXPECT_EQ(inst.voters[1][0], Rat(-22, 7));
  EXPECT_EQ(inst.p, 3);
}

TEST(InstanceIo, RejectsFloats) {
  EXPECT_THROW(
      parse_instance_json(R"({"d":1,"p":2,"voters":[[1.5]],"candidates":[[0]]})"),
      ParseError);
}

TEST(InstanceIo, RejectsBadTokens) {
  EXPECT_THROW(
      parse_instance_json(R"({"d":1,"p":2,"voters":[["2/"]],"candidates":[[0]]})"),
      ParseError);
  EXPECT_THROW(
      parse_instance_json(R"({"d":1,"p":2,"voters":[["1.5"]],"candidates":[[0]]})"),
      ParseError);
}

TEST(InstanceIo, RejectsDimensionMismatch) {
  EXPECT_THROW(
      parse_instance_json(R"({"d":2,"p":2,"voters":[[1,2],[3]],"candidates":[[0,0]]})"),
      ParseError);
}

TEST(InstanceIo, RejectsMissingFields) {
  EXPECT_THROW(parse_instance_json(R"({"d":1,"p":2,"voters":[[1]]})"), ParseError);
  EXPECT_THROW(parse_instance_json(R"({"p":2,"voters":[[1]],"candidates":[[0]]})"),
               ParseError);
  EXPECT_THROW(parse_instance_json("[1,2]"), ParseError);
  EXPECT_THROW(parse_instance_json("{"), ParseError);
}

TEST(InstanceIo, IgnoresUnknownKeys) {
  auto inst = parse_instance_json(
      R"({"d":1,"p":2,"voters":[[1]],"candidates":[[0]],"k":3,"note":"x"})");
  EXPECT_EQ(inst.n(), 1u);
}

TEST(InstanceIo, RoundTripExact) {
  ElectionInstance inst;
  inst.d = 2;
  inst.p = 2;
  inst.voters = {{Rat(3, 7), Rat(-22, 7)}, {Rat(1000000007) * Rat(1000000007), Rat(0)}};
  inst.candidates = {{Rat(-1, 2), Rat(2)}};
  ElectionInstance back = parse_instance_json(instance_to_json(inst));
  EXPECT_EQ(back.d, inst.d);
  EXPECT_EQ(back.p, inst.p);
  EXPECT_EQ(back.voters, inst.voters);
  EXPECT_EQ(back.candidates, inst.candidates);
  // And a second trip is textually stable.
  EXPECT_EQ(instance_to_json(back), instance_to_json(inst));
}

TEST(InstanceIo, FileRoundTrip) {
  ElectionInstance inst;
  inst.d = 1;
  inst.p = 2;
  inst.voters = {{Rat(1, 3)}};
  inst.candidates = {{Rat(2)}};
  std::string path = std::string(::testing::TempDir()) + "/sv_io_test.json";
  save_instance(inst, path);
  ElectionInstance back = load_instance(path);
  EXPECT_EQ(back.voters, inst.voters);
  std::remove(path.c_str());
  EXPECT_THROW(load_instance(path), IoError);
  EXPECT_THROW(load_instance("/nonexistent/dir/x.json"), IoError);
}

TEST(InstanceIo, ScoringFile) {
  ScoringMatrix q = parse_scoring_json(R"({"q":[[2,1,0],[3,3,0]]})");
  ASSERT_EQ(q.rows.size(), 2u);
  EXPECT_EQ(q.rows[0], (std::vector<long>{2, 1, 0}));
  EXPECT_THROW(parse_scoring_json(R"({"q":[[1,0.5]]})"), ParseError);
  EXPECT_THROW(parse_scoring_json(R"({"rows":[[1]]})"), ParseError);
}

TEST(InstanceIo, FlsFile) {
  FlsInput in = parse_fls_json(R"({"A":[[1,-1],[
-1,1]],"k":1})");
  EXPECT_EQ(in.k, 1);
  ASSERT_EQ(in.rows.size(), 2u);
  EXPECT_EQ(in.rows[0], (std::vector<int>{1, -1}));
  EXPECT_THROW(parse_fls_json(R"({"A":[[1]]})"), ParseError);
  EXPECT_THROW(parse_fls_json(R"({"A":[[1.0]],"k":1})"), ParseError);
}

TEST(InstanceIo, FlsInstanceCarriesThreshold) {
  auto [inst, k] = reduce_fls({{1, -1}}, 1);
  std::string text = fls_instance_to_json(inst, k);
  EXPECT_NE(text.find("\"k\": 1"), std::string::npos);
  ElectionInstance back = parse_instance_json(text);
  EXPECT_EQ(back.voters, inst.voters);
}

}  // namespace
}  // namespace spatialvote
