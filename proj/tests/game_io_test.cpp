// Copyright 2026 The nashax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "nashax/game_io.hpp"

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "nashax/closure.hpp"
#include "nashax/errors.hpp"
#include "nashax/fixtures.hpp"
#include "oracles.hpp"

namespace nashax {
namespace {

namespace fs = std::filesystem;

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("nashax_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t line_of(const std::string& text) {
  try {
    parse_game(text, "t.json");
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(GameIoTest, ParsesPayoffs) {
  const Game g = parse_game(R"({
    "players": 2,
    "strategies": [["U", "D"], ["L", "R"]],
    "payoffs": [[2, 0, 1, 1], [2, 0, 1, 1]]
  })");
  EXPECT_EQ(g, fixtures::coordination_2x2());
}

TEST(GameIoTest, ParsesRanks) {
  const Game g = parse_game(R"({"players": 1, "strategies": [["a", "b"]], "ranks": [[4, 2]]})");
  EXPECT_TRUE(g.strictly_prefers(0, 1, 0));
}

TEST(GameIoTest, RoundTripKeepsId) {
  for (const Game& g : {fixtures::prisoners_dilemma(), fixtures::coordination_2x2(), fixtures::three_by_two(),
                        fixtures::three_player(), fixtures::one_player_chain()}) {
    EXPECT_EQ(parse_game(write_game(g)).id(), g.id());
  }
}

TEST(GameIoPropertyTest, RandomRoundTrip) {
  std::mt19937_64 rng(51);
  for (std::size_t it = 0; it < 1000; ++it) {
    const Game g = oracle::random_game(rng);
    ASSERT_EQ(parse_game(write_game(g)), g);
  }
}

TEST(GameIoTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(line_of("{\n  \"players\": 2,\n  \"strategies\": [[\"U\"], [\"L\"]],\n  \"payoffs\": [[1], [1]\n}"), 5u);
  EXPECT_EQ(line_of("{\n  \"players\": 1,\n  \"strategies\": [[\"a\", \"a\"]],\n  \"ranks\": [[0, 1]]\n}"), 3u);
  EXPECT_EQ(line_of("{\n  \"players\": 1,\n  \"strategies\": [[\"a\", \"b\"]],\n  \"ranks\": [[0]]\n}"), 4u);
  EXPECT_EQ(line_of("{\n  \"players\": 0,\n  \"strategies\": [],\n  \"ranks\": []\n}"), 2u);
  EXPECT_EQ(line_of("{\"players\": 1, \"strategies\": [[\"a\"]]}"), 1u);
  EXPECT_EQ(line_of("{\"players\": 1, \"strategies\": [[\"a\"]], \"ranks\": [[0]], \"payoffs\": [[0]]}"), 1u);
  try {
    parse_game("{\n  \"players\": 1,\n  \"strategies\": [[\"a\"]],\n  \"ranks\": [[-1]]\n}", "bad.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("bad.json:4: ", 0), 0u) << e.what();
  }
}

TEST(GameIoTest, BundledFilesMatchFixtures) {
  const fs::path dir = fs::path(NASHAX_DATA_DIR) / "games";
  EXPECT_EQ(read_game_file(dir / "pd.game.json"), fixtures::prisoners_dilemma());
  EXPECT_EQ(read_game_file(dir / "ex2.game.json"), fixtures::coordination_2x2());
  EXPECT_EQ(read_game_file(dir / "ex5.game.json"), fixtures::three_by_two());
  EXPECT_EQ(read_game_file(dir / "three_player.game.json"), fixtures::three_player());
  EXPECT_EQ(read_game_file(dir / "chain.game.json"), fixtures::one_player_chain());
}

TEST(GameIoTest, ClassDirectoryRoundTrip) {
  for (std::string_view name : named_classes()) {
    const GameClass cls = build_named_class(name);
    const fs::path dir = temp_dir(std::string(name));
    write_class_dir(cls, dir);
    const GameClass back = read_class_dir(dir);
    ASSERT_EQ(back.size(), cls.size());
    EXPECT_EQ(back.id(), cls.id());
    EXPECT_EQ(back.params, cls.params);
    for (std::size_t k = 0; k < cls.size(); ++k) {
      EXPECT_EQ(back.game(k), cls.game(k));
      EXPECT_EQ(replay_provenance(back, k), cls.game(k));
    }
    fs::remove_all(dir);
  }
}

TEST(GameIoTest, MissingFileIsParseError) {
  EXPECT_THROW(read_game_file("/nonexistent/x.game.json"), ParseError);
  EXPECT_THROW(read_class_dir("/nonexistent"), ParseError);
}

}  // namespace
}  // namespace nashax
