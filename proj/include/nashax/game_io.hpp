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


#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nashax/game.hpp"
#include "nashax/game_class.hpp"

namespace nashax {

// Game files are JSON documents:
//
//   {
//     "players": 2,
//     "strategies": [["U", "D"], ["L", "R"]],
//     "payoffs": [[2, 0, 1, 1], [2, 0, 1, 1]]
//   }
//
// with exactly one of "payoffs" (numbers, higher is better) or "ranks"
// (non-negative integers, lower is better). Each table is flat in linear
// profile order: profile (i1, ..., in) sits at ((i1 * |S2| + i2) * |S3| + ...).
//
// Errors are ParseError carrying a 1-based line number.
Game parse_game(std::string_view text, std::string_view source = "<input>");
Game read_game_file(const std::filesystem::path& path);

// Writes the normalized "ranks" form; parsing it back yields an equal game.
nlohmann::ordered_json game_to_json(const Game& g);
std::string write_game(const Game& g);
void write_game_file(const Game& g, const std::filesystem::path& path);

nlohmann::ordered_json subset_to_json(const SubsetSpec& spec, const Game& parent);
nlohmann::ordered_json provenance_to_json(const Provenance& p, const GameClass& cls);

// A class directory holds <id>.game.json per member plus manifest.json with
// the member order, provenance and closure parameters.
void write_class_dir(const GameClass& cls, const std::filesystem::path& dir);
GameClass read_class_dir(const std::filesystem::path& dir);

}  // namespace nashax
