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

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nashax {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the first occurrence of "key", or 1 when it does not appear.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 1 : line_of_offset(text, pos);
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw ParseError(std::string(source) + ":" + std::to_string(line) + ": " + msg, line);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot write file");
  out << text;
}

}  // namespace

Game parse_game(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(source, line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0),
         "malformed JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) fail(source, 1, "expected a JSON object");

  auto need = [&](const char* key) -> const json& {
    if (!doc.contains(key)) fail(source, 1, std::string("missing field '") + key + "'");
    return doc.at(key);
  };

  const json& players = need("players");
  if (!players.is_number_unsigned() || players.get<std::size_t>() == 0) {
    fail(source, line_of_key(text, "players"), "'players' must be a positive integer");
  }
  const auto n = players.get<std::size_t>();

  const json& strategies = need("strategies");
  const std::size_t strategies_line = line_of_key(text, "strategies");
  if (!strategies.is_array()) fail(source, strategies_line, "'strategies' must be a list of lists");
  std::vector<Labels> labels;
  for (const auto& list : strategies) {
    if (!list.is_array()) fail(source, strategies_line, "'strategies' must be a list of lists");
    Labels l;
    for (const auto& s : list) {
      if (!s.is_string()) fail(source, strategies_line, "strategy labels must be strings");
      l.push_back(s.get<std::string>());
    }
    labels.push_back(std::move(l));
  }

  const bool has_payoffs = doc.contains("payoffs");
  const bool has_ranks = doc.contains("ranks");
  if (has_payoffs == has_ranks) {
    fail(source, 1, "exactly one of 'payoffs' or 'ranks' is required");
  }
  const char* table_key = has_payoffs ? "payoffs" : "ranks";
  const json& tables = doc.at(table_key);
  const std::size_t tables_line = line_of_key(text, table_key);
  if (!tables.is_array()) fail(source, tables_line, std::string("'") + table_key + "' must be a list");

  try {
    if (has_payoffs) {
      std::vector<std::vector<double>> payoffs;
      for (const auto& t : tables) {
        if (!t.is_array()) fail(source, tables_line, "each payoff table must be a list");
        std::vector<double> row;
        for (const auto& v : t) {
          if (!v.is_number()) fail(source, tables_line, "payoffs must be numbers");
          row.push_back(v.get<double>());
        }
        payoffs.push_back(std::move(row));
      }
      if (payoffs.size() != n) {
        fail(source, tables_line, "expected " + std::to_string(n) + " payoff tables, got " +
                                      std::to_string(payoffs.size()));
      }
      return build_game_from_payoffs(n, std::move(labels), payoffs);
    }
    std::vector<std::vector<Rank>> ranks;
    for (const auto& t : tables) {
      if (!t.is_array()) fail(source, tables_line, "each rank table must be a list");
      std::vector<Rank> row;
      for (const auto& v : t) {
        if (!v.is_number_unsigned()) fail(source, tables_line, "ranks must be non-negative integers");
        row.push_back(v.get<Rank>());
      }
      ranks.push_back(std::move(row));
    }
    if (ranks.size() != n) {
      fail(source, tables_line, "expected " + std::to_string(n) + " rank tables, got " +
                                    std::to_string(ranks.size()));
    }
    return build_game_from_ranks(n, std::move(labels), std::move(ranks));
  } catch (const GameError& e) {
    const std::string what = e.what();
    const bool about_labels = what.find("label") != std::string::npos ||
                              what.find("strategy list") != std::string::npos ||
                              what.find("strategy lists") != std::string::npos;
    fail(source, about_labels ? strategies_line : tables_line, what);
  }
}

Game read_game_file(const std::filesystem::path& path) {
  return parse_game(read_text(path), path.string());
}

ordered_json game_to_json(const Game& g) {
  ordered_json doc;
  doc["players"] = g.num_players();
  ordered_json strategies = ordered_json::array();
  ordered_json ranks = ordered_json::array();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    strategies.push_back(g.strategies(i));
    ranks.push_back(std::vector<Rank>(g.ranks(i).begin(), g.ranks(i).end()));
  }
  doc["strategies"] = std::move(strategies);
  doc["ranks"] = std::move(ranks);
  return doc;
}

std::string write_game(const Game& g) { return game_to_json(g).dump(2) + "\n"; }

void write_game_file(const Game& g, const std::filesystem::path& path) {
  write_text(path, write_game(g));
}

ordered_json subset_to_json(const SubsetSpec& spec, const Game& parent) {
  return ordered_json(labels_of(spec, parent));
}

ordered_json provenance_to_json(const Provenance& p, const GameClass& cls) {
  ordered_json out;
  out["origin"] = std::string(to_string(p.origin));
  if (p.origin == Origin::seed) return out;
  out["parent"] = p.parent;
  if (p.subsets) {
    out["kept"] = p.subsets->kept;
    if (auto parent = cls.find(p.parent)) out["labels"] = subset_to_json(*p.subsets, cls.game(*parent));
  }
  if (p.origin == Origin::player_reduction) {
    out["kept_players"] = p.kept_players;
    if (p.fixed) out["fixed"] = p.fixed->indices;
  }
  return out;
}

void write_class_dir(const GameClass& cls, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  ordered_json manifest;
  manifest["class_id"] = cls.id();
  manifest["size"] = cls.size();
  manifest["params"] = cls.params;
  ordered_json members = ordered_json::array();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    const Game& g = cls.game(k);
    const std::string file = g.id() + ".game.json";
    write_game_file(g, dir / file);
    ordered_json m;
    m["id"] = g.id();
    m["file"] = file;
    m["provenance"] = provenance_to_json(cls.provenance(k), cls);
    members.push_back(std::move(m));
  }
  manifest["members"] = std::move(members);
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

GameClass read_class_dir(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  const std::string text = read_text(manifest_path);
  json manifest;
  try {
    manifest = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(manifest_path.string(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0),
         "malformed JSON: " + std::string(e.what()));
  }
  GameClass cls;
  try {
    if (manifest.contains("params")) {
      cls.params = manifest.at("params").get<std::map<std::string, std::string>>();
    }
    for (const auto& m : manifest.at("members")) {
      Game g = read_game_file(dir / m.at("file").get<std::string>());
      if (g.id() != m.at("id").get<std::string>()) {
        fail(manifest_path.string(), line_of_key(text, "members"),
             "member " + m.at("id").get<std::string>() + " does not match its game file");
      }
      const json& pj = m.at("provenance");
      Provenance p;
      auto origin = parse_origin(pj.at("origin").get<std::string>());
      if (!origin) fail(manifest_path.string(), line_of_key(text, "origin"), "unknown origin");
      p.origin = *origin;
      if (p.origin != Origin::seed) p.parent = pj.at("parent").get<std::string>();
      if (pj.contains("kept")) {
        p.subsets = SubsetSpec{pj.at("kept").get<std::vector<std::vector<std::size_t>>>()};
      }
      if (pj.contains("kept_players")) {
        p.kept_players = pj.at("kept_players").get<std::vector<std::size_t>>();
      }
      if (pj.contains("fixed")) p.fixed = Profile{pj.at("fixed").get<std::vector<std::size_t>>()};
      cls.insert(std::move(g), std::move(p));
    }
  } catch (const json::exception& e) {
    fail(manifest_path.string(), line_of_key(text, "members"),
         "invalid manifest: " + std::string(e.what()));
  }
  return cls;
}

}  // namespace nashax
