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


#include "nashax/fixtures.hpp"

namespace nashax::fixtures {

Game prisoners_dilemma() {
  return build_game_from_payoffs(2, {{"C", "D"}, {"C", "D"}},
                                 {{2, 0, 3, 1}, {2, 3, 0, 1}});
}

Game coordination_2x2() {
  return build_game_from_payoffs(2, {{"U", "D"}, {"L", "R"}},
                                 {{2, 0, 1, 1}, {2, 0, 1, 1}});
}

Game three_by_two() {
  return build_game_from_payoffs(2, {{"U", "C", "D"}, {"L", "R"}},
                                 {{2, 0, 0, 1, 2, 0}, {1, 0, 0, 2, 1, 0}});
}

Game three_player() {
  // Linear order aaa aab aba abb baa bab bba bbb.
  //   u1 = 1 if s1 = a or s2 = b
  //   u2 = 1 if s2 = a or s3 = a
  //   u3 = 1 if s3 = b or s2 = b
  return build_game_from_payoffs(3, {{"a", "b"}, {"a", "b"}, {"a", "b"}},
                                 {{1, 1, 1, 1, 0, 0, 1, 1},
                                  {1, 1, 1, 0, 1, 1, 1, 0},
                                  {0, 1, 1, 1, 0, 1, 1, 1}});
}

Game one_player_chain() {
  return build_game_from_payoffs(1, {{"a", "b", "c", "d"}}, {{3, 2, 2, 1}});
}

}  // namespace nashax::fixtures
