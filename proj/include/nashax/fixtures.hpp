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

#include "nashax/game.hpp"

namespace nashax::fixtures {

// Prisoner's Dilemma, strategies {C, D} for both players, payoffs
// (C,C)=(2,2) (C,D)=(0,3) (D,C)=(3,0) (D,D)=(1,1).
Game prisoners_dilemma();

// {U,D} x {L,R}: (U,L)=(2,2) (U,R)=(0,0) (D,L)=(1,1) (D,R)=(1,1).
Game coordination_2x2();

// {U,C,D} x {L,R}: U=(2,1),(0,0)  C=(0,0),(1,2)  D=(2,1),(0,0).
Game three_by_two();

// Three players on {a,b}; a is weakly dominant for players 1 and 2 and b
// for player 3, so the jointly optimal profile (a,a,b) exists. Nash set:
// (a,a,b) (a,b,a) (b,b,a).
Game three_player();

// One player over {a,b,c,d} with a > b ~ c > d.
Game one_player_chain();

}  // namespace nashax::fixtures
