// Copyright 2026 The payplay Authors
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

// Umbrella header.

#ifndef PAYPLAY_PAYPLAY_HPP_
#define PAYPLAY_PAYPLAY_HPP_

#include "payplay/cnf.hpp"
#include "payplay/efficiency.hpp"
#include "payplay/equilibrium.hpp"
#include "payplay/errors.hpp"
#include "payplay/gadgets.hpp"
#include "payplay/game.hpp"
#include "payplay/graph.hpp"
#include "payplay/io.hpp"
#include "payplay/profile.hpp"
#include "payplay/random_games.hpp"
#include "payplay/report.hpp"
#include "payplay/structure.hpp"
#include "payplay/vaccination.hpp"

#endif  // PAYPLAY_PAYPLAY_HPP_
