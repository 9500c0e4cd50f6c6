// Copyright 2026 The Tree Ramsey Authors
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

// Everything, in dependency order.

#ifndef RAMSEY_RAMSEY_HPP
#define RAMSEY_RAMSEY_HPP

#include "ramsey/graph.hpp"
#include "ramsey/canon.hpp"
#include "ramsey/containment.hpp"
#include "ramsey/isogen.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/theorems.hpp"
#include "ramsey/objective.hpp"
#include "ramsey/search.hpp"
#include "ramsey/tabu.hpp"
#include "ramsey/driver.hpp"
#include "ramsey/aqo.hpp"

#endif  // RAMSEY_RAMSEY_HPP
