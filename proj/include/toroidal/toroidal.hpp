/*
 * Copyright 2026 The toroidal authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Umbrella header.

#ifndef TOROIDAL_TOROIDAL_HPP
#define TOROIDAL_TOROIDAL_HPP

#include "multigraph.hpp"
#include "sparsity.hpp"
#include "surface_map.hpp"
#include "homology.hpp"
#include "map_edit.hpp"
#include "moves.hpp"
#include "embeddings.hpp"
#include "drawings.hpp"
#include "irreducible.hpp"
#include "io.hpp"
#include "catalog.hpp"
#include "reduction.hpp"

#endif  // TOROIDAL_TOROIDAL_HPP
