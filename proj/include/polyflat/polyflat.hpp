// Copyright 2026 The polyflat Authors
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

// Convenience header for the library proper (no file I/O or CLI).

#include "polyflat/conditions.hpp"
#include "polyflat/constructions.hpp"
#include "polyflat/convolution.hpp"
#include "polyflat/dot.hpp"
#include "polyflat/error.hpp"
#include "polyflat/ground_set.hpp"
#include "polyflat/polymatroid.hpp"
#include "polyflat/ranked_lattice.hpp"
#include "polyflat/rational.hpp"
#include "polyflat/set_function.hpp"
#include "polyflat/subset.hpp"
