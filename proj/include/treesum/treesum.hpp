// Copyright 2026 The treesum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TREESUM_TREESUM_HPP_
#define TREESUM_TREESUM_HPP_

#include "treesum/alignment.hpp"
#include "treesum/baselines.hpp"
#include "treesum/distribution.hpp"
#include "treesum/error.hpp"
#include "treesum/io.hpp"
#include "treesum/metrics.hpp"
#include "treesum/scoring.hpp"
#include "treesum/svdt.hpp"
#include "treesum/synth.hpp"
#include "treesum/tree.hpp"
#include "treesum/viz.hpp"

#endif  // TREESUM_TREESUM_HPP_
