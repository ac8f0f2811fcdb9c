// Copyright 2026 The SciPress Authors.
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

#ifndef SCIPRESS_SCIPRESS_HPP_
#define SCIPRESS_SCIPRESS_HPP_

#include "scipress/analysis.hpp"
#include "scipress/baselines.hpp"
#include "scipress/bws.hpp"
#include "scipress/corpus.hpp"
#include "scipress/error.hpp"
#include "scipress/extractivity.hpp"
#include "scipress/manifest.hpp"
#include "scipress/parallel.hpp"
#include "scipress/plan.hpp"
#include "scipress/readability.hpp"
#include "scipress/report.hpp"
#include "scipress/rng.hpp"
#include "scipress/rouge.hpp"
#include "scipress/significance.hpp"
#include "scipress/style.hpp"
#include "scipress/text.hpp"

#endif  // SCIPRESS_SCIPRESS_HPP_
