// Copyright 2026 The qkc Authors
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

#include "qkc/basis.hpp"
#include "qkc/cache.hpp"
#include "qkc/census.hpp"
#include "qkc/config.hpp"
#include "qkc/dovetail.hpp"
#include "qkc/encoding.hpp"
#include "qkc/enumerate.hpp"
#include "qkc/estimator.hpp"
#include "qkc/executor.hpp"
#include "qkc/random.hpp"
#include "qkc/reports.hpp"
#include "qkc/sampling.hpp"
#include "qkc/shannon_fano.hpp"
#include "qkc/state_vector.hpp"
