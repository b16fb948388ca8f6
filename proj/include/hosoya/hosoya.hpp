// Copyright 2026 the hosoya-tools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header for the whole library. The JSON serializer stays separate
// (hosoya/report_json.hpp) so that core users do not pull the JSON vendor in.

#include "hosoya/bigint.hpp"
#include "hosoya/distance.hpp"
#include "hosoya/enumerate.hpp"
#include "hosoya/families.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/palindrome.hpp"
#include "hosoya/search.hpp"
