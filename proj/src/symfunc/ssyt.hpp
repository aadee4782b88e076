// Copyright 2026 The cofsieve Authors
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

#pragma once

#include <functional>
#include <vector>

#include "core/partition.hpp"
#include "core/qpoly.hpp"

namespace cofsieve {

/// Rows of a (skew) semistandard tableau. rows[i] lists the entries of row i
/// from left to right, starting at column inner[i].
using TableauRows = std::vector<std::vector<int>>;

/// Visits every SSYT of shape outer/inner with the given content (value v+1
/// appears content[v] times). Tableaux are built one horizontal strip per
/// value, so the visiting order is deterministic.
void for_each_ssyt(const Partition& outer, const Partition& inner,
                   const std::vector<int>& content,
                   const std::function<void(const TableauRows&)>& visit);

/// Number of SSYT of shape outer/inner and the given content.
BigInt count_ssyt(const Partition& outer, const Partition& inner,
                  const std::vector<int>& content);

/// Kostka number K_{λν}. Cached; safe to call concurrently.
BigInt kostka_number(const Partition& lambda, const Partition& nu);

/// Number of SSYT of shape outer/inner with entries at most m.
BigInt count_ssyt_bounded(const Partition& outer, const Partition& inner, int m);

}  // namespace cofsieve
