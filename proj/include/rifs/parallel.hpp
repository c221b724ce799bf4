// Copyright 2026 The rifslab authors
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

#ifndef RIFS_PARALLEL_HPP_
#define RIFS_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace rifs {

// Worker cap: RIFSLAB_THREADS if set and positive, else hardware concurrency.
int max_threads();

// Runs body(begin, end) over a static partition of [0, count). Results must
// be written to per-index (or per-order-independent) slots; together with
// counter-based sub-seeds this keeps outputs independent of the worker count.
void parallel_for(std::int64_t count,
                  const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace rifs

#endif  // RIFS_PARALLEL_HPP_
