// Copyright 2026 The Scramble Authors
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

#include <cstddef>
#include <functional>

namespace scramble {

/// Worker count for `requested` threads (0 = hardware concurrency), capped by
/// the SCRAMBLE_THREADS environment variable when it holds a positive integer.
std::size_t resolve_thread_count(std::size_t requested);

/// Calls body(i) for i in [0, n). Work is split statically, so callers that
/// write result i into slot i get the same output for any thread count.
/// The first exception thrown by a body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t threads);

}  // namespace scramble
