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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "scramble/parallel.hpp"
#include "scramble/random.hpp"

using namespace scramble;

TEST(Parallel, EveryIndexRunsOnce) {
  for (std::size_t threads : {1u, 2u, 3u, 8u}) {
    std::vector<std::atomic<int>> hits(101);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; }, threads);
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
  parallel_for(0, [](std::size_t) { FAIL(); }, 4);
}

TEST(Parallel, ExceptionsPropagate) {
  EXPECT_THROW(parallel_for(
                   20, [](std::size_t i) { if (i == 13) throw std::runtime_error("boom"); }, 4),
               std::runtime_error);
}

TEST(Parallel, EnvironmentCapsTheThreadCount) {
  ::setenv("SCRAMBLE_THREADS", "2", 1);
  EXPECT_EQ(resolve_thread_count(8), 2u);
  EXPECT_EQ(resolve_thread_count(1), 1u);
  ::unsetenv("SCRAMBLE_THREADS");
  EXPECT_EQ(resolve_thread_count(3), 3u);
  EXPECT_GE(resolve_thread_count(0), 1u);
}

TEST(DeriveSeed, DistinctStreamsAndStable) {
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  EXPECT_NE(derive_seed(7, 3), derive_seed(7, 4));
  EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
}
