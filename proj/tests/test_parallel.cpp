#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "spinelab/parallel.hpp"

using namespace spinelab;

TEST(Parallel, VisitsEveryIndexOnce) {
  for (unsigned threads : {1u, 2u, 7u}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; }, threads);
    for (const auto& h : hits) ASSERT_EQ(h.load(), 1);
  }
  parallel_for(0, [](std::size_t) { FAIL(); }, 4);
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(
                   100, [](std::size_t i) { if (i == 37) throw std::runtime_error("x"); }, 4),
               std::runtime_error);
}

TEST(Parallel, ResolveThreads) {
  EXPECT_EQ(resolve_threads(3), 3u);
  ::setenv("SPINELAB_THREADS", "2", 1);
  EXPECT_EQ(resolve_threads(0), 2u);
  EXPECT_EQ(resolve_threads(5), 5u);
  ::setenv("SPINELAB_THREADS", "0", 1);
  EXPECT_GE(resolve_threads(0), 1u);
  ::unsetenv("SPINELAB_THREADS");
  EXPECT_GE(resolve_threads(0), 1u);
}
