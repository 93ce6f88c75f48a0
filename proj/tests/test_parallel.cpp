#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "aluthge/parallel.hpp"

using namespace aluthge;

TEST(ParallelFor, VisitsEachIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelFor, EmptyRange) {
  bool called = false;
  parallel_for(0, [&](std::size_t) { called = true; });
  EXPECT_FALSE(called);
}

TEST(ParallelFor, RethrowsFirstException) {
  EXPECT_THROW(parallel_for(50,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(WorkerCount, EnvironmentOverride) {
  const char* old = std::getenv("ALUTHGE_LAB_THREADS");
  const std::string saved = old ? old : "";
  setenv("ALUTHGE_LAB_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3u);
  setenv("ALUTHGE_LAB_THREADS", "0", 1);
  EXPECT_GE(worker_count(), 1u);
  if (old) {
    setenv("ALUTHGE_LAB_THREADS", saved.c_str(), 1);
  } else {
    unsetenv("ALUTHGE_LAB_THREADS");
  }
}
