#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace eulerstab {

// Splits [0, total) into one contiguous chunk per job and runs
// w(shard, lo, hi) for each. Shards are merged by the caller in index order;
// results must not depend on the split, which holds for any commutative
// associative accumulation.
template <class Shard, class Worker>
std::vector<Shard> sharded_run(std::uint64_t total, int jobs, Worker&& w) {
  std::uint64_t j = jobs < 1 ? 1 : static_cast<std::uint64_t>(jobs);
  if (total > 0 && j > total) j = total;
  if (j < 1) j = 1;
  std::vector<Shard> shards(static_cast<std::size_t>(j));
  if (j == 1) {
    w(shards[0], std::uint64_t(0), total);
    return shards;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(j));
  const std::uint64_t chunk = total / j, extra = total % j;
  std::uint64_t lo = 0;
  for (std::uint64_t i = 0; i < j; ++i) {
    std::uint64_t hi = lo + chunk + (i < extra ? 1 : 0);
    threads.emplace_back(
        [&w, &shards, i, lo, hi] { w(shards[static_cast<std::size_t>(i)], lo, hi); });
    lo = hi;
  }
  for (auto& t : threads) t.join();
  return shards;
}

}  // namespace eulerstab
