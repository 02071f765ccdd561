// Copyright 2026 The haarlab authors
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

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "haarlab/rng.hpp"

namespace haarlab {

/// Monte Carlo sharding. Work is always cut into the same shards for a given
/// total (at most 64, one stream per shard), so the result is a pure function
/// of (base stream, n_total) no matter how many worker threads execute the
/// shards. Callers merge the returned slots in index order.
///
/// fn has signature void(RngStream stream, std::int64_t count, Slot& slot).
template <class Slot, class Fn>
std::vector<Slot> run_sharded(std::int64_t n_total, const RngStream& base, Fn&& fn) {
  const int shards = static_cast<int>(std::min<std::int64_t>(n_total, 64));
  std::vector<Slot> slots(static_cast<std::size_t>(shards > 0 ? shards : 0));
  if (shards <= 0) return slots;

  const std::int64_t chunk = n_total / shards;
  const std::int64_t remainder = n_total % shards;
  auto shard_count = [&](int s) { return chunk + (s < remainder ? 1 : 0); };

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(shards));

  if (workers <= 1) {
    for (int s = 0; s < shards; ++s)
      fn(base.split(static_cast<std::uint64_t>(s)), shard_count(s), slots[static_cast<std::size_t>(s)]);
    return slots;
  }

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= shards) return;
      try {
        fn(base.split(static_cast<std::uint64_t>(s)), shard_count(s), slots[static_cast<std::size_t>(s)]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return slots;
}

}  // namespace haarlab
