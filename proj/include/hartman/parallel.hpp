#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

namespace hartman {

/// Parses a HARTMANLAB_THREADS value; nullopt unless it is a positive integer.
std::optional<std::size_t> parse_thread_count(std::string_view text);

/// Worker cap: HARTMANLAB_THREADS when set and valid, else the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
/// one chunk per worker. Chunk boundaries depend only on n and the worker
/// count, and the call returns after every chunk has finished.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                     std::size_t min_chunk = 1 << 14);

}  // namespace hartman
