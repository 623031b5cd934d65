#pragma once

#include <functional>

namespace ncosc {

// Worker count: hardware concurrency, capped by the NC_OSC_THREADS environment
// variable when it is set to a positive integer.
int worker_thread_count();

int parallel_chunk_count(int n_items);

// Splits [0, n_items) into parallel_chunk_count(n_items) contiguous ascending
// ranges and runs fn(chunk_index, begin, end) once per range, possibly
// concurrently. Deterministic as long as chunks write to disjoint state.
void parallel_chunks(int n_items, const std::function<void(int, int, int)>& fn);

}  // namespace ncosc
