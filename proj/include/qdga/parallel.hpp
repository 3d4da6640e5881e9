#pragma once

#include <cstddef>
#include <functional>

namespace qdga {

/// Worker count used by parallel_for. 1 runs everything inline.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index writes only its own output
/// slot, so results do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qdga
