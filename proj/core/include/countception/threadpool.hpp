#ifndef COUNTCEPTION_THREADPOOL_HPP_
#define COUNTCEPTION_THREADPOOL_HPP_

#include <cstdint>
#include <functional>

namespace countception {

/// Process-wide worker pool used for batch- and image-level parallelism.
/// Determinism contract: tasks write to disjoint outputs; all reductions
/// happen on the caller thread in index order, so results are independent of
/// the worker count.
namespace pool {

/// Resize the pool. n <= 1 runs everything inline on the caller.
void set_workers(int n);
int workers();

/// Runs fn(i) for i in [0, count), blocking until all complete. Exceptions
/// from tasks are rethrown on the caller (first by index).
void parallel_for(int64_t count, const std::function<void(int64_t)>& fn);

}  // namespace pool

}  // namespace countception

#endif  // COUNTCEPTION_THREADPOOL_HPP_
