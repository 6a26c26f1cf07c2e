#pragma once

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmprime {

/// Execution mode of the data-parallel kernels. Every kernel has a serial
/// path that produces the identical result; the parallel path distributes
/// independent work items over OpenMP threads, each writing its own output
/// slot so the assembled result does not depend on the schedule.
enum class ExecMode { serial, parallel };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
    return ExecMode::parallel;
#else
    return ExecMode::serial;
#endif
}

inline int exec_threads(ExecMode mode) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel) return omp_get_max_threads();
#else
    (void)mode;
#endif
    return 1;
}

/// Runs body(i) for i in [0, count). In parallel mode an exception thrown by
/// any work item is rethrown on the caller thread; when several items throw,
/// the one with the lowest index wins, keeping failures deterministic.
template <class Fn>
void parallel_for(ExecMode mode, std::size_t count, Fn&& body) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel && count > 1) {
        std::exception_ptr err;
        std::size_t err_index = count;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(qmprime_parallel_for_err)
                {
                    if (static_cast<std::size_t>(i) < err_index) {
                        err_index = static_cast<std::size_t>(i);
                        err = std::current_exception();
                    }
                }
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    (void)mode;
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace qmprime
