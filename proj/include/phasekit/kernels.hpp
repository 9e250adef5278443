#pragma once

#include <cstdint>

#include "phasekit/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Hot loops, each in an OpenMP flavor and a serial reference flavor.
// Work is partitioned over independent output elements and every element is
// computed by the same scalar recipe in both flavors, so results are
// bit-identical and independent of the thread count. The serial flavors are
// kept for tests and for the bench tool.

namespace phasekit::kernels {

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class EntryFn>
void fill_serial(OperatorMatrix& A, EntryFn&& entry) {
  const int d = A.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = entry(i, j);
}

template <class EntryFn>
void fill(OperatorMatrix& A, EntryFn&& entry) {
  const int d = A.dim();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = entry(i, j);
}

// out[k] = body(k) for k in [0, n); used for per-offset Toeplitz fills and
// per-entry quadrature sweeps where each slot is an independent computation.
template <class T, class BodyFn>
void map_indices_serial(std::vector<T>& out, BodyFn&& body) {
  const std::int64_t n = static_cast<std::int64_t>(out.size());
  for (std::int64_t k = 0; k < n; ++k) out[static_cast<size_t>(k)] = body(static_cast<size_t>(k));
}

template <class T, class BodyFn>
void map_indices(std::vector<T>& out, BodyFn&& body) {
  const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < n; ++k) out[static_cast<size_t>(k)] = body(static_cast<size_t>(k));
}

OperatorMatrix multiply_serial(const OperatorMatrix& A, const OperatorMatrix& B);
OperatorMatrix multiply(const OperatorMatrix& A, const OperatorMatrix& B);

// <x|A|x>; row partials are reduced in index order so the result does not
// depend on the schedule.
complexd quadratic_form_serial(const OperatorMatrix& A, const StateVector& x);
complexd quadratic_form(const OperatorMatrix& A, const StateVector& x);

}  // namespace phasekit::kernels
