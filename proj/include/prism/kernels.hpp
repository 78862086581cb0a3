#pragma once

// Data-parallel kernels behind the order computations. Each kernel exists as
// a plain serial loop (the reference, used by the tests) and an OpenMP
// version; both return identical results.

#include "prism/bits.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#ifdef PRISM_HAVE_OPENMP
#include <omp.h>
#endif

namespace prism::kernels {

namespace serial {

template <class Pred>
Relation build_relation(std::size_t n, Pred&& pred) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pred(i, j)) r.set(i, j);
  return r;
}

inline void transitive_closure(Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r.rows[i][k]) r.rows[i] |= r.rows[k];
}

/// Masks m < 2^n (ascending) with pred(m).
template <class Pred>
std::vector<std::uint64_t> filter_subsets(unsigned n, Pred&& pred) {
  if (n > 40) throw std::invalid_argument("filter_subsets: n too large");
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m)
    if (pred(m)) out.push_back(m);
  return out;
}

}  // namespace serial

namespace omp {

template <class Pred>
Relation build_relation(std::size_t n, Pred&& pred) {
  Relation r(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < rows; ++i) {
    auto& row = r.rows[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < n; ++j)
      if (pred(static_cast<std::size_t>(i), j)) row.set(j);
  }
  return r;
}

inline void transitive_closure(Relation& r) {
  const auto n = static_cast<std::int64_t>(r.size());
  for (std::int64_t k = 0; k < n; ++k) {
    const Bits pivot = r.rows[static_cast<std::size_t>(k)];
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      auto& row = r.rows[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(k)]) row |= pivot;
    }
  }
}

template <class Pred>
std::vector<std::uint64_t> filter_subsets(unsigned n, Pred&& pred) {
  if (n > 40) throw std::invalid_argument("filter_subsets: n too large");
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::vector<std::vector<std::uint64_t>> parts;
#pragma omp parallel
  {
#ifdef PRISM_HAVE_OPENMP
    const int nthreads = omp_get_num_threads();
    const int tid = omp_get_thread_num();
#else
    const int nthreads = 1;
    const int tid = 0;
#endif
#pragma omp single
    parts.resize(static_cast<std::size_t>(nthreads));
    // static schedule: thread t owns one contiguous block, so concatenating
    // the parts in thread order keeps the masks ascending.
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < total; ++m)
      if (pred(static_cast<std::uint64_t>(m))) parts[static_cast<std::size_t>(tid)].push_back(static_cast<std::uint64_t>(m));
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace omp

inline int thread_count() {
#ifdef PRISM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Library default.
using omp::build_relation;
using omp::filter_subsets;
using omp::transitive_closure;

}  // namespace prism::kernels
