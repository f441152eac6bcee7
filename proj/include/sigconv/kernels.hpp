#ifndef SIGCONV_KERNELS_HPP
#define SIGCONV_KERNELS_HPP

// Data-parallel inner loops. Every kernel comes in a serial reference form
// and an OpenMP form; both produce identical results for any thread count
// (each output slot is written by exactly one thread, in a fixed summation
// order), and the test suite checks them against each other.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <vector>

#include "sigconv/arith.hpp"

namespace sigconv::kernels {

// Below this truncation order the parallel dispatchers stay serial.
inline constexpr std::size_t kParallelThreshold = 48;

// body(i) for i in [begin, end) across the OpenMP team. An exception thrown
// by any iteration is rethrown on the calling thread after the loop.
template <typename Body>
void parallel_for(std::int64_t begin, std::int64_t end, Body&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = begin; i < end; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(sigconv_parallel_for)
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

// Cauchy product c_n = sum_{i=0..n} a_i b_{n-i} for n = 0..order.
// Requires a.size() > order and b.size() > order.
std::vector<Rational> series_product_serial(std::span<const Rational> a,
                                            std::span<const Rational> b,
                                            std::size_t order);
std::vector<Rational> series_product_parallel(std::span<const Rational> a,
                                              std::span<const Rational> b,
                                              std::size_t order);

// sigma_k(n) for n = 0..n_max (entry 0 is 0). The serial form is a divisor
// sieve; the parallel form does trial division per n.
std::vector<std::uint64_t> sigma_values_serial(unsigned k, std::int64_t n_max);
std::vector<std::uint64_t> sigma_values_parallel(unsigned k, std::int64_t n_max);

// W_{a,b}(n) = sum over a*l + b*m = n, l,m >= 1 of sigma(l) sigma(m) for
// n = 0..n_max. `sigma1` must cover n_max.
std::vector<Integer> convolution_sums_serial(std::int64_t a, std::int64_t b, std::int64_t n_max,
                                             const SigmaTable& sigma1);
std::vector<Integer> convolution_sums_parallel(std::int64_t a, std::int64_t b, std::int64_t n_max,
                                               const SigmaTable& sigma1);

// r_4(n) for n = 0..n_max by direct lattice enumeration.
std::vector<std::uint64_t> four_square_counts_serial(std::int64_t n_max);
std::vector<std::uint64_t> four_square_counts_parallel(std::int64_t n_max);

}  // namespace sigconv::kernels

#endif  // SIGCONV_KERNELS_HPP
