#include "sigconv/kernels.hpp"

#include <stdexcept>

namespace sigconv::kernels {

namespace {

__extension__ using UInt128 = unsigned __int128;

void check_product_inputs(std::span<const Rational> a, std::span<const Rational> b,
                          std::size_t order) {
  if (a.size() <= order || b.size() <= order) {
    throw std::invalid_argument("series product operands shorter than requested order");
  }
}

// Sum of a_i b_{n-i}, skipping zero factors. mpq multiplication dominates,
// and truncated eta products are full of zeros.
Rational product_coefficient(std::span<const Rational> a, std::span<const Rational> b,
                             std::size_t n) {
  mpq_class acc = 0;
  mpq_class term;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& x = a[i].raw();
    const auto& y = b[n - i].raw();
    if (sgn(x) == 0 || sgn(y) == 0) {
      continue;
    }
    mpq_mul(term.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
    acc += term;
  }
  return Rational(acc);
}

std::uint64_t sigma_by_trial_division(unsigned k, std::int64_t n) {
  const Integer value = sigma(k, n);
  if (!value.fits_ulong_p()) {
    throw std::overflow_error("sigma value exceeds 64 bits");
  }
  return value.get_ui();
}

Integer convolution_sum_at(std::int64_t a, std::int64_t b, std::int64_t n, const SigmaTable& sigma1) {
  UInt128 total = 0;
  for (std::int64_t m = 1; b * m < n; ++m) {
    const std::int64_t rest = n - b * m;
    if (rest % a == 0) {
      total += static_cast<UInt128>(sigma1(rest / a)) * sigma1(m);
    }
  }
  const auto high = static_cast<std::uint64_t>(total >> 64);
  const auto low = static_cast<std::uint64_t>(total);
  Integer result = high;
  result <<= 64;
  result += Integer(static_cast<unsigned long>(low));
  return result;
}

void check_convolution_inputs(std::int64_t a, std::int64_t b, std::int64_t n_max,
                              const SigmaTable& sigma1) {
  if (a < 1 || b < 1 || n_max < 0) {
    throw std::invalid_argument("convolution sums need a, b >= 1 and n_max >= 0");
  }
  if (sigma1.k() != 1 || sigma1.n_max() < n_max) {
    throw std::invalid_argument("convolution sums need a sigma_1 table covering n_max");
  }
}

std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) {
    ++r;
  }
  return r;
}

}  // namespace

std::vector<Rational> series_product_serial(std::span<const Rational> a,
                                            std::span<const Rational> b, std::size_t order) {
  check_product_inputs(a, b, order);
  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = product_coefficient(a, b, n);
  }
  return out;
}

std::vector<Rational> series_product_parallel(std::span<const Rational> a,
                                              std::span<const Rational> b, std::size_t order) {
  check_product_inputs(a, b, order);
  std::vector<Rational> out(order + 1);
  const auto count = static_cast<std::int64_t>(order) + 1;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t n = 0; n < count; ++n) {
    out[static_cast<std::size_t>(n)] = product_coefficient(a, b, static_cast<std::size_t>(n));
  }
  return out;
}

std::vector<std::uint64_t> sigma_values_serial(unsigned k, std::int64_t n_max) {
  const SigmaTable table(k, n_max);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    out[static_cast<std::size_t>(n)] = table(n);
  }
  return out;
}

std::vector<std::uint64_t> sigma_values_parallel(unsigned k, std::int64_t n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("sigma values need n_max >= 0");
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_max) + 1, 0);
  parallel_for(1, n_max + 1, [&](std::int64_t n) {
    out[static_cast<std::size_t>(n)] = sigma_by_trial_division(k, n);
  });
  return out;
}

std::vector<Integer> convolution_sums_serial(std::int64_t a, std::int64_t b, std::int64_t n_max,
                                             const SigmaTable& sigma1) {
  check_convolution_inputs(a, b, n_max, sigma1);
  std::vector<Integer> out(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    out[static_cast<std::size_t>(n)] = convolution_sum_at(a, b, n, sigma1);
  }
  return out;
}

std::vector<Integer> convolution_sums_parallel(std::int64_t a, std::int64_t b, std::int64_t n_max,
                                               const SigmaTable& sigma1) {
  check_convolution_inputs(a, b, n_max, sigma1);
  std::vector<Integer> out(static_cast<std::size_t>(n_max) + 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t n = 0; n <= n_max; ++n) {
    out[static_cast<std::size_t>(n)] = convolution_sum_at(a, b, n, sigma1);
  }
  return out;
}

std::vector<std::uint64_t> four_square_counts_serial(std::int64_t n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("four-square counts need n_max >= 0");
  }
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_max) + 1, 0);
  const std::int64_t r = isqrt(n_max);
  for (std::int64_t x1 = -r; x1 <= r; ++x1) {
    const std::int64_t s1 = x1 * x1;
    for (std::int64_t x2 = -r; x2 <= r; ++x2) {
      const std::int64_t s2 = s1 + x2 * x2;
      if (s2 > n_max) continue;
      for (std::int64_t x3 = -r; x3 <= r; ++x3) {
        const std::int64_t s3 = s2 + x3 * x3;
        if (s3 > n_max) continue;
        for (std::int64_t x4 = -r; x4 <= r; ++x4) {
          const std::int64_t s4 = s3 + x4 * x4;
          if (s4 <= n_max) {
            ++out[static_cast<std::size_t>(s4)];
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> four_square_counts_parallel(std::int64_t n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("four-square counts need n_max >= 0");
  }
  const auto size = static_cast<std::size_t>(n_max) + 1;
  const std::int64_t r = isqrt(n_max);

  // Two-square counts p(s), then r_4(n) = sum_s p(s) p(n - s).
  std::vector<std::uint64_t> pairs(size, 0);
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      const std::int64_t s = x * x + y * y;
      if (s <= n_max) {
        ++pairs[static_cast<std::size_t>(s)];
      }
    }
  }
  std::vector<std::uint64_t> out(size, 0);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t n = 0; n <= n_max; ++n) {
    std::uint64_t total = 0;
    for (std::int64_t s = 0; s <= n; ++s) {
      total += pairs[static_cast<std::size_t>(s)] * pairs[static_cast<std::size_t>(n - s)];
    }
    out[static_cast<std::size_t>(n)] = total;
  }
  return out;
}

}  // namespace sigconv::kernels
