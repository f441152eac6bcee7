#ifndef SIGCONV_EISENSTEIN_HPP
#define SIGCONV_EISENSTEIN_HPP

#include <cstddef>
#include <cstdint>

#include "sigconv/qseries.hpp"

namespace sigconv {

// L(q) = 1 - 24 sum sigma(n) q^n (weight 2).
QSeries l_series(std::size_t order);

// M(q) = 1 + 240 sum sigma_3(n) q^n (weight 4).
QSeries m_series(std::size_t order);

// a L(q^a) - b L(q^b); constant term a - b.
QSeries l_combination(std::int64_t a, std::int64_t b, std::size_t order);

}  // namespace sigconv

#endif  // SIGCONV_EISENSTEIN_HPP
