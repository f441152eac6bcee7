#include "sigconv/modforms.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "sigconv/eisenstein.hpp"
#include "sigconv/errors.hpp"
#include "sigconv/eta.hpp"

namespace sigconv {

Basis28 Basis28::build(std::size_t order) {
  if (order < sturm_bound(28)) {
    throw std::invalid_argument("Basis28 needs order >= 16");
  }
  Basis28 basis;
  basis.order = order;
  const QSeries m = m_series(order);
  for (const auto t : kEisensteinDilations) {
    basis.eisenstein_parts.push_back(substitute_power(m, static_cast<std::size_t>(t)));
  }
  const CuspTable cusp(order);
  for (int j = 1; j <= static_cast<int>(kCuspDimension); ++j) {
    basis.cusp_parts.push_back(cusp.series(j));
  }
  return basis;
}

const QSeries& Basis28::element(std::size_t i) const {
  if (i < kEisensteinDimension) {
    return eisenstein_parts.at(i);
  }
  return cusp_parts.at(i - kEisensteinDimension);
}

std::vector<Rational> CoeffVector::flatten() const {
  std::vector<Rational> out;
  out.reserve(kBasisSize);
  for (const auto t : kEisensteinDilations) {
    const auto it = x.find(t);
    out.push_back(it == x.end() ? Rational() : it->second);
  }
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

CoeffVector CoeffVector::from_flat(std::span<const Rational> values) {
  if (values.size() != kBasisSize) {
    throw std::invalid_argument("CoeffVector needs exactly 15 values");
  }
  CoeffVector out;
  for (std::size_t i = 0; i < kEisensteinDimension; ++i) {
    out.x[kEisensteinDilations[i]] = values[i];
  }
  for (std::size_t j = 0; j < kCuspDimension; ++j) {
    out.y[j] = values[kEisensteinDimension + j];
  }
  return out;
}

std::size_t sturm_bound(std::int64_t level) { return sturm_bound(level, 4); }

std::size_t sturm_bound(std::int64_t level, unsigned weight) {
  if (level < 1 || weight < 1) {
    throw std::invalid_argument("sturm_bound needs level >= 1 and weight >= 1");
  }
  Rational bound(level * static_cast<std::int64_t>(weight), 12);
  for (const auto p : prime_divisors(level)) {
    bound *= Rational(p + 1, p);
  }
  return ceil(bound).get_ui();
}

RationalMatrix coefficient_matrix(std::span<const QSeries> series, std::size_t n_max) {
  RationalMatrix m(n_max + 1, std::vector<Rational>(series.size()));
  for (std::size_t j = 0; j < series.size(); ++j) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      m[n][j] = series[j].coefficient(n);
    }
  }
  return m;
}

namespace {

struct Elimination {
  RationalMatrix rows;                  // reduced; last column is the right-hand side
  std::vector<std::size_t> pivot_rows;  // pivot row for each column, in column order
  std::size_t rank = 0;
};

// Gauss-Jordan over the first `columns` columns of `rows`.
Elimination eliminate(RationalMatrix rows, std::size_t columns) {
  Elimination e;
  const std::size_t height = rows.size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < columns && next < height; ++col) {
    std::size_t pivot = next;
    while (pivot < height && rows[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == height) {
      continue;
    }
    std::swap(rows[pivot], rows[next]);
    const Rational inv = Rational(1) / rows[next][col];
    for (auto& v : rows[next]) {
      v *= inv;
    }
    for (std::size_t r = 0; r < height; ++r) {
      if (r == next || rows[r][col].is_zero()) {
        continue;
      }
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < rows[r].size(); ++c) {
        rows[r][c] -= factor * rows[next][c];
      }
    }
    e.pivot_rows.push_back(next);
    ++next;
  }
  e.rank = next;
  e.rows = std::move(rows);
  return e;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
  const std::size_t columns = m.empty() ? 0 : m.front().size();
  return eliminate(std::move(m), columns).rank;
}

std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("solve_exact: row count mismatch");
  }
  const std::size_t columns = a.empty() ? 0 : a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != columns) {
      throw std::invalid_argument("solve_exact: ragged matrix");
    }
    a[r].push_back(std::move(b[r]));
  }
  const Elimination e = eliminate(std::move(a), columns);
  for (std::size_t r = e.rank; r < e.rows.size(); ++r) {
    if (!e.rows[r][columns].is_zero()) {
      throw Inconsistent("linear system has no exact solution (residual in row " +
                         std::to_string(r) + ")");
    }
  }
  if (e.rank < columns) {
    throw Underdetermined("linear system has rank " + std::to_string(e.rank) + " < " +
                          std::to_string(columns) + " unknowns");
  }
  std::vector<Rational> x(columns);
  for (std::size_t col = 0; col < columns; ++col) {
    x[col] = e.rows[e.pivot_rows[col]][columns];
  }
  return x;
}

CoeffVector decompose(const QSeries& target, const Basis28& basis, std::size_t n_max) {
  if (n_max < sturm_bound(28)) {
    throw std::invalid_argument("decompose needs n_max >= 16");
  }
  if (target.order() < n_max || basis.order < n_max) {
    throw OutOfRange("decompose: series shorter than n_max");
  }
  std::vector<QSeries> elements;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    elements.push_back(basis.element(i));
  }
  RationalMatrix a = coefficient_matrix(elements, n_max);
  std::vector<Rational> b(target.coeffs().begin(),
                          target.coeffs().begin() + static_cast<std::ptrdiff_t>(n_max) + 1);
  return CoeffVector::from_flat(solve_exact(std::move(a), std::move(b)));
}

QSeries reconstruct(const CoeffVector& coeffs, const Basis28& basis) {
  const auto flat = coeffs.flatten();
  QSeries out(basis.order);
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    if (!flat[i].is_zero()) {
      out = out + basis.element(i).scaled(flat[i]);
    }
  }
  return out;
}

IdentityCheck verify_identity(const QSeries& lhs, const QSeries& rhs, std::int64_t level) {
  IdentityCheck check;
  check.sturm_bound = sturm_bound(level);
  check.holds = equal_up_to(lhs, rhs, check.sturm_bound);
  check.checked_order = std::min(lhs.order(), rhs.order());
  check.corroborated = equal_up_to(lhs, rhs, check.checked_order);
  return check;
}

QSeries squared_l_combination(std::int64_t a, std::int64_t b, std::size_t order) {
  const QSeries inner = l_combination(a, b, order);
  return inner * inner;
}

namespace {

CoeffVector table(std::array<Rational, 6> x, std::array<Rational, 9> y) {
  std::vector<Rational> flat(x.begin(), x.end());
  flat.insert(flat.end(), y.begin(), y.end());
  return CoeffVector::from_flat(flat);
}

}  // namespace

const CoeffVector& published_decomposition(std::int64_t a, std::int64_t b) {
  using R = Rational;
  // x_1, x_2, x_4, x_7, x_14, x_28 | y_1 .. y_9
  static const std::map<std::pair<std::int64_t, std::int64_t>, CoeffVector> tables = {
      {{1, 28},
       table({R(118, 125), R(-21, 125), R(-112, 125), R(-343, 125), R(-1029, 125), R(92512, 125)},
             {R(-13452, 25), R(-86004, 25), R(252), R(40188, 25), R(407232, 25), R(68544, 5),
              R(-52416, 25), R(2327808, 25), R(2731008, 25)})},
      {{4, 7},
       table({R(-7, 125), R(-21, 125), R(1888, 125), R(5782, 125), R(-1029, 125), R(-5488, 125)},
             {R(-8364, 175), R(-5004, 25), R(324), R(10716, 175), R(-24768, 25), R(28224, 5),
              R(-138816, 25), R(676608, 25), R(273408, 25)})},
      {{1, 14},
       table({R(111, 125), R(-56, 125), R(0), R(-686, 125), R(21756, 125), R(0)},
             {R(0), R(-4608, 25), R(672, 25), R(10272, 25), R(0), R(0), R(0), R(0), R(0)})},
      {{2, 7},
       table({R(-14, 125), R(444, 125), R(0), R(5439, 125), R(-2744, 125), R(0)},
             {R(0), R(-4608, 25), R(10272, 25), R(672, 25), R(0), R(0), R(0), R(0), R(0)})},
      {{1, 7},
       table({R(18, 25), R(0), R(0), R(882, 25), R(0), R(0)},
             {R(576, 5), R(4 * 576, 5), R(0), R(0), R(0), R(0), R(0), R(0), R(0)})},
  };
  const auto it = tables.find({a, b});
  if (it == tables.end()) {
    throw std::out_of_range("no published decomposition for (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
  }
  return it->second;
}

}  // namespace sigconv
