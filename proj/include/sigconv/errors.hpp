#ifndef SIGCONV_ERRORS_HPP
#define SIGCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigconv {

// Series index or comparison bound beyond the truncation order.
class OutOfRange : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class ZeroConstantTerm : public std::domain_error {
public:
  ZeroConstantTerm() : std::domain_error("series has zero constant term") {}
};

// cube_root preconditions violated (leading index, leading coefficient).
class BadLeadingTerm : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Eta quotient whose q-power sum_delta delta*r_delta is not a multiple of 24.
class FractionalExponent : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NegativeValuation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Malformed eta quotient specification (bad text, divisor not dividing level).
class InvalidSpec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Linear system has no exact solution.
class Inconsistent : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Underdetermined : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A closed-form evaluator produced a non-integral (or negative) count.
class NonIntegralResult : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace sigconv

#endif  // SIGCONV_ERRORS_HPP
