#pragma once

#include <stdexcept>
#include <string>

namespace qortho {

// Rejected parameter domain (q, a, b, indices, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivergenceError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class NonConvergenceError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class ZeroDenominatorError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class PrecisionError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

}  // namespace qortho
