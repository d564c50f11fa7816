#pragma once

#include <stdexcept>
#include <string>

namespace liecontract {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (bad rational literal, schema violation, ...).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A matrix that must be invertible is singular.
class SingularMatrixError : public Error {
public:
  SingularMatrixError() : Error("not invertible") {}
};

/// A signature or diagonal family diverges on a nonzero bracket triple.
class DivergenceError : public Error {
public:
  DivergenceError(const std::string& what, int i, int j, int k)
      : Error(what), i(i), j(j), k(k) {}
  int i, j, k;
};

}  // namespace liecontract
