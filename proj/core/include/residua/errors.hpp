#pragma once

#include <stdexcept>
#include <string>

namespace residua {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad permutation, inconsistent degrees, unknown class, schema violation.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured cap (degree, element count, subgroup count) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// No strategy applies at the configured scale; raised instead of guessing.
class Undecidable : public Error {
 public:
  using Error::Error;
};

// Bundled data failed validation.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace residua
