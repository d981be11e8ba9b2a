#pragma once

#include <stdexcept>
#include <string>

namespace hashpim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate, range or line index outside the crossbar.
class AddressError : public Error {
 public:
  using Error::Error;
};

/// A cycle bundle that violates the partition/alignment rules.
class SchedulingError : public Error {
 public:
  using Error::Error;
};

/// A gate read a cell that was never written since the last reset.
class StrictnessError : public Error {
 public:
  using Error::Error;
};

/// Scratch cells ran out while expanding a macro-op.
class AllocationError : public Error {
 public:
  using Error::Error;
};

/// An operation whose operands do not lie on one row or one column.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// More messages than the configured crossbars can hold.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration or numeric input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hashpim
