#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite angle, bad topology size, negative step count, bad threshold.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A line shift would carry amplitude past the pre-allocated window.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

/// Inverse step requested on a state that has not been stepped.
class NothingToUndo : public Error {
 public:
  using Error::Error;
};

class InvalidPosition : public Error {
 public:
  using Error::Error;
};

/// Operation is defined for one topology kind only.
class UnsupportedTopology : public Error {
 public:
  using Error::Error;
};

/// A series is shorter than an analysis requires.
class SeriesTooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
